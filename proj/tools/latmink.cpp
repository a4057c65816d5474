// Command-line front end: counting, minima, volumes, difference sets,
// corpus generation, batch verification and congruence witnesses.

#include "latmink/corpus.hpp"
#include "latmink/counting.hpp"
#include "latmink/diffsets.hpp"
#include "latmink/io.hpp"
#include "latmink/theorems.hpp"
#include "latmink/verification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace lm = latmink;

namespace {

constexpr int kInputError = 2;

std::string format_point_set(const lm::PointSet& u) {
  std::string s = "{";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + u[i].str();
  return s + "}";
}

std::vector<lm::Check> parse_checks(const std::string& list) {
  if (list == "all") return lm::all_checks();
  std::vector<lm::Check> checks;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    auto c = lm::parse_check(name);
    if (!c) throw std::invalid_argument("unknown check '" + name + "'");
    if (std::find(checks.begin(), checks.end(), *c) == checks.end()) checks.push_back(*c);
  }
  return checks;
}

int cmd_count(const std::string& path, bool list_interior) {
  const lm::Body k = lm::read_body_file(path);
  const auto c = lm::count(k);
  std::cout << "total=" << c.total << " interior=" << c.interior << " boundary=" << c.boundary << "\n";
  if (list_interior)
    for (const auto& p : lm::interior_lattice_points(k)) std::cout << p.str() << "\n";
  return 0;
}

int cmd_minima(const std::string& path) {
  const auto m = lm::successive_minima(lm::read_body_file(path));
  for (std::size_t i = 0; i < m.values.size(); ++i)
    std::cout << "lambda_" << i + 1 << "=" << m.values[i].str() << " witness=" << m.witnesses[i].str() << "\n";
  return 0;
}

int cmd_volume(const std::string& path) {
  std::cout << "volume=" << lm::volume(lm::read_body_file(path)) << "\n";
  return 0;
}

int cmd_diffset(const std::string& path, bool classify) {
  const lm::PointSet u = lm::read_point_set_file(path);
  if (u.empty()) throw std::invalid_argument("point set is empty");
  if (!classify) {
    std::cout << "|U|=" << u.size() << " |U-U|=" << lm::difference_set(u).size() << "\n";
    return 0;
  }
  const auto c = lm::classify_extremal(u);
  std::cout << "|U-U|=" << c.difference_count << " bound=" << c.bound << " verdict=" << c.verdict_name() << "\n";
  return 0;
}

int cmd_search(std::size_t k, std::size_t grid) {
  const auto r = lm::brute_force_min_diffset(k, grid);
  std::cout << "k=" << k << " grid=" << grid << " min=" << r.min_value << " bound=" << lm::planar_min_bound(k)
            << " minimizers=" << r.minimizers.size() << "\n";
  for (const auto& u : r.minimizers)
    std::cout << format_point_set(u) << " verdict=" << lm::classify_extremal(u).verdict_name() << "\n";
  return 0;
}

int cmd_witness(const std::string& path, long long m) {
  const auto witnesses = lm::congruence_witnesses(lm::read_body_file(path), m);
  std::cout << "pairs=" << witnesses.size() << "\n";
  for (const auto& w : witnesses)
    std::cout << "v=" << w.v.str() << " w=" << w.w.str() << " witness=" << w.witness.str()
              << " interior=" << (w.interior ? "true" : "false") << "\n";
  return 0;
}

int cmd_verify(const std::string& dir, const std::string& checks, const std::string& out_path, unsigned jobs,
               std::uint64_t seed) {
  lm::RunConfig config;
  config.checks = parse_checks(checks);
  if (config.checks.empty()) throw std::invalid_argument("empty check set");
  config.jobs = jobs == 0 ? lm::default_jobs() : jobs;
  config.seed = seed;
  const lm::Corpus corpus = lm::read_corpus(dir);
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw lm::FormatError("cannot write " + out_path);
  out << lm::report_header(corpus, config) << std::flush;
  const auto result = lm::run_verification(corpus, config, [&](const std::vector<lm::BoundReport>& reports) {
    for (const auto& r : reports) out << lm::format_report(r) << "\n";
    out.flush();
  });
  const std::string summary = lm::format_summary(result.summary);
  out << summary;
  if (!out) throw lm::FormatError("write failed for " + out_path);
  std::cout << summary;
  return result.summary.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice-point counting and discrete Minkowski-type bounds"};
  app.require_subcommand(1);

  std::string body_path, points_path, corpus_dir, out_path, checks = "all";
  bool interior = false, classify = false, standards = false, general = false;
  std::size_t k = 0, grid = 2, count = 100, dim = 3;
  int radius = 2;
  long long modulus = 3;
  unsigned jobs = 0;
  std::uint64_t seed = 0;

  auto* count_cmd = app.add_subcommand("count", "Count lattice points of a body");
  count_cmd->add_option("--body", body_path, "Body file")->required();
  count_cmd->add_flag("--interior", interior, "Also list the interior lattice points");

  auto* minima_cmd = app.add_subcommand("minima", "Successive minima of a 0-symmetric body");
  minima_cmd->add_option("--body", body_path, "Body file")->required();

  auto* volume_cmd = app.add_subcommand("volume", "Exact volume of a polytope (n <= 4)");
  volume_cmd->add_option("--body", body_path, "Body file")->required();

  auto* diffset_cmd = app.add_subcommand("diffset", "Difference set of a point set");
  diffset_cmd->add_option("--points", points_path, "Point-set file")->required();
  diffset_cmd->add_flag("--classify", classify, "Classify against the planar lower bound");

  auto* search_cmd = app.add_subcommand("search", "Exhaustive searches");
  auto* extremal_cmd = search_cmd->add_subcommand("extremal-diffsets", "Minimal |U-U| over k-subsets of [0,R]^2");
  search_cmd->require_subcommand(1);
  extremal_cmd->add_option("--k", k, "Number of points")->required();
  extremal_cmd->add_option("--grid", grid, "Grid radius R")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate a corpus directory");
  gen_cmd->require_subcommand(1);
  auto* gen_poly = gen_cmd->add_subcommand("polygons", "All 0-symmetric lattice polygons in [-r,r]^2");
  gen_poly->add_option("--radius", radius, "Vertex radius (1..3)")->required();
  gen_poly->add_option("--out", corpus_dir, "Output directory")->required();
  auto* gen_random = gen_cmd->add_subcommand("random", "Random 0-symmetric lattice polytopes");
  gen_random->add_option("--dim", dim, "Dimension (3 or 4)")->required();
  gen_random->add_option("--radius", radius, "Coordinate radius (1..4)");
  gen_random->add_option("--count", count, "Number of bodies");
  gen_random->add_option("--seed", seed, "Seed");
  gen_random->add_flag("--include-standards", standards, "Add cube, crosspolytope and slab parallelepipeds");
  gen_random->add_option("--out", corpus_dir, "Output directory")->required();
  auto* gen_ell = gen_cmd->add_subcommand("ellipsoids", "Random rational ellipsoids");
  gen_ell->add_option("--dim", dim, "Dimension (2 or 3)")->required();
  gen_ell->add_option("--count", count, "Number of bodies");
  gen_ell->add_option("--seed", seed, "Seed");
  gen_ell->add_flag("--general", general, "Random centers instead of the origin");
  gen_ell->add_flag("--include-standards", standards, "Add the unit and radius-sqrt(2) balls");
  gen_ell->add_option("--out", corpus_dir, "Output directory")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Verify bounds over a corpus");
  verify_cmd->add_option("--corpus", corpus_dir, "Corpus directory")->required();
  verify_cmd->add_option("--checks", checks, "Comma-separated checks, or 'all'");
  verify_cmd->add_option("--out", out_path, "Report file")->required();
  verify_cmd->add_option("--jobs", jobs, "Worker threads (default: LATMINK_JOBS or hardware)");
  verify_cmd->add_option("--seed", seed, "Seed recorded in the report header");

  auto* witness_cmd = app.add_subcommand("witness", "Congruence witnesses of a 0-symmetric body");
  witness_cmd->add_option("--body", body_path, "Body file")->required();
  witness_cmd->add_option("--mod", modulus, "Modulus m >= 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*count_cmd) return cmd_count(body_path, interior);
    if (*minima_cmd) return cmd_minima(body_path);
    if (*volume_cmd) return cmd_volume(body_path);
    if (*diffset_cmd) return cmd_diffset(points_path, classify);
    if (*extremal_cmd) return cmd_search(k, grid);
    if (*witness_cmd) return cmd_witness(body_path, modulus);
    if (*verify_cmd) return cmd_verify(corpus_dir, checks, out_path, jobs, seed);
    lm::Corpus corpus;
    if (*gen_poly) {
      corpus = lm::gen_symmetric_polygons(radius);
    } else if (*gen_random) {
      corpus = lm::gen_random_symmetric_polytopes({dim, radius, count, seed, standards});
    } else if (*gen_ell) {
      corpus = lm::gen_ellipsoids({dim, count, seed, !general, standards});
    }
    lm::write_corpus(corpus, corpus_dir);
    std::cout << "corpus=" << corpus.id << " bodies=" << corpus.bodies.size() << " dir=" << corpus_dir << "\n";
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const lm::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

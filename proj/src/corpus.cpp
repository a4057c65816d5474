#include "latmink/corpus.hpp"

#include "latmink/io.hpp"
#include "latmink/random.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace latmink {

namespace {

using Point2 = std::pair<long long, long long>;

long long cross(const Point2& a, const Point2& b) { return a.first * b.second - a.second * b.first; }

long long turn(const Point2& a, const Point2& b, const Point2& c) {
  return cross({b.first - a.first, b.second - a.second}, {c.first - b.first, c.second - b.second});
}

Point2 neg(const Point2& p) { return {-p.first, -p.second}; }

std::string padded(std::size_t i, int width = 5) {
  std::ostringstream os;
  os << std::setw(width) << std::setfill('0') << i;
  return os.str();
}

void sort_entries(Corpus& c) {
  std::sort(c.bodies.begin(), c.bodies.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
}

void add_standard_polytopes(Corpus& c, std::size_t n) {
  const std::string d = std::to_string(n);
  c.bodies.push_back({"std-cube" + d, cube(n)});
  c.bodies.push_back({"std-cross" + d, crosspolytope(n)});
  for (int ell : {2, 3}) c.bodies.push_back({"std-slab" + d + "-" + std::to_string(ell), slab_parallelepiped(n, ell)});
}

RationalMatrix scaled_identity(std::size_t n, const Rational& s) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

}  // namespace

Corpus gen_symmetric_polygons(int radius) {
  if (radius < 1 || radius > 3) throw std::invalid_argument("gen_symmetric_polygons: radius must lie in [1, 3]");
  std::vector<Point2> half;
  for (long long x = -radius; x <= radius; ++x)
    for (long long y = 0; y <= radius; ++y)
      if (y > 0 || x > 0) half.push_back({x, y});
  std::sort(half.begin(), half.end(), [](const Point2& a, const Point2& b) {
    const long long c = cross(a, b);
    if (c != 0) return c > 0;
    return a.first * a.first + a.second * a.second < b.first * b.first + b.second * b.second;
  });

  std::vector<std::vector<RationalVector>> polygons;
  std::vector<Point2> chain;
  std::function<void(std::size_t)> extend = [&](std::size_t next) {
    const std::size_t k = chain.size();
    if (k >= 2) {
      const Point2 first_neg = neg(chain.front());
      if (turn(chain[k - 2], chain[k - 1], first_neg) > 0 && turn(neg(chain.back()), chain[0], chain[1]) > 0) {
        std::vector<RationalVector> verts;
        for (const auto& p : chain) {
          verts.push_back({Rational(p.first), Rational(p.second)});
          verts.push_back({Rational(-p.first), Rational(-p.second)});
        }
        std::sort(verts.begin(), verts.end());
        polygons.push_back(std::move(verts));
      }
    }
    for (std::size_t j = next; j < half.size(); ++j) {
      const Point2& p = half[j];
      if (k >= 1 && cross(chain.back(), p) <= 0) continue;
      if (k >= 2 && turn(chain[k - 2], chain[k - 1], p) <= 0) continue;
      chain.push_back(p);
      extend(j + 1);
      chain.pop_back();
    }
  };
  extend(0);
  std::sort(polygons.begin(), polygons.end());
  polygons.erase(std::unique(polygons.begin(), polygons.end()), polygons.end());

  Corpus c;
  c.id = "polygons-r" + std::to_string(radius);
  c.provenance = "gen_symmetric_polygons radius=" + std::to_string(radius);
  for (std::size_t i = 0; i < polygons.size(); ++i)
    c.bodies.push_back({"poly-r" + std::to_string(radius) + "-" + padded(i + 1),
                        Body::vpolytope(VPolytope{2, std::move(polygons[i])})});
  return c;
}

Corpus gen_random_symmetric_polytopes(const RandomPolytopeOptions& o) {
  if (o.dim != 3 && o.dim != 4) throw std::invalid_argument("gen_random_symmetric_polytopes: dimension must be 3 or 4");
  if (o.radius < 1 || o.radius > 4) throw std::invalid_argument("gen_random_symmetric_polytopes: radius must lie in [1, 4]");
  const std::size_t n = o.dim;
  SplitMix64 rng(o.seed);
  Corpus c;
  c.id = "random-n" + std::to_string(n) + "-r" + std::to_string(o.radius);
  c.provenance = "gen_random_symmetric_polytopes n=" + std::to_string(n) + " radius=" + std::to_string(o.radius) +
                 " count=" + std::to_string(o.count) + " seed=" + std::to_string(o.seed) +
                 " standards=" + (o.include_standards ? "yes" : "no");
  for (std::size_t i = 0; i < o.count; ++i) {
    for (;;) {
      const auto m = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n + 3)));
      std::vector<RationalVector> pts;
      for (std::size_t j = 0; j < m; ++j) {
        RationalVector p(n);
        for (auto& x : p) x = Rational(rng.between(-o.radius, o.radius));
        RationalVector q = p;
        for (auto& x : q) x = -x;
        pts.push_back(std::move(p));
        pts.push_back(std::move(q));
      }
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      if (affine_dim(pts) != n) continue;
      c.bodies.push_back({"rand-n" + std::to_string(n) + "-" + padded(i + 1), Body::vpolytope(VPolytope{n, std::move(pts)})});
      break;
    }
  }
  if (o.include_standards) add_standard_polytopes(c, n);
  sort_entries(c);
  return c;
}

Corpus gen_ellipsoids(const EllipsoidOptions& o) {
  if (o.dim != 2 && o.dim != 3) throw std::invalid_argument("gen_ellipsoids: dimension must be 2 or 3");
  const std::size_t n = o.dim;
  SplitMix64 rng(o.seed);
  Corpus c;
  const std::string tag = o.centered ? "c" : "g";
  c.id = "ellipsoids-n" + std::to_string(n) + "-" + tag;
  c.provenance = "gen_ellipsoids n=" + std::to_string(n) + " count=" + std::to_string(o.count) +
                 " seed=" + std::to_string(o.seed) + " centered=" + (o.centered ? "yes" : "no") +
                 " standards=" + (o.include_standards ? "yes" : "no");
  for (std::size_t i = 0; i < o.count; ++i) {
    IntMatrix l(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      l(r, r) = rng.between(1, 3);
      for (std::size_t col = r + 1; col < n; ++col) l(r, col) = rng.between(-2, 2);
    }
    if (determinant(l) == 0) throw std::logic_error("gen_ellipsoids: degenerate triangular factor");
    const Rational d(rng.between(1, 16));
    RationalMatrix form(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col) {
        Integer s;
        for (std::size_t k = 0; k < n; ++k) s += l(k, r) * l(k, col);
        form(r, col) = Rational(s) / d;
      }
    RationalVector center(n);
    if (!o.centered)
      for (auto& x : center) {
        const std::int64_t q = rng.between(1, 4);
        x = Rational(Integer(rng.between(-q, q)), Integer(q));
      }
    c.bodies.push_back({"ell-n" + std::to_string(n) + "-" + tag + "-" + padded(i + 1), ellipsoid(form, center)});
  }
  if (o.include_standards) {
    const RationalVector origin(n);
    c.bodies.push_back({"std-ball" + std::to_string(n) + "-1", ellipsoid(scaled_identity(n, 1), origin)});
    c.bodies.push_back({"std-ball" + std::to_string(n) + "-2", ellipsoid(scaled_identity(n, Rational(1, 2)), origin)});
    if (n == 2) {
      RationalMatrix f = scaled_identity(2, 1);
      f(0, 0) = Rational(1, 9);
      c.bodies.push_back({"std-stretched2", ellipsoid(f, origin)});
    }
  }
  sort_entries(c);
  return c;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ostringstream meta;
  meta << "id: " << corpus.id << "\nprovenance: " << corpus.provenance << "\n";
  for (const auto& e : corpus.bodies) {
    write_text_file(dir / (e.id + ".body"), serialize_body(e.body));
    meta << "body: " << e.id << "\n";
  }
  write_text_file(dir / "corpus.meta", meta.str());
}

Corpus read_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw FormatError("not a corpus directory: " + dir.string());
  Corpus c;
  std::vector<std::string> ids;
  const auto meta_path = dir / "corpus.meta";
  if (std::filesystem::exists(meta_path)) {
    std::istringstream in(read_text_file(meta_path));
    std::string line;
    while (std::getline(in, line)) {
      if (line.rfind("id: ", 0) == 0)
        c.id = line.substr(4);
      else if (line.rfind("provenance: ", 0) == 0)
        c.provenance = line.substr(12);
      else if (line.rfind("body: ", 0) == 0)
        ids.push_back(line.substr(6));
      else if (!line.empty())
        throw FormatError("corpus.meta: unexpected line '" + line + "'");
    }
  } else {
    c.id = dir.filename().string();
    for (const auto& f : std::filesystem::directory_iterator(dir))
      if (f.path().extension() == ".body") ids.push_back(f.path().stem().string());
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw FormatError("duplicate body id in corpus");
  for (const auto& id : ids) {
    try {
      c.bodies.push_back({id, read_body_file(dir / (id + ".body"))});
    } catch (const std::invalid_argument& e) {
      throw FormatError(id + ".body: " + e.what());
    } catch (const FormatError& e) {
      throw FormatError(id + ".body: " + e.what());
    }
  }
  return c;
}

}  // namespace latmink

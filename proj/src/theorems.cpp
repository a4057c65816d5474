#include "latmink/theorems.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace latmink {

namespace {

constexpr std::array<std::pair<Check, std::string_view>, 11> kCheckNames{{
    {Check::kMain, "main"},
    {Check::kMinkowskiVolume, "minkowski-vol"},
    {Check::kMinkowskiDiscrete, "minkowski-disc"},
    {Check::kBhw, "bhw"},
    {Check::kBhwStrictlyConvex, "bhw-sc"},
    {Check::kVanDerCorput, "vdc"},
    {Check::kLambda1Interior, "lambda1-int"},
    {Check::kCombined, "combined"},
    {Check::kScSymmetric, "sc-sym"},
    {Check::kScGeneral, "sc-gen"},
    {Check::kBhwConjecture, "bhw-conjecture"},
}};

Integer pow2(std::size_t e) { return pow_int(2, static_cast<unsigned>(e)); }

Integer two_over(const GaugeValue& lambda, bool round_up) {
  const GaugeValue q = lambda.reciprocal_times(2);
  return round_up ? q.ceil() : q.floor();
}

std::vector<LatticePoint> lattice_vertices(const Body& k) {
  std::vector<LatticePoint> out;
  for (const auto& v : k.vertices()) out.push_back(*to_lattice_point(v));
  return out;
}

bool is_polytope_of_dim_at_most_4(const Body& k) { return k.is_polytope() && k.dim() <= 4; }

}  // namespace

std::string_view check_name(Check c) {
  for (const auto& [check, name] : kCheckNames)
    if (check == c) return name;
  throw std::logic_error("check_name: unknown check");
}

std::optional<Check> parse_check(std::string_view name) {
  for (const auto& [check, n] : kCheckNames)
    if (n == name) return check;
  return std::nullopt;
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> v;
    for (const auto& entry : kCheckNames) v.push_back(entry.first);
    return v;
  }();
  return checks;
}

// --- bound evaluators -------------------------------------------------------

Integer bound_main(std::size_t n, const Integer& interior) {
  if (n == 0) throw std::invalid_argument("bound_main: n must be positive");
  return pow_int(3, static_cast<unsigned>(n - 1)) * (interior + 2);
}

Integer bound_minkowski_volume(std::size_t n) { return pow2(n); }
Integer bound_minkowski_discrete(std::size_t n) { return pow_int(3, static_cast<unsigned>(n)); }

Integer bound_bhw(std::size_t n, const GaugeValue& lambda1) {
  return pow_int(two_over(lambda1, false) + 1, static_cast<unsigned>(n));
}

Integer bound_bhw_strictly_convex(std::size_t n, const GaugeValue& lambda1) {
  return 2 * pow_int(two_over(lambda1, true), static_cast<unsigned>(n)) - 1;
}

Integer bound_van_der_corput(std::size_t n, const Integer& interior) {
  if (n == 0) throw std::invalid_argument("bound_van_der_corput: n must be positive");
  return pow2(n - 1) * (interior + 1);
}

Integer bound_combined(std::size_t n, const Integer& interior) {
  return pow_int(interior + 2, static_cast<unsigned>(n));
}

Integer bound_sc_symmetric(std::size_t n, const Integer& interior) { return pow2(n) * (interior + 1) - 1; }

Integer bound_sc_general(std::size_t n, const Integer& interior) {
  if (n == 0) throw std::invalid_argument("bound_sc_general: n must be positive");
  return 2 * (pow2(n - 1) - 1) * ceil_div(2 * (interior + 1), 3) + interior + 2;
}

Integer bound_bhw_conjecture(const std::vector<GaugeValue>& minima) {
  Integer product = 1;
  for (const auto& l : minima) product *= two_over(l, false) + 1;
  return product;
}

Integer c_bound(std::size_t n, const Integer& k) {
  if (n == 0) throw std::invalid_argument("c_bound: n must be positive");
  return 2 * (pow2(n - 1) - 1) * ceil_div(2 * (k + 1), 3) + 2;
}

Rational remark_sc_bound(std::size_t n, const Integer& i) {
  return Rational(pow2(n + 1) * i, 3) + Rational(pow2(n + 2));
}

Integer helly_number(std::size_t n) { return pow2(n); }

// --- equality case ----------------------------------------------------------

bool certificate_holds(const Body& k, const EqualityCertificate& cert) {
  if (!k.is_lattice_polytope() || cert.transform.rows() != k.dim() || !cert.transform.is_square()) return false;
  if (!is_unimodular(cert.transform) || cert.ell < 1) return false;
  std::vector<RationalVector> image;
  for (const auto& v : k.vertices()) image.push_back(cert.transform * v);
  std::sort(image.begin(), image.end());
  const Body slab = slab_parallelepiped(k.dim(), cert.ell);
  return std::equal(image.begin(), image.end(), slab.vertices().begin(), slab.vertices().end());
}

std::optional<EqualityCertificate> equality_parallelepiped(const Body& k) {
  if (!k.is_polytope() || !k.is_zero_symmetric()) return std::nullopt;
  return equality_parallelepiped(k, count(k).interior);
}

std::optional<EqualityCertificate> equality_parallelepiped(const Body& k, const Integer& interior_count) {
  const std::size_t n = k.dim();
  if (!k.is_lattice_polytope() || !k.is_zero_symmetric() || n > 4) return std::nullopt;
  if (k.vertices().size() != (std::size_t{1} << n)) return std::nullopt;
  if (interior_count < 1 || interior_count % 2 == 0) return std::nullopt;
  const Integer ell = (interior_count + 1) / 2;

  const std::vector<LatticePoint> verts = lattice_vertices(k);  // sorted
  const LatticePoint& top = verts.back();
  const std::size_t others = verts.size() - 1;

  // Neighbours of the top vertex differ from it by twice a generator.
  std::vector<LatticePoint> gens;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  for (bool more = others >= n; more && gens.empty();) {
    std::vector<LatticePoint> g;
    bool integral = true;
    for (auto i : pick) {
      LatticePoint d = top - verts[i];
      for (std::size_t c = 0; c < n; ++c) {
        if (d[c] % 2 != 0) integral = false;
        d[c] /= 2;
      }
      g.push_back(std::move(d));
    }
    if (integral && linearly_independent(g)) {
      std::vector<LatticePoint> generated;
      for (std::size_t mask = 0; mask < verts.size(); ++mask) {
        LatticePoint p = top;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1) p -= Integer(2) * g[i];
        generated.push_back(std::move(p));
      }
      std::sort(generated.begin(), generated.end());
      if (generated == verts) gens = std::move(g);
    }
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == others - n + (i - 1)) --i;
    if (i == 0) {
      more = false;
    } else {
      ++pick[i - 1];
      for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  if (gens.empty()) return std::nullopt;
  std::sort(gens.begin(), gens.end(), std::greater<>());

  IntMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) m(r, c) = gens[c][r];
  if (abs(determinant(m)) != ell) return std::nullopt;
  const auto factors = smith_normal_form(m).invariant_factors();
  for (std::size_t i = 0; i + 1 < factors.size(); ++i)
    if (factors[i] != 1) return std::nullopt;

  for (std::size_t j = n; j-- > 0;) {
    bool divisible = true;
    for (std::size_t r = 0; r < n; ++r) divisible = divisible && m(r, j) % ell == 0;
    if (!divisible) continue;
    IntMatrix reduced = m;
    for (std::size_t r = 0; r < n; ++r) reduced(r, j) /= ell;
    if (!is_unimodular(reduced)) continue;
    IntMatrix a = inverse_unimodular(reduced);
    a.swap_rows(j, n - 1);
    EqualityCertificate cert{ell, std::move(a)};
    if (!certificate_holds(k, cert))
      throw std::logic_error("equality_parallelepiped: constructed certificate does not re-verify");
    return cert;
  }
  return std::nullopt;
}

// --- verification -----------------------------------------------------------

const LatticeCount& BodyProfile::counts() {
  if (!counts_) counts_ = count(body_);
  return *counts_;
}

const SuccessiveMinima& BodyProfile::minima() {
  if (!minima_) minima_ = successive_minima(body_);
  return *minima_;
}

const Rational& BodyProfile::volume() {
  if (!volume_) volume_ = latmink::volume(body_);
  return *volume_;
}

bool BoundReport::uncertified_equality() const {
  return equality && !certificate && (check == Check::kMain || check == Check::kMinkowskiDiscrete);
}

bool applicable(Check c, BodyProfile& profile) {
  const Body& k = profile.body();
  const bool sym = k.is_zero_symmetric();
  switch (c) {
    case Check::kMain:
    case Check::kBhw:
    case Check::kLambda1Interior:
    case Check::kCombined:
    case Check::kBhwConjecture:
      return sym;
    case Check::kMinkowskiVolume:
      return sym && is_polytope_of_dim_at_most_4(k) && profile.counts().interior == 1;
    case Check::kMinkowskiDiscrete:
      return sym && profile.counts().interior == 1;
    case Check::kBhwStrictlyConvex:
    case Check::kScSymmetric:
      return sym && k.is_strictly_convex();
    case Check::kVanDerCorput:
      return sym && is_polytope_of_dim_at_most_4(k);
    case Check::kScGeneral:
      return k.is_strictly_convex();
  }
  return false;
}

BoundReport verify(Check c, BodyProfile& profile) {
  if (!applicable(c, profile))
    throw std::invalid_argument("verify: check " + std::string(check_name(c)) + " does not apply to body " +
                                profile.id());
  const Body& k = profile.body();
  const std::size_t n = k.dim();
  BoundReport r;
  r.body_id = profile.id();
  r.dim = n;
  r.check = c;
  r.counts = profile.counts();
  const Integer& total = r.counts.total;
  const Integer& interior = r.counts.interior;
  Integer bound;
  GaugeValue measured = GaugeValue::from_rational(total);
  switch (c) {
    case Check::kMain:
      bound = bound_main(n, interior);
      if (interior % 2 == 0) r.note = "even-interior-count";
      break;
    case Check::kMinkowskiVolume:
      bound = bound_minkowski_volume(n);
      measured = GaugeValue::from_rational(profile.volume());
      break;
    case Check::kMinkowskiDiscrete:
      bound = bound_minkowski_discrete(n);
      break;
    case Check::kBhw:
      bound = bound_bhw(n, profile.minima().values.front());
      break;
    case Check::kBhwStrictlyConvex:
      bound = bound_bhw_strictly_convex(n, profile.minima().values.front());
      break;
    case Check::kVanDerCorput:
      bound = bound_van_der_corput(n, interior);
      measured = GaugeValue::from_rational(profile.volume());
      break;
    case Check::kLambda1Interior:
      bound = interior + 1;
      measured = profile.minima().values.front().reciprocal_times(2);
      break;
    case Check::kCombined:
      bound = bound_combined(n, interior);
      break;
    case Check::kScSymmetric:
      bound = bound_sc_symmetric(n, interior);
      break;
    case Check::kScGeneral:
      bound = bound_sc_general(n, interior);
      break;
    case Check::kBhwConjecture:
      bound = bound_bhw_conjecture(profile.minima().values);
      break;
  }
  r.bound = Rational(bound);
  r.measured = measured;
  r.satisfied = r.measured <= r.bound;
  r.equality = r.measured == r.bound;
  if (r.equality && (c == Check::kMain || c == Check::kMinkowskiDiscrete))
    r.certificate = equality_parallelepiped(k, interior);
  if (!r.satisfied && c == Check::kBhwConjecture) r.note = "CONJECTURE-VIOLATION";
  return r;
}

namespace {
BoundReport verify_single(Check c, const Body& k) {
  BodyProfile profile("body", k);
  return verify(c, profile);
}
}  // namespace

BoundReport verify_main(const Body& k) { return verify_single(Check::kMain, k); }
BoundReport verify_minkowski_volume(const Body& k) { return verify_single(Check::kMinkowskiVolume, k); }
BoundReport verify_minkowski_discrete(const Body& k) { return verify_single(Check::kMinkowskiDiscrete, k); }
BoundReport verify_bhw(const Body& k) { return verify_single(Check::kBhw, k); }
BoundReport verify_bhw_sc(const Body& k) { return verify_single(Check::kBhwStrictlyConvex, k); }
BoundReport verify_vdc(const Body& k) { return verify_single(Check::kVanDerCorput, k); }
BoundReport verify_lambda1_interior(const Body& k) { return verify_single(Check::kLambda1Interior, k); }
BoundReport verify_combined(const Body& k) { return verify_single(Check::kCombined, k); }
BoundReport verify_sc_symmetric(const Body& k) { return verify_single(Check::kScSymmetric, k); }
BoundReport verify_sc_general(const Body& k) { return verify_single(Check::kScGeneral, k); }
BoundReport verify_bhw_conjecture(const Body& k) { return verify_single(Check::kBhwConjecture, k); }

std::string format_report(const BoundReport& r) {
  std::ostringstream os;
  os << "body=" << r.body_id << " check=" << check_name(r.check) << " n=" << r.dim << " total=" << r.counts.total
     << " interior=" << r.counts.interior << " boundary=" << r.counts.boundary << " measured=" << r.measured.str()
     << " bound=" << r.bound.str() << " satisfied=" << (r.satisfied ? "true" : "false")
     << " equality=" << (r.equality ? "true" : "false");
  if (r.certificate) os << " ell=" << r.certificate->ell << " transform=" << format_matrix(r.certificate->transform);
  if (r.uncertified_equality()) os << " certificate=missing";
  if (!r.note.empty()) os << " note=" << r.note;
  return os.str();
}

// --- congruence witnesses ---------------------------------------------------

std::vector<CongruenceWitness> congruence_witnesses(const Body& k, const Integer& m) {
  if (m < 2) throw std::invalid_argument("congruence_witnesses: modulus must be at least 2");
  if (!k.is_zero_symmetric()) throw std::invalid_argument("congruence_witnesses: body is not 0-symmetric");
  std::map<ResidueClass, std::vector<LatticePoint>> classes;
  for (const auto& p : lattice_points(k)) classes[residue_class(p, m)].push_back(p);

  std::vector<CongruenceWitness> out;
  for (const auto& [cls, pts] : classes) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        CongruenceWitness w{pts[j], pts[i], pts[j] - pts[i], false};
        for (std::size_t c = 0; c < w.witness.dim(); ++c) w.witness[c] /= m;
        w.interior = contains_interior(k, w.witness);
        if (m >= 3 && !w.interior)
          throw std::logic_error("congruence_witnesses: witness " + w.witness.str() + " is not interior");
        out.push_back(std::move(w));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CongruenceWitness& a, const CongruenceWitness& b) {
    return std::tie(a.v, a.w) < std::tie(b.v, b.w);
  });
  return out;
}

}  // namespace latmink

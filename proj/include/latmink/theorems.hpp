#pragma once

#include "latmink/body.hpp"
#include "latmink/counting.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace latmink {

enum class Check {
  kMain,               // G(K) <= 3^{n-1} (G(int K) + 2)
  kMinkowskiVolume,    // vol(K) <= 2^n when int K holds no nonzero lattice point
  kMinkowskiDiscrete,  // G(K) <= 3^n under the same hypothesis
  kBhw,                // G(K) <= floor(2/l1 + 1)^n
  kBhwStrictlyConvex,  // G(K) <= 2 ceil(2/l1)^n - 1
  kVanDerCorput,       // vol(K) <= 2^{n-1} (G(int K) + 1)
  kLambda1Interior,    // 2/l1 <= G(int K) + 1
  kCombined,           // G(K) <= (G(int K) + 2)^n
  kScSymmetric,        // G(K) <= 2^n (G(int K) + 1) - 1
  kScGeneral,          // G(K) <= 2(2^{n-1}-1) ceil(2(G(int K)+1)/3) + G(int K) + 2
  kBhwConjecture,      // G(K) <= prod floor(2/l_i + 1)
};

std::string_view check_name(Check c);
std::optional<Check> parse_check(std::string_view name);
const std::vector<Check>& all_checks();

// --- bound evaluators -------------------------------------------------------

Integer bound_main(std::size_t n, const Integer& interior);
Integer bound_minkowski_volume(std::size_t n);
Integer bound_minkowski_discrete(std::size_t n);
Integer bound_bhw(std::size_t n, const GaugeValue& lambda1);
Integer bound_bhw_strictly_convex(std::size_t n, const GaugeValue& lambda1);
Integer bound_van_der_corput(std::size_t n, const Integer& interior);
Integer bound_combined(std::size_t n, const Integer& interior);
Integer bound_sc_symmetric(std::size_t n, const Integer& interior);
Integer bound_sc_general(std::size_t n, const Integer& interior);
Integer bound_bhw_conjecture(const std::vector<GaugeValue>& minima);
/// 2(2^{n-1}-1) ceil(2(k+1)/3) + 2
Integer c_bound(std::size_t n, const Integer& k);
/// 2^{n+1} i / 3 + 2^{n+2}
Rational remark_sc_bound(std::size_t n, const Integer& i);
/// The Helly number of Z^n.
Integer helly_number(std::size_t n);

// --- equality case ----------------------------------------------------------

/// A K = C_{n-1} x [-ell, ell].
struct EqualityCertificate {
  Integer ell;
  IntMatrix transform;
  friend bool operator==(const EqualityCertificate&, const EqualityCertificate&) = default;
};

/// Recovers the generators of K as a lattice parallelepiped and, when K is
/// unimodularly equivalent to a slab parallelepiped, the map onto it. Any
/// certificate returned has been re-verified by comparing vertex sets.
std::optional<EqualityCertificate> equality_parallelepiped(const Body& k);
std::optional<EqualityCertificate> equality_parallelepiped(const Body& k, const Integer& interior_count);

/// Applies the certificate to K's vertices and compares with the slab.
bool certificate_holds(const Body& k, const EqualityCertificate& cert);

// --- verification -----------------------------------------------------------

/// Caches the counts, successive minima and volume of one body.
class BodyProfile {
 public:
  BodyProfile(std::string id, Body body) : id_(std::move(id)), body_(std::move(body)) {}

  const std::string& id() const { return id_; }
  const Body& body() const { return body_; }
  const LatticeCount& counts();
  const SuccessiveMinima& minima();
  const Rational& volume();

 private:
  std::string id_;
  Body body_;
  std::optional<LatticeCount> counts_;
  std::optional<SuccessiveMinima> minima_;
  std::optional<Rational> volume_;
};

struct BoundReport {
  std::string body_id;
  std::size_t dim = 0;
  LatticeCount counts;
  Check check = Check::kMain;
  GaugeValue measured;  // the quantity being bounded
  Rational bound;
  bool satisfied = false;
  bool equality = false;
  std::optional<EqualityCertificate> certificate;
  std::string note;

  /// Equality in a check whose equality case is characterized, without a
  /// certificate to show for it.
  bool uncertified_equality() const;
};

/// Whether the body meets the hypotheses of the check.
bool applicable(Check c, BodyProfile& profile);
/// Throws std::invalid_argument when the check is not applicable.
BoundReport verify(Check c, BodyProfile& profile);

BoundReport verify_main(const Body& k);
BoundReport verify_minkowski_volume(const Body& k);
BoundReport verify_minkowski_discrete(const Body& k);
BoundReport verify_bhw(const Body& k);
BoundReport verify_bhw_sc(const Body& k);
BoundReport verify_vdc(const Body& k);
BoundReport verify_lambda1_interior(const Body& k);
BoundReport verify_combined(const Body& k);
BoundReport verify_sc_symmetric(const Body& k);
BoundReport verify_sc_general(const Body& k);
BoundReport verify_bhw_conjecture(const Body& k);

/// One self-describing line of key=value pairs.
std::string format_report(const BoundReport& r);

// --- congruence witnesses ---------------------------------------------------

struct CongruenceWitness {
  LatticePoint v;  // v > w lexicographically, v = w mod m
  LatticePoint w;
  LatticePoint witness;  // (v - w) / m
  bool interior = false;
};

/// Every pair of distinct lattice points of K in one residue class mod m.
/// For m >= 3 each witness is an interior point of a 0-symmetric K, and a
/// witness that is not throws std::logic_error.
std::vector<CongruenceWitness> congruence_witnesses(const Body& k, const Integer& m = 3);

}  // namespace latmink

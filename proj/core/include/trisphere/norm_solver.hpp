#ifndef TRISPHERE_NORM_SOLVER_HPP
#define TRISPHERE_NORM_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "trisphere/exact_core.hpp"
#include "trisphere/modular_group.hpp"
#include "trisphere/triangle_orbits.hpp"

namespace trisphere {

enum class Ring { Eisenstein, Gaussian };

const char* to_string(Ring ring);

/// Thrown by conjugate_to_model when no determinant-1 conjugator exists,
/// i.e. the two elements lie in different conjugacy classes.
class ConjugacyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A solved representation p = norm(value), together with the geometric
/// certificate that produced it: the elliptic element whose fixed point is
/// the barycenter (Eisenstein) or arc midpoint (Gaussian), and the
/// conjugator g with g·model·g⁻¹ = stabilizer.  The value is read off the
/// bottom row (c, d) of the conjugator: d + c·ω, or c + d·i.
struct NormWitness {
  Int p;
  Ring ring = Ring::Eisenstein;
  std::variant<EisensteinInt, GaussianInt> value;

  std::optional<CanonicalTriangle> triangle;  // Eisenstein only
  Int k;                     // triangle index, or the Gaussian scan index with p | k²+1
  UnimodularMatrix stabilizer;
  UnimodularMatrix conjugator;
  QuadraticPoint fixed_point = QuadraticPoint(Rat(0), Rat(1), 1);

  Int norm_value() const;
  /// The represented pair: (a, b) with a²−ab+b² = p, or (c, d) with c²+d² = p.
  std::pair<Int, Int> pair() const;
};

/// Finds g with g·model·g⁻¹ = m in the projective group.  The integer
/// solutions of m·g = g·model form a rank-2 lattice; the determinant is a
/// positive definite quadratic form on it when the elements are conjugate,
/// and g is the first determinant-1 lattice point in the deterministic
/// shell search.  Throws ConjugacyError when no such point exists and
/// std::invalid_argument when the elements are not elliptic of equal order.
UnimodularMatrix conjugate_to_model(const UnimodularMatrix& m, const UnimodularMatrix& model);

/// Representation of a prime as a² − ab + b², via the least-k rotation-fixed
/// triangle of λ-length p.  Absent exactly when no fixed triangle exists
/// (p = 2, or p ≡ 2 mod 3 with p > 3).  Throws std::invalid_argument on
/// composite input.
std::optional<NormWitness> represent_eisenstein(const Int& p);

/// Representation of a prime as c² + d², via the least k in {1,…,p−1} with
/// p | k²+1 — the condition for the midpoint (k+i)/p of the vertical arc of
/// λ-length p to lie in the modular orbit of i.  Absent exactly when no such
/// k exists (p ≡ 3 mod 4).  Throws std::invalid_argument on composite input.
std::optional<NormWitness> represent_gaussian(const Int& p);

/// All integer pairs with a² − ab + b² = n.  Complete search over
/// |a|, |b| ≤ ceil(2√n): the form value is at least max(a², b²)/4 on
/// integers, so nothing outside that box can reach n (a conservative box;
/// |a|, |b| ≤ ceil(2√(n/3)) would already do).  Guarded to n < 2⁵⁶ so the
/// scan arithmetic stays in 64 bits; larger inputs throw std::domain_error.
std::set<std::pair<std::int64_t, std::int64_t>> brute_force_eisenstein(std::int64_t n);

/// All integer pairs with c² + d² = n, |c|, |d| ≤ floor(√n).  Same range
/// guard as the Eisenstein scan.
std::set<std::pair<std::int64_t, std::int64_t>> brute_force_gaussian(std::int64_t n);

/// One canonical name per solution class for tables: the lexicographically
/// smallest pair with 0 < second ≤ first (Eisenstein) or 0 < first ≤ second
/// (Gaussian).  Empty for an empty solution set.
std::optional<std::pair<std::int64_t, std::int64_t>> canonical_pair(
    const std::set<std::pair<std::int64_t, std::int64_t>>& solutions, Ring ring);

/// Everything verify_theorems checks about a single prime.
struct PrimeVerification {
  Int p;

  std::optional<NormWitness> eisenstein;
  std::optional<NormWitness> gaussian;

  // One stable name per solution class, from the oracle set: lexicographically
  // least with 0 < b ≤ a (Eisenstein) respectively 0 < c ≤ d (Gaussian).
  std::optional<std::pair<Int, Int>> eisenstein_canonical;
  std::optional<std::pair<Int, Int>> gaussian_canonical;

  std::size_t triangle_count = 0;  // 0 for p = 2, where the family is undefined
  std::size_t arc_count = 0;
  std::size_t fixed_count = 0;

  bool eisenstein_ok = false;  // presence ⟺ congruence ⟺ oracle; witness audited
  bool gaussian_ok = false;
  bool counts_ok = false;      // counting lemma + incidence census (odd p)
  bool mod3_ok = false;        // |fixed| ≡ 2(p−2) (mod 3); zero exactly on the 2-mod-3 primes
  bool all_ok = false;

  std::vector<std::string> failures;
};

struct VerificationReport {
  Int p_max;
  std::vector<PrimeVerification> primes;  // ascending p
  bool all_passed = false;
  std::size_t failure_count = 0;
};

/// Runs the solver, the brute-force oracles, the counting lemmas, the
/// incidence census and the certificate audit for every prime ≤ p_max.
/// Failures land in the report, never in exceptions.  The prime range is
/// split into independent work units executed on `threads` workers
/// (0 = hardware concurrency); rows are assembled in ascending order
/// regardless of completion order.
VerificationReport verify_theorems(const Int& p_max, unsigned threads = 0);

}  // namespace trisphere

#endif  // TRISPHERE_NORM_SOLVER_HPP

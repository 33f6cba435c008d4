#ifndef TRISPHERE_MODULAR_GROUP_HPP
#define TRISPHERE_MODULAR_GROUP_HPP

#include <array>
#include <iosfwd>
#include <string>

#include "trisphere/exact_core.hpp"

namespace trisphere {

/// An element of the projective modular group as a normalized integer
/// matrix (a b; c d) with ad − bc = 1.  The matrix and its negation are the
/// same group element; the stored representative is the one with c > 0, or
/// c = 0 and d > 0, so equality is structural.
class UnimodularMatrix {
 public:
  /// Identity.
  UnimodularMatrix() : a_(1), b_(0), c_(0), d_(1) {}

  /// Validates ad − bc = 1 (throws std::invalid_argument otherwise) and
  /// normalizes the projective sign.
  UnimodularMatrix(Int a, Int b, Int c, Int d);
  UnimodularMatrix(long a, long b, long c, long d)
      : UnimodularMatrix(Int(a), Int(b), Int(c), Int(d)) {}

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  UnimodularMatrix inverse() const;

  bool operator==(const UnimodularMatrix&) const = default;

  std::string str() const;

 private:
  Int a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& m);

/// Matrix product, re-normalized.
UnimodularMatrix compose(const UnimodularMatrix& m1, const UnimodularMatrix& m2);
UnimodularMatrix operator*(const UnimodularMatrix& m1, const UnimodularMatrix& m2);

/// Linear fractional action on a cusp: num/den ↦ (a·num + b·den)/(c·num + d·den),
/// reduced.
ExtendedRational apply_to_cusp(const UnimodularMatrix& m, const ExtendedRational& r);

/// Exact linear fractional action on an upper-half-plane point; the imaginary
/// part transforms as Im z / |cz + d|².
QuadraticPoint apply_to_point(const UnimodularMatrix& m, const QuadraticPoint& z);

/// True iff the element is congruent to the identity mod 2 (either sign
/// representative; they agree mod 2).
bool in_gamma2(const UnimodularMatrix& m);

/// For a cusp r in the Infinity class (odd numerator, even denominator),
/// returns γ ≡ I (mod 2) with γ·r = ∞.  Built from an extended gcd of the
/// numerator and denominator, with a parity shift making the top-right entry
/// even.  Throws std::invalid_argument for cusps of the other two classes,
/// where no such γ exists.
UnimodularMatrix reduce_cusp_to_infinity(const ExtendedRational& r);

/// Six fixed elements, pairwise inequivalent modulo the level-2 subgroup,
/// reducing onto all of SL(2, F₂); the induced permutations of the three
/// cusp classes realize the full symmetric group.
const std::array<UnimodularMatrix, 6>& coset_representatives();

/// z ↦ (z+1)/(−z): the order-3 element whose induced automorphism of the
/// quotient cyclically permutes the three cusps.  Fixes ω = (−1 + √3 i)/2.
const UnimodularMatrix& cusp_rotation();

/// z ↦ −1/z: the order-2 element fixing i; swaps the cusps 0 and ∞.
const UnimodularMatrix& half_turn();

/// ω = (−1 + √3 i)/2, the fixed point of cusp_rotation().
const QuadraticPoint& omega();

/// i, the fixed point of half_turn().
const QuadraticPoint& gaussian_unit();

}  // namespace trisphere

#endif  // TRISPHERE_MODULAR_GROUP_HPP

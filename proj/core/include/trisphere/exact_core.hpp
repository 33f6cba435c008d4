#ifndef TRISPHERE_EXACT_CORE_HPP
#define TRISPHERE_EXACT_CORE_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace trisphere {

using Int = mpz_class;
using Rat = mpq_class;

/// The three punctures of the quotient surface, i.e. the three orbits of the
/// level-2 congruence group on the extended rationals.  The class of a reduced
/// fraction is read off the parities of (numerator, denominator):
/// (even, odd) -> Zero, (odd, odd) -> One, (odd, even) -> Infinity.
enum class CuspClass { Zero, One, Infinity };

const char* to_string(CuspClass c);
std::ostream& operator<<(std::ostream& os, CuspClass c);

/// A point of the boundary projective line Q ∪ {∞}, stored in lowest terms
/// with a non-negative denominator.  ∞ has the unique representation 1/0;
/// every finite value has denominator > 0 and carries its sign on the
/// numerator.
class ExtendedRational {
 public:
  /// Reduces num/den to the canonical representative.  Throws
  /// std::invalid_argument on (0, 0), which is not a point of the line.
  ExtendedRational(Int num, Int den);
  ExtendedRational(long num, long den) : ExtendedRational(Int(num), Int(den)) {}

  /// Zero (0/1).
  ExtendedRational() : num_(0), den_(1) {}

  static ExtendedRational infinity() { return ExtendedRational(1, 0); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_infinity() const { return den_ == 0; }

  /// Value as an exact rational; throws std::domain_error at ∞.
  Rat value() const;

  /// "num/den", e.g. "1/0" for ∞, "-2/3".
  std::string str() const;

  bool operator==(const ExtendedRational&) const = default;

  /// Total order on finite values (num1*den2 < num2*den1); ∞ sorts before
  /// every finite value, matching the arc-endpoint canonical order.
  bool operator<(const ExtendedRational& rhs) const;

 private:
  Int num_;
  Int den_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r);

/// Orbit label of a reduced extended rational under the level-2 group.
CuspClass cusp_class(const ExtendedRational& r);

/// A point x + y·√d·i of the open upper half-plane with exact rational
/// x and y > 0.  The radicand d is 1 for the Gaussian pipeline and 3 for
/// the Eisenstein pipeline.
struct QuadraticPoint {
  Rat x;
  Rat y;
  int radicand = 1;

  QuadraticPoint(Rat x_, Rat y_, int radicand_);

  bool operator==(const QuadraticPoint&) const = default;
};

std::ostream& operator<<(std::ostream& os, const QuadraticPoint& z);

/// a + b·ω with ω a primitive cube root of unity.
struct EisensteinInt {
  Int a;
  Int b;

  bool operator==(const EisensteinInt&) const = default;
};

/// c + d·i.
struct GaussianInt {
  Int c;
  Int d;

  bool operator==(const GaussianInt&) const = default;
};

/// a² − ab + b²; non-negative, zero only at the origin.
Int norm(const EisensteinInt& e);

/// c² + d²; non-negative, zero only at the origin.
Int norm(const GaussianInt& g);

/// Deterministic Miller-Rabin over the first twelve prime bases; a proven
/// primality test for n < 3.317e24, which covers every input this library
/// is asked about.
bool is_prime(const Int& n);

}  // namespace trisphere

#endif  // TRISPHERE_EXACT_CORE_HPP

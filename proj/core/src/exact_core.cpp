#include "trisphere/exact_core.hpp"

#include <array>
#include <ostream>
#include <stdexcept>

namespace trisphere {

const char* to_string(CuspClass c) {
  switch (c) {
    case CuspClass::Zero:
      return "ZERO";
    case CuspClass::One:
      return "ONE";
    case CuspClass::Infinity:
      return "INFINITY";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, CuspClass c) { return os << to_string(c); }

ExtendedRational::ExtendedRational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_ == 0 && den_ == 0)
    throw std::invalid_argument("ExtendedRational: 0/0 is not a point of the boundary line");
  if (den_ == 0) {
    num_ = 1;  // unique representation of ∞
    return;
  }
  Int g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  num_ /= g;
  den_ /= g;
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rat ExtendedRational::value() const {
  if (is_infinity()) throw std::domain_error("ExtendedRational: ∞ has no rational value");
  Rat q(num_, den_);
  q.canonicalize();
  return q;
}

std::string ExtendedRational::str() const {
  return num_.get_str() + "/" + den_.get_str();
}

bool ExtendedRational::operator<(const ExtendedRational& rhs) const {
  if (is_infinity()) return !rhs.is_infinity();
  if (rhs.is_infinity()) return false;
  return num_ * rhs.den_ < rhs.num_ * den_;
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) { return os << r.str(); }

CuspClass cusp_class(const ExtendedRational& r) {
  const bool num_odd = mpz_odd_p(r.num().get_mpz_t());
  const bool den_odd = mpz_odd_p(r.den().get_mpz_t());
  if (!num_odd && den_odd) return CuspClass::Zero;
  if (num_odd && den_odd) return CuspClass::One;
  // (even, even) cannot occur for a reduced fraction.
  return CuspClass::Infinity;
}

QuadraticPoint::QuadraticPoint(Rat x_, Rat y_, int radicand_)
    : x(std::move(x_)), y(std::move(y_)), radicand(radicand_) {
  x.canonicalize();
  y.canonicalize();
  if (y <= 0) throw std::invalid_argument("QuadraticPoint: not in the open upper half-plane");
  if (radicand != 1 && radicand != 3)
    throw std::invalid_argument("QuadraticPoint: radicand must be 1 or 3");
}

std::ostream& operator<<(std::ostream& os, const QuadraticPoint& z) {
  os << z.x << " + " << z.y;
  if (z.radicand != 1) os << "*sqrt(" << z.radicand << ")";
  return os << "*i";
}

Int norm(const EisensteinInt& e) { return e.a * e.a - e.a * e.b + e.b * e.b; }

Int norm(const GaussianInt& g) { return g.c * g.c + g.d * g.d; }

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const std::array<long, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (long b : bases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  // n = d·2^s + 1 with d odd
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  const Int n_minus_1 = n - 1;
  for (long b : bases) {
    Int x;
    Int base(b);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned long r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace trisphere

#include "trisphere/modular_group.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace trisphere {

UnimodularMatrix::UnimodularMatrix(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1)
    throw std::invalid_argument("UnimodularMatrix: determinant must be 1");
  if (c_ < 0 || (c_ == 0 && d_ < 0)) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

UnimodularMatrix UnimodularMatrix::inverse() const {
  return UnimodularMatrix(d_, -b_, -c_, a_);
}

std::string UnimodularMatrix::str() const {
  std::ostringstream os;
  os << "(" << a_ << ", " << b_ << "; " << c_ << ", " << d_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& m) { return os << m.str(); }

UnimodularMatrix compose(const UnimodularMatrix& m1, const UnimodularMatrix& m2) {
  return UnimodularMatrix(m1.a() * m2.a() + m1.b() * m2.c(), m1.a() * m2.b() + m1.b() * m2.d(),
                          m1.c() * m2.a() + m1.d() * m2.c(), m1.c() * m2.b() + m1.d() * m2.d());
}

UnimodularMatrix operator*(const UnimodularMatrix& m1, const UnimodularMatrix& m2) {
  return compose(m1, m2);
}

ExtendedRational apply_to_cusp(const UnimodularMatrix& m, const ExtendedRational& r) {
  return ExtendedRational(m.a() * r.num() + m.b() * r.den(), m.c() * r.num() + m.d() * r.den());
}

QuadraticPoint apply_to_point(const UnimodularMatrix& m, const QuadraticPoint& z) {
  // (az+b)(conj(cz+d)) / |cz+d|² with z = x + y√D i, computed in Q(√-D):
  // the √D-part of the numerator collapses to (ad−bc)·y = y.
  const Rat x = z.x;
  const Rat y = z.y;
  const int D = z.radicand;
  const Rat n2 = x * x + D * y * y;  // |z|²
  const Rat cx_d = Rat(m.c()) * x + Rat(m.d());
  const Rat den = cx_d * cx_d + Rat(m.c() * m.c()) * D * y * y;  // |cz+d|² > 0
  const Rat re = Rat(m.a() * m.c()) * n2 + Rat(m.a() * m.d() + m.b() * m.c()) * x +
                 Rat(m.b() * m.d());
  return QuadraticPoint(re / den, y / den, D);
}

bool in_gamma2(const UnimodularMatrix& m) {
  // −I ≡ I (mod 2), so the stored representative decides.
  return mpz_odd_p(m.a().get_mpz_t()) && mpz_even_p(m.b().get_mpz_t()) &&
         mpz_even_p(m.c().get_mpz_t()) && mpz_odd_p(m.d().get_mpz_t());
}

UnimodularMatrix reduce_cusp_to_infinity(const ExtendedRational& r) {
  if (cusp_class(r) != CuspClass::Infinity)
    throw std::invalid_argument(
        "reduce_cusp_to_infinity: no level-2 element carries a cusp of class " +
        std::string(to_string(cusp_class(r))) + " to ∞");
  const Int& a = r.num();  // odd
  const Int& c = r.den();  // even
  Int g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  // g = 1 since r is reduced; u is odd automatically (u·a ≡ 1 mod 2).
  if (mpz_odd_p(v.get_mpz_t())) {
    u += c;
    v -= a;
  }
  return UnimodularMatrix(u, v, -c, a);
}

const std::array<UnimodularMatrix, 6>& coset_representatives() {
  // One representative per element of SL(2, F₂): the identity, the
  // translation z+1 (swaps cusps 0 and 1), z/(z+1) (swaps 1 and ∞), the
  // half turn (swaps 0 and ∞), and the two cusp rotations.
  static const std::array<UnimodularMatrix, 6> reps = {
      UnimodularMatrix(),
      UnimodularMatrix(1, 1, 0, 1),
      UnimodularMatrix(1, 0, 1, 1),
      UnimodularMatrix(0, -1, 1, 0),
      UnimodularMatrix(1, 1, -1, 0),
      UnimodularMatrix(0, -1, 1, 1),
  };
  return reps;
}

const UnimodularMatrix& cusp_rotation() {
  static const UnimodularMatrix r(1, 1, -1, 0);
  return r;
}

const UnimodularMatrix& half_turn() {
  static const UnimodularMatrix s(0, -1, 1, 0);
  return s;
}

const QuadraticPoint& omega() {
  static const QuadraticPoint w(Rat(-1, 2), Rat(1, 2), 3);
  return w;
}

const QuadraticPoint& gaussian_unit() {
  static const QuadraticPoint i(Rat(0), Rat(1), 1);
  return i;
}

}  // namespace trisphere

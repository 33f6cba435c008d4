#include "trisphere/decimal.hpp"

#include <stdexcept>
#include <string>

namespace trisphere {

namespace {

constexpr int kDigits = 12;

Int pow10(long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// q ≥ 10^exp for q > 0.
bool at_least_pow10(const Rat& q, long exp) {
  if (exp >= 0) return q.get_num() >= q.get_den() * pow10(exp);
  return q.get_num() * pow10(-exp) >= q.get_den();
}

// floor(log10(q)) for q > 0: the unique e with 10^e ≤ q < 10^(e+1).
long floor_log10(const Rat& q) {
  long e = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 10));
  while (!at_least_pow10(q, e)) --e;
  while (at_least_pow10(q, e + 1)) ++e;
  return e;
}

// Round num/den to the nearest integer, half away from zero; num ≥ 0, den > 0.
Int round_div(const Int& num, const Int& den) { return (2 * num + den) / (2 * den); }

// round(q·10^scale) for q ≥ 0.
Int round_scaled(const Rat& q, long scale) {
  Int num = q.get_num();
  Int den = q.get_den();
  if (scale >= 0)
    num *= pow10(scale);
  else
    den *= pow10(-scale);
  return round_div(num, den);
}

// round(√q·10^scale) for q ≥ 0, via an integer square root.
Int round_scaled_sqrt(const Rat& q, long scale) {
  if (q == 0) return 0;
  Int A = q.get_num();
  Int D = q.get_den();
  if (scale >= 0)
    A *= pow10(2 * scale);
  else
    D *= pow10(-2 * scale);
  Int t;  // floor(√(A/D)) = floor(isqrt(A·D) / D)
  mpz_sqrt(t.get_mpz_t(), Int(A * D).get_mpz_t());
  t /= D;
  if (4 * A >= (2 * t + 1) * (2 * t + 1) * D) ++t;  // round half up
  return t;
}

std::string format_digits(Int digits, long e, bool negative) {
  if (digits >= pow10(kDigits)) {  // rounding carried into a 13th digit
    digits /= 10;
    ++e;
  }
  std::string ds = digits.get_str();  // exactly kDigits characters

  std::string s;
  if (e < 0) {
    s = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
  } else if (e >= kDigits - 1) {
    s = ds + std::string(static_cast<std::size_t>(e - (kDigits - 1)), '0');
  } else {
    s = ds.substr(0, static_cast<std::size_t>(e + 1)) + "." +
        ds.substr(static_cast<std::size_t>(e + 1));
  }
  if (s.find('.') != std::string::npos) {
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
  }
  return negative ? "-" + s : s;
}

}  // namespace

std::string decimal12(const Rat& q) {
  if (q == 0) return "0";
  Rat a = q > 0 ? q : Rat(-q);
  a.canonicalize();
  const long e = floor_log10(a);
  return format_digits(round_scaled(a, kDigits - 1 - e), e, q < 0);
}

std::string decimal12_sqrt(const Rat& q) {
  if (q < 0) throw std::invalid_argument("decimal12_sqrt: negative radicand");
  if (q == 0) return "0";
  Rat a = q;
  a.canonicalize();
  // e = floor(log10 √a): √a ∈ [10^e, 10^(e+1)) ⟺ a ∈ [10^(2e), 10^(2e+2)).
  long e = floor_log10(a) / 2;
  while (!at_least_pow10(a, 2 * e)) --e;
  while (at_least_pow10(a, 2 * (e + 1))) ++e;
  return format_digits(round_scaled_sqrt(a, kDigits - 1 - e), e, false);
}

std::string decimal12_minus_sqrt3(const Rat& a, const Rat& b) {
  // a − b·√3 evaluated at 24 guard digits, then formatted as an exact rational.
  constexpr long kGuard = 24;
  Rat aa = a >= 0 ? a : Rat(-a);
  aa.canonicalize();
  Int ra = round_scaled(aa, kGuard);
  if (a < 0) ra = -ra;

  Rat bb = b >= 0 ? b : Rat(-b);
  bb.canonicalize();
  Rat b3 = bb * bb * 3;  // (|b|√3)² = 3b²
  b3.canonicalize();
  Int tb = round_scaled_sqrt(b3, kGuard);
  if (b < 0) tb = -tb;

  Rat v(ra - tb, pow10(kGuard));
  v.canonicalize();
  return decimal12(v);
}

}  // namespace trisphere

#include "trisphere/lambda_geometry.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace trisphere {

Arc::Arc(ExtendedRational e1, ExtendedRational e2) : first_(std::move(e1)), second_(std::move(e2)) {
  if (first_ == second_) throw std::invalid_argument("Arc: endpoints must be distinct");
  if (second_ < first_) std::swap(first_, second_);  // ∞ sorts first
}

std::ostream& operator<<(std::ostream& os, const Arc& arc) {
  return os << "(" << arc.first() << ", " << arc.second() << ")";
}

Int lambda_length(const Arc& arc) {
  Int det = arc.first().num() * arc.second().den() - arc.second().num() * arc.first().den();
  return abs(det);
}

FordCircle ford_circle(const ExtendedRational& r) {
  if (r.is_infinity()) return FordCircle{r, std::nullopt};
  Rat diameter(1, r.den() * r.den());
  diameter.canonicalize();
  return FordCircle{r, diameter};
}

QuadraticPoint vertical_arc_midpoint(const Arc& arc, int radicand) {
  if (!arc.is_vertical())
    throw std::invalid_argument("vertical_arc_midpoint: arc has no endpoint at ∞");
  if (radicand != 1 && radicand != 3)
    throw std::invalid_argument("vertical_arc_midpoint: radicand must be 1 or 3");
  const ExtendedRational& e = arc.second();
  Rat x(e.num(), e.den());
  x.canonicalize();
  return QuadraticPoint(x, Rat(1, e.den()), radicand);
}

std::vector<Int> enumerate_incident_arcs(const Int& p) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("enumerate_incident_arcs: requires an odd prime λ-length");
  std::vector<Int> ks;
  const Int two_p = 2 * p;
  for (Int k = 1; k < two_p; ++k) {
    if (k == p) continue;  // the only k in range sharing a factor with p
    ks.push_back(k);
  }
  return ks;
}

}  // namespace trisphere

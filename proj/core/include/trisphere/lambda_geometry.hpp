#ifndef TRISPHERE_LAMBDA_GEOMETRY_HPP
#define TRISPHERE_LAMBDA_GEOMETRY_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "trisphere/exact_core.hpp"

namespace trisphere {

/// An unordered pair of distinct cusps, the endpoints of a geodesic.
/// Canonical storage order: ∞ first when present, else smaller value first.
class Arc {
 public:
  /// Throws std::invalid_argument if the endpoints coincide.
  Arc(ExtendedRational e1, ExtendedRational e2);

  const ExtendedRational& first() const { return first_; }
  const ExtendedRational& second() const { return second_; }

  bool is_vertical() const { return first_.is_infinity(); }

  bool operator==(const Arc&) const = default;

 private:
  ExtendedRational first_;
  ExtendedRational second_;
};

std::ostream& operator<<(std::ostream& os, const Arc& arc);

/// Horoball tangent to the real line at a rational point m/n, of Euclidean
/// diameter 1/n²; the horoball at ∞ is the region Im z > 1 and carries no
/// finite diameter.
struct FordCircle {
  ExtendedRational tangent_point;
  std::optional<Rat> diameter;  // absent for the horoball at ∞

  bool is_horoball_at_infinity() const { return !diameter.has_value(); }
};

/// λ-length of an arc with endpoints a/c, b/d in lowest terms: |ad − bc|.
/// Equals the exponential of half the geodesic length outside the Ford
/// circles at the endpoints, and is always a positive integer here.
Int lambda_length(const Arc& arc);

FordCircle ford_circle(const ExtendedRational& r);

/// Midpoint of the vertical arc (∞, b/d): the point b/d + (1/|d|)·√radicand·i.
/// With radicand 1 this is the hyperbolic midpoint, where the two Ford
/// circles would touch; radicand 3 gives the candidate ω-orbit point at the
/// same height coefficient.  Throws std::invalid_argument for non-vertical
/// arcs or a radicand outside {1, 3}.
QuadraticPoint vertical_arc_midpoint(const Arc& arc, int radicand = 1);

/// The arcs of λ-length p incident at ∞, one per k in
/// {1,…,2p−1} \ {p}: the arc (∞, k/p) with finite endpoint in (0, 2).
/// Returns the k values in ascending order; the count is 2(p−1).
/// Throws std::invalid_argument unless p is an odd prime.
std::vector<Int> enumerate_incident_arcs(const Int& p);

}  // namespace trisphere

#endif  // TRISPHERE_LAMBDA_GEOMETRY_HPP

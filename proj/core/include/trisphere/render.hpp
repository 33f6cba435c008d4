#ifndef TRISPHERE_RENDER_HPP
#define TRISPHERE_RENDER_HPP

#include <string>

#include "trisphere/exact_core.hpp"

namespace trisphere {

struct RenderOptions {
  Rat window_lo = Rat(0);  // real-axis window [lo, hi]
  Rat window_hi = Rat(2);
  long den_limit = 32;     // Ford circles with denominator ≤ this are drawn
};

/// Deterministic SVG 1.1 picture of the upper half-plane strip: Ford circles
/// up to the denominator limit, the horoball boundary Im z = 1, the vertical
/// lifts of the λ-length-p arcs at ∞, the bottom edges of the canonical
/// triangles, rotation-fixed triangles highlighted with their barycenters
/// marked.  Geometry is exact until the final 12-significant-digit decimal
/// formatting; identical inputs produce identical bytes.
/// Throws std::invalid_argument on a degenerate window or non-odd-prime p.
std::string render_svg(const Int& p, const RenderOptions& options = {});

}  // namespace trisphere

#endif  // TRISPHERE_RENDER_HPP

#ifndef TRISPHERE_DECIMAL_HPP
#define TRISPHERE_DECIMAL_HPP

#include <string>

#include "trisphere/exact_core.hpp"

namespace trisphere {

/// Plain decimal string of q with 12 significant digits, computed from the
/// exact rational (no floating point): round half away from zero, trailing
/// zeros stripped.  Deterministic across platforms.
std::string decimal12(const Rat& q);

/// decimal12 of √q for q ≥ 0, via integer square roots of scaled numerators.
std::string decimal12_sqrt(const Rat& q);

/// decimal12 of a − b·√3 with exact rational a, b; used for flipped-axis
/// coordinates of barycenter markers.
std::string decimal12_minus_sqrt3(const Rat& a, const Rat& b);

}  // namespace trisphere

#endif  // TRISPHERE_DECIMAL_HPP

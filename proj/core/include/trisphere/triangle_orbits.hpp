#ifndef TRISPHERE_TRIANGLE_ORBITS_HPP
#define TRISPHERE_TRIANGLE_ORBITS_HPP

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "trisphere/exact_core.hpp"
#include "trisphere/modular_group.hpp"

namespace trisphere {

/// A properly immersed equilateral ideal triangle of λ-length p in canonical
/// position: vertices ∞, k/p, (k+1)/p with both finite vertices in (0, 2).
/// Valid indices are 1 ≤ k ≤ 2p−2 with k ∉ {p−1, p}; the canonical position
/// is unique because the stabilizer of ∞ in the level-2 group is generated
/// by z ↦ z + 2.
class CanonicalTriangle {
 public:
  /// Validates p (odd prime) and the k range; throws std::invalid_argument.
  CanonicalTriangle(Int p, Int k);

  const Int& p() const { return p_; }
  const Int& k() const { return k_; }

  /// (∞, k/p, (k+1)/p).
  std::array<ExtendedRational, 3> vertices() const;

  bool operator==(const CanonicalTriangle&) const = default;

 private:
  struct unchecked_t {};
  CanonicalTriangle(Int p, Int k, unchecked_t) : p_(std::move(p)), k_(std::move(k)) {}

  friend std::vector<CanonicalTriangle> enumerate_triangles(const Int& p);
  friend CanonicalTriangle rotation_image(const CanonicalTriangle& t);

  Int p_;
  Int k_;
};

std::ostream& operator<<(std::ostream& os, const CanonicalTriangle& t);

/// Partition of the canonical triangles of λ-length p into orbits of the
/// induced order-3 automorphism.  |fixed| + 3·|three_cycles| = 2(p−2), and
/// every enumerated triangle appears exactly once.
struct OrbitDecomposition {
  Int p;
  std::vector<CanonicalTriangle> fixed;                    // ascending k
  std::vector<std::array<CanonicalTriangle, 3>> three_cycles;  // each starts at its least k
};

/// Per-cusp incidence counts of the λ-length-p triangle family, obtained by
/// transporting the canonical (∞-incident) enumeration with fixed coset
/// representatives.  Every properly immersed triangle meets each cusp once,
/// so each count is 2(p−2) and the spike total is 3·2(p−2).
struct IncidenceCensus {
  Int p;
  std::size_t at_zero = 0;
  std::size_t at_one = 0;
  std::size_t at_infinity = 0;
  std::size_t total_spikes = 0;
  bool balanced = false;  // all three counts equal 2(p−2)
};

/// All canonical triangles of λ-length p, ascending k; the count is 2(p−2).
/// Throws std::invalid_argument unless p is an odd prime.
std::vector<CanonicalTriangle> enumerate_triangles(const Int& p);

/// True iff the three vertices lie in three distinct cusp classes.  Holds for
/// every valid canonical triangle.
bool is_properly_immersed(const CanonicalTriangle& t);

/// Image of t under the automorphism induced by cusp_rotation(): the lifted
/// vertices are mapped, the unique image vertex in the Infinity class is
/// carried back to ∞ inside the level-2 group, and the result is shifted by
/// z ↦ z + 2 into canonical position.  A bijection of the enumeration whose
/// cube is the identity.
CanonicalTriangle rotation_image(const CanonicalTriangle& t);

/// Orbits of rotation_image over enumerate_triangles(p); fixed triangles
/// ascending, cycles ordered by least member.
OrbitDecomposition orbit_decomposition(const Int& p);

/// The Möbius map cycling the vertices ∞ ↦ k/p ↦ (k+1)/p ↦ ∞ has the closed
/// form (k, −(k²+k+1)/p; p, −(k+1)); it is integral exactly when p divides
/// k²+k+1, which happens exactly for the rotation-fixed triangles.  Absent
/// otherwise.
std::optional<UnimodularMatrix> stabilizer_matrix(const CanonicalTriangle& t);

/// Fixed point in the upper half-plane of the stabilizer, from its quadratic
/// c·z² + (d−a)·z − b = 0 (discriminant −3): the point
/// ((2k+1)/(2p), 1/(2p), √3).  Throws std::invalid_argument for triangles
/// without a stabilizer.
QuadraticPoint barycenter(const CanonicalTriangle& t);

IncidenceCensus incidence_census(const Int& p);

}  // namespace trisphere

#endif  // TRISPHERE_TRIANGLE_ORBITS_HPP

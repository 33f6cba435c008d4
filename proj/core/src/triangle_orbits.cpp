#include "trisphere/triangle_orbits.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#include "trisphere/lambda_geometry.hpp"

namespace trisphere {

namespace {

bool valid_index(const Int& p, const Int& k) {
  return k >= 1 && k <= 2 * p - 2 && k != p - 1 && k != p;
}

}  // namespace

CanonicalTriangle::CanonicalTriangle(Int p, Int k) : p_(std::move(p)), k_(std::move(k)) {
  if (p_ == 2 || !is_prime(p_))
    throw std::invalid_argument("CanonicalTriangle: λ-length must be an odd prime");
  if (!valid_index(p_, k_))
    throw std::invalid_argument("CanonicalTriangle: index k outside {1,…,2p−2} \\ {p−1, p}");
}

std::array<ExtendedRational, 3> CanonicalTriangle::vertices() const {
  return {ExtendedRational::infinity(), ExtendedRational(k_, p_), ExtendedRational(k_ + 1, p_)};
}

std::ostream& operator<<(std::ostream& os, const CanonicalTriangle& t) {
  return os << "(∞, " << t.k() << "/" << t.p() << ", " << (t.k() + 1) << "/" << t.p() << ")";
}

std::vector<CanonicalTriangle> enumerate_triangles(const Int& p) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("enumerate_triangles: requires an odd prime λ-length");
  std::vector<CanonicalTriangle> out;
  const Int last = 2 * p - 2;
  for (Int k = 1; k <= last; ++k) {
    if (k == p - 1 || k == p) continue;
    out.push_back(CanonicalTriangle(p, k, CanonicalTriangle::unchecked_t{}));
  }
  return out;
}

bool is_properly_immersed(const CanonicalTriangle& t) {
  const auto vs = t.vertices();
  const CuspClass c0 = cusp_class(vs[0]);
  const CuspClass c1 = cusp_class(vs[1]);
  const CuspClass c2 = cusp_class(vs[2]);
  return c0 != c1 && c0 != c2 && c1 != c2;
}

CanonicalTriangle rotation_image(const CanonicalTriangle& t) {
  const auto vs = t.vertices();
  std::array<ExtendedRational, 3> images = {apply_to_cusp(cusp_rotation(), vs[0]),
                                            apply_to_cusp(cusp_rotation(), vs[1]),
                                            apply_to_cusp(cusp_rotation(), vs[2])};

  int at_infinity = -1;
  for (int i = 0; i < 3; ++i) {
    if (cusp_class(images[i]) == CuspClass::Infinity) {
      if (at_infinity >= 0)
        throw std::logic_error("rotation_image: two image vertices in the ∞ class");
      at_infinity = i;
    }
  }
  if (at_infinity < 0)
    throw std::logic_error("rotation_image: no image vertex in the ∞ class");

  const UnimodularMatrix g = reduce_cusp_to_infinity(images[at_infinity]);

  // The two finite vertices land on m/p and (m±1)/p; the λ-lengths survive
  // the level-2 move, so the denominators are exactly p.
  Int m_low;
  bool have_low = false;
  for (int i = 0; i < 3; ++i) {
    if (i == at_infinity) continue;
    const ExtendedRational u = apply_to_cusp(g, images[i]);
    if (u.den() != t.p())
      throw std::logic_error("rotation_image: reduced vertex lost its denominator");
    if (!have_low || u.num() < m_low) {
      m_low = u.num();
      have_low = true;
    }
  }

  // Shift by z ↦ z + 2 until the lower finite vertex sits in (0, 2).
  const Int two_p = 2 * t.p();
  Int k;
  mpz_mod(k.get_mpz_t(), m_low.get_mpz_t(), two_p.get_mpz_t());
  if (!valid_index(t.p(), k))
    throw std::logic_error("rotation_image: image index left the canonical range");
  return CanonicalTriangle(t.p(), k, CanonicalTriangle::unchecked_t{});
}

OrbitDecomposition orbit_decomposition(const Int& p) {
  const std::vector<CanonicalTriangle> all = enumerate_triangles(p);
  OrbitDecomposition od;
  od.p = p;

  std::map<Int, std::size_t> index_of;
  for (std::size_t i = 0; i < all.size(); ++i) index_of.emplace(all[i].k(), i);

  std::vector<bool> seen(all.size(), false);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (seen[i]) continue;
    seen[i] = true;
    const CanonicalTriangle& t = all[i];
    const CanonicalTriangle t1 = rotation_image(t);
    if (t1 == t) {
      od.fixed.push_back(t);
      continue;
    }
    const CanonicalTriangle t2 = rotation_image(t1);
    if (rotation_image(t2) != t)
      throw std::logic_error("orbit_decomposition: rotation orbit is not of length 1 or 3");
    seen.at(index_of.at(t1.k())) = true;
    seen.at(index_of.at(t2.k())) = true;
    od.three_cycles.push_back({t, t1, t2});  // t carries the least k: scan is ascending
  }

  if (od.fixed.size() + 3 * od.three_cycles.size() != all.size())
    throw std::logic_error("orbit_decomposition: orbits do not partition the family");
  return od;
}

std::optional<UnimodularMatrix> stabilizer_matrix(const CanonicalTriangle& t) {
  const Int q = t.k() * t.k() + t.k() + 1;
  if (q % t.p() != 0) return std::nullopt;
  return UnimodularMatrix(t.k(), -(q / t.p()), t.p(), -(t.k() + 1));
}

QuadraticPoint barycenter(const CanonicalTriangle& t) {
  const std::optional<UnimodularMatrix> stab = stabilizer_matrix(t);
  if (!stab)
    throw std::invalid_argument("barycenter: triangle is not rotation-fixed");
  // Fixed point of (a b; c d): c·z² + (d−a)·z − b = 0, upper root.
  const Int& a = stab->a();
  const Int& c = stab->c();
  const Int& d = stab->d();
  const Int disc = (d - a) * (d - a) + 4 * stab->b() * c;
  if (disc != -3) throw std::logic_error("barycenter: discriminant is not −3");
  Rat x(a - d, 2 * c);
  x.canonicalize();
  Rat y(1, 2 * c);
  y.canonicalize();
  return QuadraticPoint(x, y, 3);
}

IncidenceCensus incidence_census(const Int& p) {
  const std::vector<CanonicalTriangle> all = enumerate_triangles(p);

  // Transport the ∞-incident enumeration to the other two cusps with fixed
  // coset representatives: the half turn carries ∞ to the 0 class, z/(z+1)
  // carries ∞ to the 1 class.
  const UnimodularMatrix identity;
  const UnimodularMatrix& to_zero = half_turn();
  const UnimodularMatrix to_one(1, 0, 1, 1);

  IncidenceCensus census;
  census.p = p;

  const auto count_at = [&all](const UnimodularMatrix& rep, CuspClass target) {
    std::size_t n = 0;
    for (const CanonicalTriangle& t : all) {
      int hits = 0;
      for (const ExtendedRational& v : t.vertices())
        if (cusp_class(apply_to_cusp(rep, v)) == target) ++hits;
      if (hits != 1)
        throw std::logic_error("incidence_census: transported triangle is not properly immersed");
      ++n;
    }
    return n;
  };

  census.at_infinity = count_at(identity, CuspClass::Infinity);
  census.at_zero = count_at(to_zero, CuspClass::Zero);
  census.at_one = count_at(to_one, CuspClass::One);
  census.total_spikes = census.at_zero + census.at_one + census.at_infinity;
  census.balanced = census.at_zero == all.size() && census.at_one == all.size() &&
                    census.at_infinity == all.size();
  return census;
}

}  // namespace trisphere

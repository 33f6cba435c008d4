#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "support/generators.hpp"
#include "trisphere/modular_group.hpp"

using namespace trisphere;

namespace {
const UnimodularMatrix kIdentity;
const UnimodularMatrix f_map(1, 0, 2, 1);            // z ↦ z/(2z+1)
const UnimodularMatrix conj_rot(-1, 1, -3, 2);       // f ∘ rotation ∘ f⁻¹
}  // namespace

TEST_CASE("construction validates and normalizes the projective sign") {
  CHECK_THROWS_AS(UnimodularMatrix(1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(UnimodularMatrix(2, 0, 0, 2), std::invalid_argument);
  // (−1, 1, −3, 2) and (1, −1, 3, −2) are the same projective element.
  CHECK(conj_rot == UnimodularMatrix(1, -1, 3, -2));
  CHECK(UnimodularMatrix(-1, 0, 0, -1) == kIdentity);
}

TEST_CASE("composition") {
  auto gen = testing::seeded(201);
  for (int i = 0; i < 100; ++i) {
    const UnimodularMatrix m = testing::random_modular_element(gen);
    CHECK(kIdentity * m == m);
    CHECK(m * kIdentity == m);
    CHECK(m * m.inverse() == kIdentity);
  }
  CHECK(cusp_rotation() * cusp_rotation() * cusp_rotation() == kIdentity);
  CHECK(f_map * cusp_rotation() * f_map.inverse() == conj_rot);
}

TEST_CASE("action on cusps") {
  CHECK(apply_to_cusp(conj_rot, ExtendedRational(1, 0)) == ExtendedRational(1, 3));
  CHECK(apply_to_cusp(conj_rot, ExtendedRational(1, 3)) == ExtendedRational(2, 3));
  CHECK(apply_to_cusp(conj_rot, ExtendedRational(2, 3)) == ExtendedRational(1, 0));
  CHECK(apply_to_cusp(kIdentity, ExtendedRational(5, 7)) == ExtendedRational(5, 7));
}

TEST_CASE("the cusp action is a group action") {
  auto gen = testing::seeded(202);
  for (int i = 0; i < 1000; ++i) {
    const UnimodularMatrix m1 = testing::random_modular_element(gen);
    const UnimodularMatrix m2 = testing::random_modular_element(gen);
    const ExtendedRational r = testing::random_cusp(gen);
    CHECK(apply_to_cusp(compose(m1, m2), r) == apply_to_cusp(m1, apply_to_cusp(m2, r)));
  }
}

TEST_CASE("action on quadratic points") {
  CHECK(apply_to_point(f_map, omega()) == QuadraticPoint(Rat(1, 2), Rat(1, 6), 3));
  CHECK(apply_to_point(kIdentity, gaussian_unit()) == gaussian_unit());
  CHECK(apply_to_point(half_turn(), gaussian_unit()) == gaussian_unit());
  CHECK(apply_to_point(cusp_rotation(), omega()) == omega());
  // The barycenter of the p = 3 triangle is fixed by the conjugated rotation.
  const QuadraticPoint b(Rat(1, 2), Rat(1, 6), 3);
  CHECK(apply_to_point(conj_rot, b) == b);
}

TEST_CASE("imaginary part transforms as Im z over |cz+d|^2") {
  auto gen = testing::seeded(203);
  std::uniform_int_distribution<long> coord(-50, 50);
  std::uniform_int_distribution<long> pos(1, 50);
  for (int i = 0; i < 500; ++i) {
    const int radicand = (i % 2 == 0) ? 1 : 3;
    Rat x(coord(gen), pos(gen));
    Rat y(pos(gen), pos(gen));
    x.canonicalize();
    y.canonicalize();
    const QuadraticPoint z(x, y, radicand);
    const UnimodularMatrix g = testing::random_gamma2_element(gen);
    const QuadraticPoint image = apply_to_point(g, z);
    // Independent route to the denominator.
    Rat cxd = Rat(g.c()) * x + Rat(g.d());
    Rat modulus = cxd * cxd + Rat(g.c() * g.c()) * radicand * y * y;
    modulus.canonicalize();
    Rat expected = y / modulus;
    expected.canonicalize();
    CHECK(image.y == expected);
    CHECK(image.radicand == radicand);
  }
}

TEST_CASE("level-2 membership") {
  CHECK(in_gamma2(UnimodularMatrix(1, 0, 2, 1)));
  CHECK_FALSE(in_gamma2(UnimodularMatrix(1, 1, -1, 0)));
  CHECK(in_gamma2(UnimodularMatrix(1, 2, 0, 1)));
  CHECK(in_gamma2(kIdentity));
  CHECK_FALSE(in_gamma2(half_turn()));
}

TEST_CASE("carrying a cusp of the infinity class back to infinity") {
  CHECK(reduce_cusp_to_infinity(ExtendedRational(1, 0)) == kIdentity);
  CHECK(reduce_cusp_to_infinity(ExtendedRational(1, 2)) == UnimodularMatrix(1, 0, -2, 1));

  const ExtendedRational r(3, 2);
  const UnimodularMatrix g = reduce_cusp_to_infinity(r);
  CHECK(in_gamma2(g));
  CHECK(apply_to_cusp(g, r) == ExtendedRational::infinity());

  CHECK_THROWS_AS(reduce_cusp_to_infinity(ExtendedRational(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(reduce_cusp_to_infinity(ExtendedRational(1, 1)), std::invalid_argument);
}

TEST_CASE("cusp reduction holds on random inputs") {
  auto gen = testing::seeded(204);
  std::uniform_int_distribution<long> odd(-2000, 2000);
  std::uniform_int_distribution<long> even(-2000, 2000);
  int produced = 0;
  while (produced < 300) {
    long num = odd(gen) | 1;  // odd
    long den = even(gen) & ~1L;  // even
    Int g;
    mpz_gcd(g.get_mpz_t(), Int(num).get_mpz_t(), Int(den).get_mpz_t());
    if (g != 1) continue;
    ++produced;
    const ExtendedRational r(num, den);
    const UnimodularMatrix m = reduce_cusp_to_infinity(r);
    CHECK(in_gamma2(m));
    CHECK(apply_to_cusp(m, r) == ExtendedRational::infinity());
  }
}

namespace {

// The permutation of the three cusp classes induced by m.
std::array<CuspClass, 3> induced_permutation(const UnimodularMatrix& m) {
  const std::array<ExtendedRational, 3> seeds = {ExtendedRational(0, 1), ExtendedRational(1, 1),
                                                 ExtendedRational(1, 0)};
  return {cusp_class(apply_to_cusp(m, seeds[0])), cusp_class(apply_to_cusp(m, seeds[1])),
          cusp_class(apply_to_cusp(m, seeds[2]))};
}

}  // namespace

TEST_CASE("coset representatives cover SL(2, F2)") {
  const auto& reps = coset_representatives();
  CHECK(reps.size() == 6);

  bool has_identity = false;
  for (const auto& m : reps)
    if (m == kIdentity) has_identity = true;
  CHECK(has_identity);

  // Pairwise inequivalent modulo the level-2 subgroup.
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      CHECK_FALSE(in_gamma2(reps[i] * reps[j].inverse()));

  // The induced permutations realize all six elements of the symmetric group.
  std::set<std::array<CuspClass, 3>> perms;
  for (const auto& m : reps) perms.insert(induced_permutation(m));
  CHECK(perms.size() == 6);
}

TEST_CASE("the rotation induces a 3-cycle on the cusp classes") {
  const auto perm = induced_permutation(cusp_rotation());
  // A 3-cycle hits all three classes and fixes none.
  CHECK(perm[0] != CuspClass::Zero);
  CHECK(perm[1] != CuspClass::One);
  CHECK(perm[2] != CuspClass::Infinity);
  const std::set<CuspClass> image(perm.begin(), perm.end());
  CHECK(image.size() == 3);
}

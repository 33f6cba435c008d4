#include "trisphere/norm_solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <future>
#include <sstream>
#include <thread>

#include "trisphere/lambda_geometry.hpp"

namespace trisphere {

const char* to_string(Ring ring) {
  return ring == Ring::Eisenstein ? "eisenstein" : "gaussian";
}

Int NormWitness::norm_value() const {
  if (ring == Ring::Eisenstein) return norm(std::get<EisensteinInt>(value));
  return norm(std::get<GaussianInt>(value));
}

std::pair<Int, Int> NormWitness::pair() const {
  if (ring == Ring::Eisenstein) {
    const auto& e = std::get<EisensteinInt>(value);
    return {e.a, e.b};
  }
  const auto& g = std::get<GaussianInt>(value);
  return {g.c, g.d};
}

namespace {

// Plain (un-normalized) integer matrix; the sign of a lift matters while
// matching characteristic polynomials.
struct Lift {
  Int a, b, c, d;

  Lift negated() const { return {-a, -b, -c, -d}; }
  Int trace() const { return a + d; }
};

Lift lift_of(const UnimodularMatrix& m) { return {m.a(), m.b(), m.c(), m.d()}; }

using Vec4 = std::array<Int, 4>;
using Mat4 = std::array<Vec4, 4>;

// Basis of the integer kernel lattice of L, by unimodular column reduction:
// gcd-eliminate each row across the active columns, freeze the pivot, and
// read the kernel off the transformation matrix.
std::vector<Vec4> integer_kernel(Mat4 L) {
  Mat4 U{};
  for (int i = 0; i < 4; ++i) U[i][i] = 1;

  const auto col_axpy = [&](int dst, int src, const Int& q) {
    for (int r = 0; r < 4; ++r) {
      L[r][dst] -= q * L[r][src];
      U[r][dst] -= q * U[r][src];
    }
  };
  const auto col_swap = [&](int i, int j) {
    for (int r = 0; r < 4; ++r) {
      std::swap(L[r][i], L[r][j]);
      std::swap(U[r][i], U[r][j]);
    }
  };

  int lead = 0;
  for (int row = 0; row < 4 && lead < 4; ++row) {
    for (;;) {
      int jmin = -1;
      for (int j = lead; j < 4; ++j) {
        if (L[row][j] == 0) continue;
        if (jmin < 0 || mpz_cmpabs(L[row][j].get_mpz_t(), L[row][jmin].get_mpz_t()) < 0) jmin = j;
      }
      if (jmin < 0) break;  // row already zero on the active columns
      bool others = false;
      for (int j = lead; j < 4; ++j) {
        if (j == jmin || L[row][j] == 0) continue;
        others = true;
        col_axpy(j, jmin, Int(L[row][j] / L[row][jmin]));
      }
      if (!others) {
        col_swap(lead, jmin);
        ++lead;
        break;
      }
    }
  }

  std::vector<Vec4> kernel;
  for (int j = lead; j < 4; ++j) {
    Vec4 v;
    for (int r = 0; r < 4; ++r) v[r] = U[r][j];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

Int det2(const Vec4& g) { return g[0] * g[3] - g[1] * g[2]; }

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// One attempt at g with m·g = g·model and det g = 1, for fixed integer lifts.
// The solutions form a rank-2 lattice (the lifts share their characteristic
// polynomial); det is a definite quadratic form on it, positive definite
// exactly when a determinant-1 conjugator exists.
std::optional<UnimodularMatrix> try_conjugate(const Lift& m, const Lift& model) {
  const Mat4 L = {{
      {m.a - model.a, -model.c, m.b, Int(0)},
      {-model.b, m.a - model.d, Int(0), m.b},
      {m.c, Int(0), m.d - model.a, -model.c},
      {Int(0), m.c, -model.b, m.d - model.d},
  }};
  const std::vector<Vec4> kernel = integer_kernel(L);
  if (kernel.size() != 2) return std::nullopt;  // characteristic polynomials differ

  const Vec4& g1 = kernel[0];
  const Vec4& g2 = kernel[1];
  const Int q11 = det2(g1);
  const Int q22 = det2(g2);
  Vec4 sum;
  for (int i = 0; i < 4; ++i) sum[i] = g1[i] + g2[i];
  const Int q12 = det2(sum) - q11 - q22;

  const Int disc = q12 * q12 - 4 * q11 * q22;
  if (disc >= 0)
    throw std::logic_error("conjugate_to_model: determinant form is not definite");
  if (q11 < 0) return std::nullopt;  // negative definite: only det −1 conjugators exist

  // Q(x, y) = 1 forces x² ≤ 4·q22/|disc| and y² ≤ 4·q11/|disc|.
  const Int abs_disc = -disc;
  const Int m2 = 4 * std::max(q11, q22);
  const long smax = isqrt(m2 / abs_disc).get_si() + 1;

  for (long s = 1; s <= smax; ++s) {
    for (long x = -s; x <= s; ++x) {
      for (long y = -s; y <= s; ++y) {
        if (std::max(std::abs(x), std::abs(y)) != s) continue;
        const Int q = q11 * x * x + q12 * x * y + q22 * y * y;
        if (q != 1) continue;
        return UnimodularMatrix(x * g1[0] + y * g2[0], x * g1[1] + y * g2[1],
                                x * g1[2] + y * g2[2], x * g1[3] + y * g2[3]);
      }
    }
  }
  return std::nullopt;
}

bool is_order_three_trace(const Int& t) { return t == 1 || t == -1; }

}  // namespace

UnimodularMatrix conjugate_to_model(const UnimodularMatrix& m, const UnimodularMatrix& model) {
  const Int tm = m.a() + m.d();
  const Int tmodel = model.a() + model.d();
  const bool order3 = is_order_three_trace(tm) && is_order_three_trace(tmodel);
  const bool order2 = tm == 0 && tmodel == 0;
  if (!order3 && !order2)
    throw std::invalid_argument(
        "conjugate_to_model: arguments must be elliptic of equal order "
        "(trace ±1 pair or trace 0 pair)");

  std::optional<UnimodularMatrix> g;
  if (order3) {
    // Match characteristic polynomials by lifting both to trace +1.
    Lift lm = lift_of(m);
    Lift lmodel = lift_of(model);
    if (lm.trace() == -1) lm = lm.negated();
    if (lmodel.trace() == -1) lmodel = lmodel.negated();
    g = try_conjugate(lm, lmodel);
    if (!g)
      throw ConjugacyError("conjugate_to_model: elements lie in opposite order-3 classes");
  } else {
    // Both sign lifts share the characteristic polynomial x² + 1; the
    // positive definite side picks the conjugating sign.
    const Lift lmodel = lift_of(model);
    g = try_conjugate(lift_of(m), lmodel);
    if (!g) g = try_conjugate(lift_of(m).negated(), lmodel);
    if (!g) throw ConjugacyError("conjugate_to_model: no determinant-1 conjugator");
  }

  if (compose(compose(*g, model), g->inverse()) != m)
    throw std::logic_error("conjugate_to_model: conjugation identity failed post-check");
  return *g;
}

std::optional<NormWitness> represent_eisenstein(const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("represent_eisenstein: p must be prime");
  if (p == 2) return std::nullopt;  // no triangles of λ-length 2, and 2 is not a²−ab+b²

  const OrbitDecomposition od = orbit_decomposition(p);
  if (od.fixed.empty()) return std::nullopt;

  const CanonicalTriangle t = od.fixed.front();
  const UnimodularMatrix vertex_cycle = *stabilizer_matrix(t);

  // Exactly one of the two rotations of the triangle is conjugate to the
  // model rotation by a determinant-1 element.
  UnimodularMatrix stab = vertex_cycle;
  UnimodularMatrix g;
  try {
    g = conjugate_to_model(stab, cusp_rotation());
  } catch (const ConjugacyError&) {
    stab = vertex_cycle * vertex_cycle;
    g = conjugate_to_model(stab, cusp_rotation());
  }

  NormWitness w;
  w.p = p;
  w.ring = Ring::Eisenstein;
  w.value = EisensteinInt{g.d(), g.c()};  // d + c·ω
  w.triangle = t;
  w.k = t.k();
  w.stabilizer = stab;
  w.conjugator = g;
  w.fixed_point = barycenter(t);
  if (w.norm_value() != p)
    throw std::logic_error("represent_eisenstein: conjugator row norm is not p");
  return w;
}

std::optional<NormWitness> represent_gaussian(const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("represent_gaussian: p must be prime");

  Int k = 0;
  for (Int j = 1; j < p; ++j) {
    if ((j * j + 1) % p == 0) {
      k = j;
      break;
    }
  }
  if (k == 0) return std::nullopt;

  // The order-2 element swapping ∞ with k/p; its fixed point is the midpoint
  // (k + i)/p of the vertical arc of λ-length p.
  const UnimodularMatrix swap_matrix(k, -((k * k + 1) / p), p, -k);
  const UnimodularMatrix g = conjugate_to_model(swap_matrix, half_turn());

  NormWitness w;
  w.p = p;
  w.ring = Ring::Gaussian;
  w.value = GaussianInt{g.c(), g.d()};
  w.k = k;
  w.stabilizer = swap_matrix;
  w.conjugator = g;
  w.fixed_point =
      vertical_arc_midpoint(Arc(ExtendedRational::infinity(), ExtendedRational(k, p)), 1);
  if (w.norm_value() != p)
    throw std::logic_error("represent_gaussian: conjugator row norm is not p");
  return w;
}

namespace {

std::int64_t isqrt64(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void check_oracle_range(std::int64_t n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be positive");
  if (n >= (std::int64_t{1} << 56))
    throw std::domain_error(std::string(who) + ": scan exceeds the 64-bit safe range");
}

}  // namespace

std::set<std::pair<std::int64_t, std::int64_t>> brute_force_eisenstein(std::int64_t n) {
  check_oracle_range(n, "brute_force_eisenstein");
  // a² − ab + b² ≥ max(a², b²)/4 on integers, so |a|, |b| ≤ ceil(2√n) is a
  // complete (if generous) search box.
  const std::int64_t t = isqrt64(4 * n);
  const std::int64_t bound = (t * t == 4 * n) ? t : t + 1;
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b)
      if (a * a - a * b + b * b == n) out.emplace(a, b);
  return out;
}

std::set<std::pair<std::int64_t, std::int64_t>> brute_force_gaussian(std::int64_t n) {
  check_oracle_range(n, "brute_force_gaussian");
  const std::int64_t bound = isqrt64(n);
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t c = -bound; c <= bound; ++c)
    for (std::int64_t d = -bound; d <= bound; ++d)
      if (c * c + d * d == n) out.emplace(c, d);
  return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> canonical_pair(
    const std::set<std::pair<std::int64_t, std::int64_t>>& solutions, Ring ring) {
  std::optional<std::pair<std::int64_t, std::int64_t>> best;
  for (const auto& [u, v] : solutions) {
    const bool admissible = ring == Ring::Eisenstein ? (v > 0 && v <= u) : (u > 0 && u <= v);
    if (!admissible) continue;
    if (!best || std::make_pair(u, v) < *best) best = {u, v};
  }
  return best;
}

namespace {

bool fits_oracle(const Int& p) { return p.fits_slong_p() && p.get_si() < (1L << 56); }

void audit_witness(const NormWitness& w, const UnimodularMatrix& model,
                   std::vector<std::string>& failures) {
  const auto flag = [&](const std::string& msg) {
    failures.push_back("p=" + w.p.get_str() + " " + std::string(to_string(w.ring)) + ": " + msg);
  };

  if (w.norm_value() != w.p) flag("witness norm is not p");

  if (compose(compose(w.conjugator, model), w.conjugator.inverse()) != w.stabilizer)
    flag("conjugator does not reproduce the stabilizer");

  if (apply_to_point(w.stabilizer, w.fixed_point) != w.fixed_point)
    flag("stabilizer does not fix the certificate point");

  // Imaginary coefficient law: 1/(2p) at the barycenter, 1/p at the midpoint.
  Rat expected_y(1, (w.ring == Ring::Eisenstein ? 2 * w.p : w.p));
  expected_y.canonicalize();
  if (w.fixed_point.y != expected_y) flag("certificate point has the wrong height");

  const Int c = w.conjugator.c();
  const Int d = w.conjugator.d();
  const Int row_norm =
      w.ring == Ring::Eisenstein ? Int(c * c - c * d + d * d) : Int(c * c + d * d);
  if (row_norm != w.p) flag("conjugator bottom row does not represent p");
}

PrimeVerification verify_prime(const Int& p) {
  PrimeVerification pv;
  pv.p = p;
  auto fail = [&pv](const std::string& msg) {
    pv.failures.push_back("p=" + pv.p.get_str() + ": " + msg);
  };

  // Eisenstein side.
  {
    const bool expected = (p == 3 || p % 3 == 1);
    pv.eisenstein = represent_eisenstein(p);
    const std::size_t before = pv.failures.size();
    if (pv.eisenstein.has_value() != expected)
      fail("eisenstein presence disagrees with the congruence criterion");
    if (fits_oracle(p)) {
      const auto oracle = brute_force_eisenstein(p.get_si());
      if (pv.eisenstein.has_value() != !oracle.empty())
        fail("eisenstein presence disagrees with the brute-force oracle");
      if (pv.eisenstein) {
        const auto [a, b] = pv.eisenstein->pair();
        if (!oracle.count({a.get_si(), b.get_si()}))
          fail("eisenstein witness missing from the oracle set");
        if (const auto name = canonical_pair(oracle, Ring::Eisenstein))
          pv.eisenstein_canonical = std::make_pair(Int(name->first), Int(name->second));
      }
    }
    if (pv.eisenstein) audit_witness(*pv.eisenstein, cusp_rotation(), pv.failures);
    pv.eisenstein_ok = pv.failures.size() == before;
  }

  // Gaussian side.
  {
    const bool expected = (p == 2 || p % 4 == 1);
    pv.gaussian = represent_gaussian(p);
    const std::size_t before = pv.failures.size();
    if (pv.gaussian.has_value() != expected)
      fail("gaussian presence disagrees with the congruence criterion");
    if (fits_oracle(p)) {
      const auto oracle = brute_force_gaussian(p.get_si());
      if (pv.gaussian.has_value() != !oracle.empty())
        fail("gaussian presence disagrees with the brute-force oracle");
      if (pv.gaussian) {
        const auto [c, d] = pv.gaussian->pair();
        if (!oracle.count({c.get_si(), d.get_si()}))
          fail("gaussian witness missing from the oracle set");
        if (const auto name = canonical_pair(oracle, Ring::Gaussian))
          pv.gaussian_canonical = std::make_pair(Int(name->first), Int(name->second));
      }
    }
    if (pv.gaussian) audit_witness(*pv.gaussian, half_turn(), pv.failures);
    pv.gaussian_ok = pv.failures.size() == before;
  }

  // Triangle family laws; the λ-length-p family needs p odd.
  if (p == 2) {
    pv.counts_ok = true;
    pv.mod3_ok = true;
  } else {
    {
      const std::size_t before = pv.failures.size();
      pv.arc_count = enumerate_incident_arcs(p).size();
      const auto triangles = enumerate_triangles(p);
      pv.triangle_count = triangles.size();
      if (Int(pv.arc_count) != 2 * (p - 1)) fail("arc count is not 2(p-1)");
      if (Int(pv.triangle_count) != 2 * (p - 2)) fail("triangle count is not 2(p-2)");
      for (const auto& t : triangles)
        if (!is_properly_immersed(t)) {
          fail("triangle k=" + t.k().get_str() + " is not properly immersed");
          break;
        }
      const IncidenceCensus census = incidence_census(p);
      if (!census.balanced || census.total_spikes != 3 * pv.triangle_count)
        fail("incidence census is unbalanced");
      pv.counts_ok = pv.failures.size() == before;
    }
    {
      const std::size_t before = pv.failures.size();
      const OrbitDecomposition od = orbit_decomposition(p);
      pv.fixed_count = od.fixed.size();
      if ((Int(pv.triangle_count) - Int(pv.fixed_count)) % 3 != 0)
        fail("fixed count violates the mod-3 law");
      const bool expect_none = (p % 3 == 2 && p > 3);
      if ((pv.fixed_count == 0) != expect_none)
        fail("fixed-triangle existence disagrees with the congruence classes");
      if (pv.eisenstein.has_value() != (pv.fixed_count > 0))
        fail("solver presence disagrees with the fixed-triangle count");
      pv.mod3_ok = pv.failures.size() == before;
    }
  }

  pv.all_ok = pv.eisenstein_ok && pv.gaussian_ok && pv.counts_ok && pv.mod3_ok;
  return pv;
}

std::vector<unsigned long> primes_up_to(unsigned long n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<unsigned long> primes;
  for (unsigned long i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (unsigned long j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

VerificationReport verify_theorems(const Int& p_max, unsigned threads) {
  if (p_max < 3) throw std::invalid_argument("verify_theorems: p_max must be at least 3");
  if (!p_max.fits_ulong_p() || p_max.get_ui() > 100'000'000UL)
    throw std::domain_error("verify_theorems: sweep bound too large to sieve");

  const std::vector<unsigned long> primes = primes_up_to(p_max.get_ui());

  VerificationReport report;
  report.p_max = p_max;
  report.primes.resize(primes.size());

  unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, primes.size()));

  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= primes.size()) return;
      report.primes[i] = verify_prime(Int(primes[i]));
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  report.all_passed = true;
  for (const PrimeVerification& pv : report.primes) {
    report.failure_count += pv.failures.size();
    if (!pv.all_ok) report.all_passed = false;
  }
  return report;
}

}  // namespace trisphere

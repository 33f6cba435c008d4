#include <benchmark/benchmark.h>

#include <random>

#include "trisphere/lambda_geometry.hpp"
#include "trisphere/norm_solver.hpp"
#include "trisphere/render.hpp"
#include "trisphere/triangle_orbits.hpp"

using namespace trisphere;

namespace {

// Primes spread across the sweep range, one per decade of interest.
void prime_args(benchmark::internal::Benchmark* b) {
  for (long p : {7L, 97L, 499L, 997L, 1999L}) b->Arg(p);
}

void BM_LambdaLength(benchmark::State& state) {
  std::mt19937 gen(42);
  std::uniform_int_distribution<long> dist(-100000, 100000);
  std::vector<Arc> arcs;
  for (int i = 0; i < 256; ++i) {
    const long a = dist(gen), c = dist(gen), b = dist(gen), d = dist(gen);
    if ((a == 0 && c == 0) || (b == 0 && d == 0)) {
      --i;
      continue;
    }
    const ExtendedRational e1(a, c), e2(b, d);
    if (e1 == e2) {
      --i;
      continue;
    }
    arcs.emplace_back(e1, e2);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_length(arcs[i++ % arcs.size()]));
  }
}
BENCHMARK(BM_LambdaLength);

void BM_EnumerateTriangles(benchmark::State& state) {
  const Int p(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_triangles(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateTriangles)->Apply(prime_args)->Complexity(benchmark::oN);

void BM_OrbitDecomposition(benchmark::State& state) {
  const Int p(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_decomposition(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OrbitDecomposition)->Apply(prime_args)->Complexity(benchmark::oNLogN);

void BM_RepresentEisenstein(benchmark::State& state) {
  const Int p(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(represent_eisenstein(p));
}
BENCHMARK(BM_RepresentEisenstein)->Arg(7)->Arg(97)->Arg(997)->Arg(1999);

void BM_RepresentGaussian(benchmark::State& state) {
  const Int p(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(represent_gaussian(p));
}
BENCHMARK(BM_RepresentGaussian)->Arg(5)->Arg(97)->Arg(997)->Arg(1997);

// Cornacchia's algorithm as a classical baseline for the two-squares search.
// Lives only here: the solver path is the geometric one.
std::optional<std::pair<long, long>> cornacchia_two_squares(long p) {
  if (p == 2) return std::make_pair(1L, 1L);
  if (p % 4 != 1) return std::nullopt;
  long t = 0;
  for (long k = 2; k < p; ++k) {
    // square root of −1 mod p by exponentiation
    long x = 1, base = k % p, e = (p - 1) / 4;
    while (e > 0) {
      if (e & 1) x = static_cast<long>((__int128)x * base % p);
      base = static_cast<long>((__int128)base * base % p);
      e >>= 1;
    }
    if (static_cast<long>((__int128)x * x % p) == p - 1) {
      t = x;
      break;
    }
  }
  long a = p, b = t;
  while (b * b > p) {
    const long r = a % b;
    a = b;
    b = r;
  }
  const long c2 = p - b * b;
  const long d = static_cast<long>(std::sqrt(static_cast<double>(c2)));
  if (d * d != c2) return std::nullopt;
  return std::make_pair(b, d);
}

void BM_CornacchiaBaseline(benchmark::State& state) {
  const long p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(cornacchia_two_squares(p));
}
BENCHMARK(BM_CornacchiaBaseline)->Arg(5)->Arg(97)->Arg(997)->Arg(1997);

void BM_BruteForceOracle(benchmark::State& state) {
  const long p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_eisenstein(p));
}
BENCHMARK(BM_BruteForceOracle)->Arg(97)->Arg(997)->Arg(1999);

void BM_VerifySweep(benchmark::State& state) {
  const Int p_max(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorems(p_max, 1));
}
BENCHMARK(BM_VerifySweep)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_RenderSvg(benchmark::State& state) {
  const Int p(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(render_svg(p));
}
BENCHMARK(BM_RenderSvg)->Arg(7)->Arg(97)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "gradua/reference.hpp"

namespace gradua {
namespace {

GRingPtr cubic_ring() { return make_ring({"x", "y", "z", "w"}, {1, 1, 1, 1}, {}); }

// Reduced basis of a dense ideal of cubics in four variables.
void BM_GroebnerCubics(benchmark::State& state) {
  GRingPtr R = cubic_ring();
  std::vector<Polynomial> gens = {R->parse("x^3 + y^2*z - w^3"), R->parse("x*y*z - z^2*w + y^3"),
                                  R->parse("x^2*w + y*z^2 - x*y*w")};
  std::vector<ModuleVector> vecs;
  for (const auto& g : gens) vecs.push_back(R->to_vector(g));
  for (auto _ : state) {
    GroebnerBasis G = groebner(R->line(), vecs);
    benchmark::DoNotOptimize(G.size());
  }
}
BENCHMARK(BM_GroebnerCubics)->Unit(benchmark::kMillisecond);

// Minimal resolution of the residue field, length = number of variables.
void BM_KoszulResolution(benchmark::State& state) {
  GRingPtr R = cubic_ring();
  HomogeneousIdeal m(R, {R->parse("x"), R->parse("y"), R->parse("z"), R->parse("w")});
  FreeModule F = R->free_module({0});
  std::vector<ModuleVector> rels;
  for (const auto& g : m.gens()) rels.push_back(R->to_vector(g));
  SubquotientModule k(R, F, {F.basis(0)}, rels);
  for (auto _ : state) {
    FreeResolution res = free_resolution(k, 4);
    benchmark::DoNotOptimize(res.modules.size());
  }
}
BENCHMARK(BM_KoszulResolution)->Unit(benchmark::kMillisecond);

// Ext^k(L, M/I^n N) over K[x,y]/(xy) for growing n.
void BM_ExtCrossRing(benchmark::State& state) {
  CrossData d = cross_data(false);
  FamilySpec f = cross_family(d, Functor::kExt, 1);
  FreeResolution res = free_resolution(d.L, 2);
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SubquotientModule H = family_module(f, n, &res);
    benchmark::DoNotOptimize(H.gens().size());
  }
}
BENCHMARK(BM_ExtCrossRing)->Arg(2)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

// Associated primes and local v-numbers of (U + I^n U)/I^n U for the torsion module.
void BM_VNumberTorsion(benchmark::State& state) {
  TorsionData d = torsion_data(2, 3);
  FamilySpec f = torsion_family(d);
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    VRecord r = v_number(family_module(f, n, nullptr));
    benchmark::DoNotOptimize(r.v);
  }
}
BENCHMARK(BM_VNumberTorsion)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

// Full v-function sweep n = 1..12 with a thread pool.
void BM_VFunctionSweep(benchmark::State& state) {
  CrossData d = cross_data(true);
  FamilySpec f = cross_family(d, Functor::kTor, 2);
  SweepOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    VFunctionReport r = v_function(f, 1, 12, opts);
    benchmark::DoNotOptimize(r.rows.size());
  }
}
BENCHMARK(BM_VFunctionSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace gradua

BENCHMARK_MAIN();

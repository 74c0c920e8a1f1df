#include <benchmark/benchmark.h>

#include <random>

#include "rollfac/gbengine.hpp"
#include "rollfac/hyperell.hpp"
#include "rollfac/obstruct.hpp"
#include "rollfac/rolling.hpp"
#include "rollfac_app/io.hpp"

using namespace rf;

namespace {

BihomForm quadric(int e) {
  ScrollType S({e, e - 1, e - 2});
  auto n = [](int k) { return std::to_string(k); };
  return app::bihom_from_text(S, {2, e}, "s^" + n(e) + "*x^2 + t^" + n(e - 2) + "*y^2 + s^" + n(e - 3) + "*t*x*z");
}

}  // namespace

static void BM_Roll(benchmark::State& st) {
  auto P = quadric(static_cast<int>(st.range(0)));
  auto sch = canonical_scheme(P);
  for (auto _ : st) benchmark::DoNotOptimize(roll_equations(P, sch));
}
BENCHMARK(BM_Roll)->Arg(6)->Arg(10)->Arg(16);

static void BM_LiftingMatrix(benchmark::State& st) {
  auto P = quadric(static_cast<int>(st.range(0)));
  auto v = make_deform_vars(P.scroll, {P.cls.b});
  for (auto _ : st) benchmark::DoNotOptimize(lifting_matrix({P}, v).rank());
}
BENCHMARK(BM_LiftingMatrix)->Arg(6)->Arg(10)->Arg(16);

static void BM_BaseEquations(benchmark::State& st) {
  auto P = quadric(static_cast<int>(st.range(0)));
  auto v = make_deform_vars(P.scroll, {P.cls.b});
  auto sch = canonical_scheme(P);
  for (auto _ : st) benchmark::DoNotOptimize(base_equations(P, sch, v));
}
BENCHMARK(BM_BaseEquations)->Arg(6)->Arg(10);

static void BM_GroebnerLemma(benchmark::State& st) {
  std::vector<Rat> roots;
  for (int i = 0; i < st.range(0); ++i) roots.push_back(Rat(i * i - 3 * i + 1 + i));
  auto sys = lemma_system(from_roots(roots));
  for (auto _ : st) benchmark::DoNotOptimize(gb::run_prime(sys.pi[0], 31991));
}
BENCHMARK(BM_GroebnerLemma)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

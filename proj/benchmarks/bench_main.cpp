#include <benchmark/benchmark.h>

#include "supernil/catalog.hpp"
#include "supernil/corpus.hpp"
#include "supernil/cyclotomic.hpp"
#include "supernil/invariants.hpp"

using namespace supernil;

static void ScalarMultiplyConductor12(benchmark::State& state) {
  Scalar a = Scalar::parse("(1/2)*z^3 + z - 2", 12);
  Scalar b = Scalar::parse("z^2 - 3", 12);
  for (auto _ : state) {
    Scalar c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(ScalarMultiplyConductor12);

/// Exhaustive identity check over all (n+m)^3 ordered triples of family M.
static void SuperidentityCheckM(benchmark::State& state) {
  const unsigned n = unsigned(state.range(0));
  const SuperAlgebra a =
      make_family({"M", n, n, {{"theta", Scalar::one(1)}}}, false);
  for (auto _ : state) {
    auto violations = a.check_superidentity();
    benchmark::DoNotOptimize(violations);
  }
}
BENCHMARK(SuperidentityCheckM)->Arg(4)->Arg(5)->Arg(6);

static void CentralSeriesM(benchmark::State& state) {
  const unsigned n = unsigned(state.range(0));
  const SuperAlgebra a = make_family({"M", n, n, {{"theta", Scalar::one(1)}}});
  for (auto _ : state) {
    SeriesReport report = central_series(a);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(CentralSeriesM)->Arg(4)->Arg(5)->Arg(6);

/// Combined-strategy characteristic sequence on a dense isomorphic copy, the
/// dominant cost of corpus verification.
static void CharSequenceDenseL(benchmark::State& state) {
  const unsigned n = unsigned(state.range(0));
  const SuperAlgebra a = random_basis_change(
      make_family({"L", n, n - 1, {{"theta", Scalar::one(1)}}}), 17);
  for (auto _ : state) {
    CharSequence cs = char_sequence(a);
    benchmark::DoNotOptimize(cs);
  }
}
BENCHMARK(CharSequenceDenseL)->Arg(4)->Arg(5)->Arg(6);

static void FingerprintLeib2m(benchmark::State& state) {
  const SuperAlgebra a = make_family({"Leib2m-a", 2, 5, {}});
  for (auto _ : state) {
    Fingerprint fp = invariant_fingerprint(a);
    benchmark::DoNotOptimize(fp);
  }
}
BENCHMARK(FingerprintLeib2m);

int main(int argc, char** argv) {
  ::benchmark::Initialize(&argc, argv);
  if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  ::benchmark::RunSpecifiedBenchmarks();
  return 0;
}

#include <benchmark/benchmark.h>

#include "divisor_forge/groebner.hpp"
#include "divisor_forge/poly_parse.hpp"

using namespace dforge;

namespace {

struct System {
  std::vector<std::string> vars;
  std::vector<std::string> gens;
};

const System kSystems[] = {
    {{"a", "b", "c", "d"},
     {"a+b+c+d", "a*b+b*c+c*d+d*a", "a*b*c+b*c*d+c*d*a+d*a*b", "a*b*c*d-1"}},  // cyclic-4
    {{"x", "y", "z", "t"},
     {"x+2*y+2*z+2*t-1", "x^2+2*y^2+2*z^2+2*t^2-x", "2*x*y+2*y*z+2*z*t-y", "y^2+2*x*z+2*y*t-z"}},  // katsura-3
    {{"x", "y", "z", "w"}, {"x*w-y*z", "y^2-x*z", "z^2-y*w", "x^3+y^3+z^3+w^3"}},  // twisted cubic cut
};

std::vector<Polynomial> load(const System& s) {
  std::vector<Polynomial> out;
  for (auto& g : s.gens) out.push_back(parsePolynomial(g, s.vars));
  return out;
}

void BM_Parallel(benchmark::State& state) {
  const System& s = kSystems[state.range(0)];
  auto gens = load(s);
  for (auto _ : state) benchmark::DoNotOptimize(groebnerBasis(gens, s.vars.size(), MonomialOrder{}, true));
}

void BM_Serial(benchmark::State& state) {
  const System& s = kSystems[state.range(0)];
  auto gens = load(s);
  for (auto _ : state) benchmark::DoNotOptimize(groebnerBasis(gens, s.vars.size(), MonomialOrder{}, false));
}

void BM_Reference(benchmark::State& state) {
  const System& s = kSystems[state.range(0)];
  auto gens = load(s);
  for (auto _ : state) benchmark::DoNotOptimize(groebnerBasisReference(gens, s.vars.size(), MonomialOrder{}));
}

}  // namespace

BENCHMARK(BM_Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reference)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

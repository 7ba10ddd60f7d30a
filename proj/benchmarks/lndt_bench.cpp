#include <benchmark/benchmark.h>

#include <vector>

#include "lndt/lndt.hpp"

namespace {

using namespace lndt;

const TypeExpr kInt = TypeExpr::base(AtomSort::Int);

std::vector<Atom> iota_atoms(std::size_t n) {
  std::vector<Atom> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(static_cast<std::int64_t>(i));
  return out;
}

// Full nest with `layers` layers: 2^layers - 1 atoms.
Val full_nest(std::size_t layers) { return nest_full(layers, iota_atoms(perfect_count(2, layers))); }

// Largest of 200 generated bushes within the budget.
Val big_bush(std::size_t budget) {
  GenConfig cfg;
  cfg.budget = budget;
  Val best = Val::seq({});
  for (cfg.seed = 0; cfg.seed < 200; ++cfg.seed) {
    Val v = gen_val(TypeExpr::app(Code::bush(), kInt), cfg);
    if (struct_size(v) > struct_size(best)) best = std::move(v);
  }
  return best;
}

Atom succ(const Atom& a) { return a.as_int() + 1; }

void BM_NestMap(benchmark::State& state) {
  const Code nest = resolve_alias("nest");
  const Val v = full_nest(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(map(nest, succ, v));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(size(nest, v)));
}
BENCHMARK(BM_NestMap)->DenseRange(4, 14, 2);

void BM_NestFoldl(benchmark::State& state) {
  const Code nest = resolve_alias("nest");
  const Val v = full_nest(static_cast<std::size_t>(state.range(0)));
  auto add = [](std::int64_t acc, const Atom& a) { return acc + a.as_int(); };
  for (auto _ : state) benchmark::DoNotOptimize(foldl(nest, add, std::int64_t{0}, v));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(size(nest, v)));
}
BENCHMARK(BM_NestFoldl)->DenseRange(4, 14, 2);

void BM_NestWf(benchmark::State& state) {
  const TypeExpr t = TypeExpr::app(resolve_alias("nest"), kInt);
  const Val v = full_nest(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wf(t, v));
}
BENCHMARK(BM_NestWf)->DenseRange(4, 14, 2);

void BM_NestParse(benchmark::State& state) {
  const std::string text = print_val(full_nest(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(parse_val(text));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_NestParse)->DenseRange(4, 14, 2);

void BM_BushMap(benchmark::State& state) {
  const Code bush = Code::bush();
  const Val v = big_bush(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(map(bush, succ, v));
  state.counters["nodes"] = static_cast<double>(struct_size(v));
}
BENCHMARK(BM_BushMap)->RangeMultiplier(4)->Range(16, 4096);

void BM_BushAny(benchmark::State& state) {
  const Code bush = Code::bush();
  const Val v = big_bush(static_cast<std::size_t>(state.range(0)));
  auto never = [](const Atom&) { return false; };
  for (auto _ : state) benchmark::DoNotOptimize(any(bush, never, v));
  state.counters["nodes"] = static_cast<double>(struct_size(v));
}
BENCHMARK(BM_BushAny)->RangeMultiplier(4)->Range(16, 4096);

void BM_BushToBushN(benchmark::State& state) {
  const Val v = big_bush(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(to_bushn(v));
}
BENCHMARK(BM_BushToBushN)->RangeMultiplier(4)->Range(16, 4096);

void BM_EnumNest(benchmark::State& state) {
  const TypeExpr t = TypeExpr::app(resolve_alias("nest"), kInt);
  for (auto _ : state) benchmark::DoNotOptimize(enum_vals(t, static_cast<std::size_t>(state.range(0)), {0, 1}));
}
BENCHMARK(BM_EnumNest)->DenseRange(6, 14, 4);

}  // namespace

BENCHMARK_MAIN();

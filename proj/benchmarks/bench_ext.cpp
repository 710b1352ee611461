#include <benchmark/benchmark.h>

#include "subext/ext.hpp"
#include "subext/subfun.hpp"
#include "subext/ulrich.hpp"

using namespace subext;

namespace {

RingPtr dvr(int p) {
    RingSpec s;
    s.family = Family::Dvr;
    s.p = p;
    return Ring::build(s);
}

RingPtr semigroup(std::vector<int> gens) {
    RingSpec s;
    s.family = Family::Semigroup;
    s.gens = std::move(gens);
    return Ring::build(s);
}

ModulePtr cyclic(const RingPtr& R, int a) { return from_quotient(FracIdeal::monomial(R, {a})); }

// Ext^1(R/t^a, R/t^a) over F_2[t]_(t): 2^a classes
void bm_ext_build(benchmark::State& state) {
    auto R = dvr(2);
    auto M = cyclic(R, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ExtPresentation::build(M, M));
    }
}
BENCHMARK(bm_ext_build)->DenseRange(1, 4);

void bm_middle(benchmark::State& state) {
    auto R = semigroup({3, 4, 5});
    auto m = from_fractional_ideal(FracIdeal::maximal(R));
    auto e = ExtPresentation::build(m, m);
    const std::uint64_t n = e->class_count();
    std::uint64_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(middle(e->class_at(k++ % n)));
    }
}
BENCHMARK(bm_middle);

// mu-additive classes of Ext^1(R/t^2 + R/t^2, R/t^2 + R/t^2) over F_p[t]_(t)
void bm_ext1_sub_mu(benchmark::State& state) {
    auto R = dvr(static_cast<int>(state.range(0)));
    auto Q = cyclic(R, 2);
    auto M = direct_sum({Q, Q});
    auto e = ExtPresentation::build(M, M);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ext1_sub(e, {NumFn::mu()}));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * e->class_count()));
}
BENCHMARK(bm_ext1_sub_mu)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void bm_ext1_ul(benchmark::State& state) {
    auto R = semigroup({2, 3});
    auto I = FracIdeal::maximal(R);
    auto sample = ul_sample(I, 5, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ext1_ul(sample[1].module, sample[2].module, I, 1));
    }
}
BENCHMARK(bm_ext1_ul)->Unit(benchmark::kMillisecond);

void bm_resolution(benchmark::State& state) {
    auto R = semigroup({3, 7, 8});
    auto w = canonical_module(R);
    for (auto _ : state) {
        // fresh module each time so the cache is cold
        auto W = direct_sum({w});
        benchmark::DoNotOptimize(W->resolution(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(bm_resolution)->DenseRange(1, 4);

void bm_is_isomorphic(benchmark::State& state) {
    auto R = semigroup({3, 4, 5});
    auto md = dualize_omega(from_fractional_ideal(FracIdeal::maximal(R)));
    auto E = min_mcm_approx_k(R).seq.X;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_isomorphic(E, md));
    }
}
BENCHMARK(bm_is_isomorphic);

} // namespace

BENCHMARK_MAIN();

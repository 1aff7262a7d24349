#include <benchmark/benchmark.h>

#include <random>

#include "thetadic/invert.hpp"
#include "thetadic/model_set.hpp"
#include "thetadic/multiops.hpp"

using namespace thetadic;

namespace {

RingElt random_elt(const ThetaParams& prm, std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    return make_elt(prm, Int(d(rng)), Int(d(rng)));
}

void BM_Expand(benchmark::State& state) {
    ThetaParams prm(state.range(0), 1);
    std::mt19937_64 rng(42);
    std::vector<RingElt> xs;
    for (int i = 0; i < 512; ++i) xs.push_back(random_elt(prm, rng, 100000));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(expand(xs[i++ & 511]));
    }
}
BENCHMARK(BM_Expand)->Arg(1)->Arg(3)->Arg(5);

void BM_Valuation(benchmark::State& state) {
    ThetaParams prm(state.range(0), 1);
    std::mt19937_64 rng(42);
    std::vector<RingElt> xs;
    for (int i = 0; i < 512; ++i) {
        RingElt x = random_elt(prm, rng, 100000);
        if (x.is_zero()) x = make_theta(prm);
        xs.push_back(x);
    }
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(valuation(xs[i++ & 511]));
    }
}
BENCHMARK(BM_Valuation)->Arg(1)->Arg(3)->Arg(5);

void BM_Mul(benchmark::State& state) {
    ThetaParams prm(4, -1);
    std::mt19937_64 rng(42);
    RingElt x = random_elt(prm, rng, 1 << 30);
    RingElt y = random_elt(prm, rng, 1 << 30);
    for (auto _ : state) {
        benchmark::DoNotOptimize(x * y);
    }
}
BENCHMARK(BM_Mul);

void BM_InvertResidual(benchmark::State& state) {
    ThetaParams prm(4, 1);
    InverseSeries inv = invert_integer(prm, 3);
    const long k = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(inv.residual(k));
    }
}
BENCHMARK(BM_InvertResidual)->Arg(32)->Arg(128);

void BM_ModelSet(benchmark::State& state) {
    ThetaParams prm(1, 1);
    FieldElt R(make_int(prm, state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(model_set(prm, z_theta_window(prm), R));
    }
}
BENCHMARK(BM_ModelSet)->Arg(100)->Arg(1000);

void BM_Representatives(benchmark::State& state) {
    ThetaParams prm(state.range(0), state.range(1));
    std::mt19937_64 rng(43);
    std::vector<RingElt> xs;
    for (int i = 0; i < 128; ++i) {
        RingElt x = random_elt(prm, rng, 500);
        if (x.is_zero()) x = make_theta(prm);
        xs.push_back(x);
    }
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(representatives(xs[i++ & 127]));
    }
}
BENCHMARK(BM_Representatives)->Args({1, 1})->Args({5, -1});

}  // namespace

BENCHMARK_MAIN();

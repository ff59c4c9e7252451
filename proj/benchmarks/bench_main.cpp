#include <benchmark/benchmark.h>

#include "mop/examples.hpp"
#include "mop/fourier.hpp"
#include "mop/structure.hpp"

using namespace mop;

namespace {

DiffOp hermite_d1(const Rat& a) {
    ParseContext ctx{{{"a", a}}, 2};
    return parse_expression(
        "dx^2*[[1,0],[0,1]] + dx*[[-2*x,2*a],[0,-2*x]] + [[-2,0],[0,0]]", ctx);
}

void BM_OperatorProduct(benchmark::State& state) {
    DiffOp d = hermite_d1(frac(2, 3));
    for (auto _ : state) benchmark::DoNotOptimize(d * d);
}
BENCHMARK(BM_OperatorProduct);

void BM_FormalDagger(benchmark::State& state) {
    Weight w = make_laguerre_2x2(frac(2, 3), frac(1, 2));
    ParseContext ctx{{{"a", frac(2, 3)}, {"b", frac(1, 2)}}, 2};
    DiffOp d = parse_expression(
        "dx^2*[[x,0],[0,x]] + dx*[[1+b-x,2*a*x],[0,1+b-x]] + [[-1,a*(b+1)],[0,0]]", ctx);
    for (auto _ : state) benchmark::DoNotOptimize(formal_dagger(d, w));
}
BENCHMARK(BM_FormalDagger);

void BM_MonicSequence(benchmark::State& state) {
    Weight w = make_hermite_2x2(frac(2, 3));
    int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(MOPSequence::build(w, n_max));
}
BENCHMARK(BM_MonicSequence)->Arg(6)->Arg(12);

void BM_Membership(benchmark::State& state) {
    Weight w = make_hermite_2x2(frac(2, 3));
    MOPSequence seq = MOPSequence::build(w, 14);
    DiffOp d = hermite_d1(frac(2, 3));
    for (auto _ : state) benchmark::DoNotOptimize(dw_membership(d, seq, 12));
}
BENCHMARK(BM_Membership);

void BM_HermiteFamilyPipeline(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(examples::hermite_family(frac(2, 3), 10));
}
BENCHMARK(BM_HermiteFamilyPipeline);

}  // namespace

BENCHMARK_MAIN();

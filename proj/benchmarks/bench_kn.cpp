#include <benchmark/benchmark.h>

#include "kn/cocycles.hpp"
#include "kn/fock.hpp"

namespace {

using namespace kn;

const MarkedSphere& two_point() {
    static MarkedSphere g({GaussianRational(0), GaussianRational(1)});
    return g;
}

void bm_basis_element(benchmark::State& state) {
    HalfInteger n(state.range(0));
    for (auto _ : state) {
        // fresh cache so the element is actually rebuilt each time
        BasisCache basis(two_point());
        benchmark::DoNotOptimize(basis.element({HalfInteger(0), n, 1}));
    }
}
BENCHMARK(bm_basis_element)->Arg(2)->Arg(8)->Arg(32);

void bm_pairing(benchmark::State& state) {
    BasisCache basis(two_point());
    HalfInteger n(state.range(0));
    MeromorphicForm f = basis.element({HalfInteger(0), n, 1});
    MeromorphicForm g = basis.element({HalfInteger(1), -n, 1});
    for (auto _ : state) benchmark::DoNotOptimize(kn_pairing(f, g, two_point()));
}
BENCHMARK(bm_pairing)->Arg(2)->Arg(8)->Arg(32);

void bm_table_cell(benchmark::State& state) {
    BasisCache basis(two_point());
    MeromorphicForm e = basis.element({HalfInteger(-1), HalfInteger(3), 1});
    MeromorphicForm f = basis.element({HalfInteger(-1), HalfInteger(-2), 2});
    for (auto _ : state) {
        MeromorphicForm b = form_bracket(e, f);
        benchmark::DoNotOptimize(expand_in_basis(b, basis));
    }
}
BENCHMARK(bm_table_cell);

void bm_psi3(benchmark::State& state) {
    MarkedSphere classical({GaussianRational(0)});
    CycleClass cycle = CycleClass::separating(classical);
    ProjectiveConnection R = ProjectiveConnection::zero();
    long n = state.range(0);
    MeromorphicForm e = form(HalfInteger(-1), RationalFunction::z().pow(n + 1));
    MeromorphicForm f = form(HalfInteger(-1), RationalFunction::z().pow(1 - n));
    for (auto _ : state) benchmark::DoNotOptimize(psi3(e, f, R, cycle, classical));
}
BENCHMARK(bm_psi3)->Arg(4)->Arg(16);

void bm_fock_apply(benchmark::State& state) {
    MarkedSphere classical({GaussianRational(0)});
    BasisCache basis(classical);
    FockSpace space(basis, HalfInteger(0), HalfInteger(0));
    MeromorphicForm e = form(HalfInteger(-1), RationalFunction::z().pow(-1));
    FockOperator op(space, D1Element::from_vector_field(e));
    FockVector v{FockVector(space.vacuum(HalfInteger(0)))};
    for (auto _ : state) benchmark::DoNotOptimize(op.apply(v));
}
BENCHMARK(bm_fock_apply);

}  // namespace

BENCHMARK_MAIN();

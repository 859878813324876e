#include <benchmark/benchmark.h>

#include <random>

#include "sigmafix/fixpoint.hpp"
#include "sigmafix/oracle.hpp"
#include "sigmafix/sigma.hpp"

namespace {

using namespace sigmafix;
using zlattice::IntMatrix;

IntMatrix randomMatrix(std::mt19937& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist(rng);
    return m;
}

void BM_Smith(benchmark::State& state) {
    std::mt19937 rng(42);
    IntMatrix m = randomMatrix(rng, state.range(0), 9);
    for (auto _ : state) {
        auto f = zlattice::smith(m);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_Smith)->Arg(8)->Arg(16)->Arg(32);

void BM_ImageLatticeMembership(benchmark::State& state) {
    std::mt19937 rng(43);
    IntMatrix m = randomMatrix(rng, state.range(0), 9);
    auto lattice = zlattice::imageLattice(m);
    IntVec v(state.range(0), Int(7));
    for (auto _ : state) {
        bool member = lattice.contains(v);
        benchmark::DoNotOptimize(member);
    }
}
BENCHMARK(BM_ImageLatticeMembership)->Arg(8)->Arg(32);

void BM_DihedralExhaust(benchmark::State& state) {
    for (auto _ : state) {
        auto report = oracle::dihedralExhaust(12);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_DihedralExhaust);

void BM_TriangleSigma1(benchmark::State& state) {
    grouprep::GroupDesc tri = grouprep::GroupDesc::artin(grouprep::LabeledGraph(
        {"a", "b", "c"}, {{"a", "b", 4}, {"b", "c", 3}, {"c", "a", 3}}));
    for (auto _ : state) {
        auto r = sigma::sigma1(tri);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_TriangleSigma1);

void BM_FixTypeGeneralPath(benchmark::State& state) {
    fixpoint::AutTriple t = fixpoint::makeAutTriple(
        grouprep::GroupDesc::free(2), zlattice::FgAbelian(2, {}),
        IntMatrix::fromRows({{1, 1}, {0, 0}}), IntMatrix::fromRows({{1, 0}, {0, -1}}),
        fixpoint::PsiIdentity{});
    for (auto _ : state) {
        auto v = fixpoint::fixTypeDirectProduct(t, 1, sigma::Flavor::Homotopical,
                                                fixpoint::EngineConfig{},
                                                fixpoint::PathPolicy::ForceGeneral);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_FixTypeGeneralPath);

void BM_FreeWitnessSearch(benchmark::State& state) {
    charsphere::Character chi = charsphere::Character::rank1({Int(3), Int(-2), Int(1)});
    for (auto _ : state) {
        auto w = oracle::freeSigma1Witness(3, chi, 4);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_FreeWitnessSearch);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}

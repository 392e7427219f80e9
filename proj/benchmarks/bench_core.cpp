#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <jck/conformal.hpp>
#include <jck/curves.hpp>
#include <jck/geometry.hpp>
#include <jck/groups.hpp>
#include <jck/trees.hpp>

namespace {

using namespace jck;

// groups of nested chains: enough depth and enough separate components to
// make the parent search do real work
CircleConfiguration chain_groups(int n) {
    CircleConfiguration c;
    int g = 0;
    while (c.size() < n) {
        double r = 1.0;
        for (int d = 0; d < 4 && c.size() < n; ++d) {
            c.circles.push_back({3.0 * g, 0.0, r});
            r *= 0.7;
        }
        ++g;
    }
    return c;
}

RootedTree heap_tree(int n) {
    RootedTree t;
    t.parents.resize(n);
    for (int i = 1; i <= n; ++i) t.parents[i - 1] = (i - 1) / 2;
    return t;
}

std::vector<Vec2> regular_ngon(int n, Vec2 center, double radius) {
    std::vector<Vec2> v;
    v.reserve(n);
    for (int k = 0; k < n; ++k) {
        const double a = 2 * std::numbers::pi * k / n;
        v.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
    }
    return v;
}

PolyCurve l_hexagon() {
    return PolyCurve({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

void bm_circle_nesting_tree(benchmark::State& state) {
    const CircleConfiguration c = chain_groups(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(circle_nesting_tree(c));
}
BENCHMARK(bm_circle_nesting_tree)->Arg(8)->Arg(32)->Arg(128);

void bm_canonical_code(benchmark::State& state) {
    const RootedTree t = heap_tree(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_code(t));
}
BENCHMARK(bm_canonical_code)->Arg(63)->Arg(255)->Arg(1023);

void bm_enumerate_trees(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(n));
}
BENCHMARK(bm_enumerate_trees)->Arg(8)->Arg(10);

void bm_braid_is_trivial(benchmark::State& state) {
    // repeated relator blocks: trivial, but only through handle reduction
    // (free reduction alone removes nothing)
    BraidWord probe;
    probe.strands = 3;
    for (int k = 0; k * 6 < static_cast<int>(state.range(0)); ++k)
        for (int l : {1, 2, 1, -2, -1, -2}) probe.word.push_back(l);
    for (auto _ : state) benchmark::DoNotOptimize(braid_is_trivial(probe));
}
BENCHMARK(bm_braid_is_trivial)->Arg(64)->Arg(256);

void bm_disk_map_build(benchmark::State& state) {
    const PolyCurve domain = l_hexagon();
    for (auto _ : state) benchmark::DoNotOptimize(DiskMap(domain, {0.5, 0.5}));
}
BENCHMARK(bm_disk_map_build)->Unit(benchmark::kMillisecond);

void bm_disk_map_eval(benchmark::State& state) {
    const DiskMap m(l_hexagon(), {0.5, 0.5});
    const std::complex<double> z(0.4, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(m.eval(z));
}
BENCHMARK(bm_disk_map_eval);

void bm_convex_retract_frame(benchmark::State& state) {
    JordanConfiguration j;
    j.curves.push_back(Curve::polygon(PolyCurve(regular_ngon(64, {0, 0}, 10))));
    j.curves.push_back(Curve::polygon(PolyCurve(regular_ngon(48, {2, 0}, 3))));
    j.curves.push_back(Curve::polygon(PolyCurve(regular_ngon(32, {2, 0}, 1))));
    for (auto _ : state) benchmark::DoNotOptimize(convex_retract_frame(j, 0.5));
}
BENCHMARK(bm_convex_retract_frame);

}  // namespace

BENCHMARK_MAIN();

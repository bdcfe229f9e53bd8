#include <benchmark/benchmark.h>

#include <random>

#include "csurg/atlas.hpp"
#include "csurg/contact.hpp"
#include "csurg/linkalg.hpp"
#include "csurg/monodromy.hpp"

using namespace csurg;

namespace {

linkalg::IntMatrix random_matrix(std::mt19937_64& g, std::size_t n, long long bound) {
    std::uniform_int_distribution<long long> dist(-bound, bound);
    linkalg::IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist(g);
    return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
    std::mt19937_64 g(1);
    auto n = static_cast<std::size_t>(state.range(0));
    auto m = random_matrix(g, n, 50);
    for (auto _ : state) {
        benchmark::DoNotOptimize(linkalg::smith_normal_form(m));
    }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12);

void BM_Signature(benchmark::State& state) {
    std::mt19937_64 g(2);
    auto n = static_cast<std::size_t>(state.range(0));
    linkalg::IntMatrix q(n, n);
    std::uniform_int_distribution<long long> dist(-9, 9);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Integer v = dist(g);
            q.at(i, j) = v;
            q.at(j, i) = v;
        }
    for (auto _ : state) {
        benchmark::DoNotOptimize(linkalg::signature(q));
    }
}
BENCHMARK(BM_Signature)->Arg(8)->Arg(16);

void BM_NegExpansion(benchmark::State& state) {
    std::mt19937_64 g(3);
    std::uniform_int_distribution<long long> num(1, 5000), den(1, 400);
    for (auto _ : state) {
        Rational r(-num(g), den(g));
        benchmark::DoNotOptimize(contact::neg_expansion(r));
    }
}
BENCHMARK(BM_NegExpansion);

void BM_FamilyH1(benchmark::State& state) {
    long long m = -9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(atlas::family_h1({m, 7, 5}));
        if (--m < -60) m = -9;
    }
}
BENCHMARK(BM_FamilyH1);

void BM_AtlasRowWithD3(benchmark::State& state) {
    atlas::FamilyParams fp{-5, 7, 3};
    const auto& fixture = atlas::default_family_fixture();
    for (auto _ : state) {
        auto presentation = atlas::presentation_for(fp, fixture);
        contact::for_each_rot_choice(presentation, [](const contact::RotChoice& c) {
            benchmark::DoNotOptimize(c);
        });
        auto smooth = contact::smooth_presentation(presentation, {});
        benchmark::DoNotOptimize(contact::d3(smooth.link, smooth.rot, smooth.plus_ones));
    }
}
BENCHMARK(BM_AtlasRowWithD3);

void BM_WordToMatrix(benchmark::State& state) {
    auto w = monodromy::monodromy_word(-40);
    for (auto _ : state) {
        benchmark::DoNotOptimize(monodromy::word_to_matrix(w));
    }
}
BENCHMARK(BM_WordToMatrix);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "recpass/guess_metrics.hpp"
#include "recpass/markov.hpp"
#include "recpass/pattern.hpp"
#include "recpass/roc.hpp"
#include "recpass/sax.hpp"
#include "recpass/synth.hpp"

using namespace recpass;

namespace {

TraceSet make_set(int accounts) {
    SynthSpec spec;
    spec.accounts = accounts;
    return synth_gestures(spec, 1);
}

std::vector<std::vector<int>> encode_all(const TraceSet& set, const SaxParams& params) {
    std::vector<std::vector<int>> words;
    for (const auto& tr : set.traces) {
        const SaxWord w = sax_encode_2d(znormalize(tr), params);
        std::vector<int> sym;
        for (int i = 0; i < w.omega(); ++i) sym.push_back(w.combined(i));
        words.push_back(std::move(sym));
    }
    return words;
}

void BM_encode(benchmark::State& state) {
    const TraceSet set = make_set(50);
    const SaxParams params(8, 6);
    for (auto _ : state) {
        for (const auto& tr : set.traces)
            benchmark::DoNotOptimize(sax_encode_2d(znormalize(tr), params));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(set.traces.size()));
}
BENCHMARK(BM_encode);

void BM_mindist(benchmark::State& state) {
    const TraceSet set = make_set(50);
    const SaxParams params(8, 6);
    std::vector<SaxWord> words;
    for (const auto& tr : set.traces) words.push_back(sax_encode_2d(znormalize(tr), params));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mindist_2d(words[i % words.size()], words[(i + 7) % words.size()]));
        ++i;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_mindist);

void BM_dtw_score(benchmark::State& state) {
    const TraceSet set = make_set(10);
    const auto a = znormalize(set.traces[0]);
    const auto b = znormalize(set.traces[5]);
    for (auto _ : state) benchmark::DoNotOptimize(score_dtw(a, b));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_dtw_score);

void BM_train_3gram(benchmark::State& state) {
    const auto words = encode_all(make_set(static_cast<int>(state.range(0))), SaxParams(8, 6));
    for (auto _ : state)
        benchmark::DoNotOptimize(train_symbols(words, 36, 8, 3, Smoothing::good_turing));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_train_3gram)->Arg(100)->Arg(500);

void BM_enumerate(benchmark::State& state) {
    const auto words = encode_all(make_set(200), SaxParams(8, 6));
    const auto model = train_symbols(words, 36, 8, 3, Smoothing::good_turing);
    const auto k = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        GuessEnumerator stream(model, k);
        while (stream.next()) {
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(k));
}
BENCHMARK(BM_enumerate)->Arg(1 << 10)->Arg(1 << 14);

void BM_histogram_dp(benchmark::State& state) {
    const auto words = encode_all(make_set(static_cast<int>(state.range(0))), SaxParams(8, 6));
    const auto model = train_symbols(words, 36, 8, 3, Smoothing::good_turing);
    for (auto _ : state) benchmark::DoNotOptimize(build_prob_histogram(model, 0.01, 1u << 18));
}
BENCHMARK(BM_histogram_dp)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_pattern_enumeration(benchmark::State& state) {
    std::vector<UnlockPattern> corpus = {{{0, 1, 2, 5}}, {{0, 3, 6, 7, 8}}, {{4, 1, 2, 5}}};
    for (auto _ : state) benchmark::DoNotOptimize(pattern_model(corpus, 3, 0.01));
    state.SetItemsProcessed(state.iterations() * 389112);
}
BENCHMARK(BM_pattern_enumeration)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include "recpass/roc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>

namespace recpass {

PairSet make_pair_set(const TraceSet& dataset, std::size_t impostor_cap_per_template,
                      std::uint64_t seed) {
    PairSet pairs;
    const auto ids = dataset.account_ids();

    // template index and attempt indices per account, in dataset order
    std::vector<std::size_t> templates;
    std::vector<std::vector<std::size_t>> attempts;
    for (const auto& id : ids) {
        std::size_t tmpl = static_cast<std::size_t>(-1);
        std::vector<std::size_t> att;
        for (std::size_t i = 0; i < dataset.traces.size(); ++i) {
            if (dataset.traces[i].account_id != id) continue;
            if (tmpl == static_cast<std::size_t>(-1))
                tmpl = i;
            else
                att.push_back(i);
        }
        if (att.empty()) {
            pairs.skipped_accounts.push_back(id);
            continue;
        }
        templates.push_back(tmpl);
        attempts.push_back(std::move(att));
    }
    if (templates.size() < 2)
        throw std::invalid_argument("make_pair_set: need >= 2 accounts with >= 2 samples");

    std::mt19937_64 rng(seed);
    for (std::size_t a = 0; a < templates.size(); ++a) {
        for (std::size_t idx : attempts[a]) pairs.genuine.emplace_back(templates[a], idx);

        std::vector<std::size_t> others;
        for (std::size_t b = 0; b < templates.size(); ++b) {
            if (b == a) continue;
            for (std::size_t idx : attempts[b]) others.push_back(idx);
        }
        if (impostor_cap_per_template > 0 && others.size() > impostor_cap_per_template) {
            std::shuffle(others.begin(), others.end(), rng);
            others.resize(impostor_cap_per_template);
            std::sort(others.begin(), others.end());
        }
        for (std::size_t idx : others) pairs.impostor.emplace_back(templates[a], idx);
    }
    return pairs;
}

std::vector<ScoreSample> score_pairs(const TraceSet& dataset, const PairSet& pairs,
                                     RecognizerKind recognizer, const SaxParams& params) {
    std::vector<NormalizedTrace> normalized(dataset.traces.size());
    for (std::size_t i = 0; i < dataset.traces.size(); ++i)
        normalized[i] = znormalize(dataset.traces[i]);

    std::vector<SaxWord> words;
    DistTable table{0, {}};
    if (recognizer == RecognizerKind::sax) {
        words.resize(dataset.traces.size());
        for (std::size_t i = 0; i < dataset.traces.size(); ++i)
            words[i] = sax_encode_2d(normalized[i], params);
        table = make_dist_table(params.beta);
    }

    auto score_one = [&](std::size_t t, std::size_t a) -> double {
        switch (recognizer) {
            case RecognizerKind::sax: return score_sax(words[t], words[a], table).value;
            case RecognizerKind::dtw: return score_dtw(normalized[t], normalized[a]).value;
            case RecognizerKind::protractor:
                return score_protractor(normalized[t], normalized[a]).value;
        }
        return 0;
    };

    std::vector<ScoreSample> out;
    out.reserve(pairs.genuine.size() + pairs.impostor.size());
    for (const auto& [t, a] : pairs.genuine) out.push_back({score_one(t, a), true});
    for (const auto& [t, a] : pairs.impostor) out.push_back({score_one(t, a), false});
    return out;
}

std::vector<ScoreSample> make_pairs(const TraceSet& dataset, RecognizerKind recognizer,
                                    const SaxParams& params, std::size_t impostor_cap_per_template,
                                    std::uint64_t seed) {
    return score_pairs(dataset, make_pair_set(dataset, impostor_cap_per_template, seed),
                       recognizer, params);
}

RocCurve roc_curve(const std::vector<ScoreSample>& samples) {
    std::size_t n_gen = 0, n_imp = 0;
    for (const auto& s : samples) (s.genuine ? n_gen : n_imp)++;
    if (n_gen == 0 || n_imp == 0)
        throw std::invalid_argument("roc_curve: need both genuine and impostor samples");

    std::vector<ScoreSample> sorted = samples;
    std::sort(sorted.begin(), sorted.end(),
              [](const ScoreSample& a, const ScoreSample& b) { return a.score > b.score; });

    RocCurve curve;
    curve.points.push_back({0.0, 0.0, std::numeric_limits<double>::infinity()});
    std::size_t tp = 0, fp = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        const double threshold = sorted[i].score;
        while (i < sorted.size() && sorted[i].score == threshold) {
            (sorted[i].genuine ? tp : fp)++;
            ++i;
        }
        curve.points.push_back({static_cast<double>(fp) / n_imp, static_cast<double>(tp) / n_gen,
                                threshold});
    }
    return curve;
}

double trapezoid_area(const RocCurve& curve) {
    double area = 0;
    for (std::size_t i = 1; i < curve.points.size(); ++i)
        area += (curve.points[i].fpr - curve.points[i - 1].fpr) *
                (curve.points[i].tpr + curve.points[i - 1].tpr) / 2.0;
    return area;
}

double auroc(const std::vector<ScoreSample>& samples) {
    std::size_t n_gen = 0, n_imp = 0;
    for (const auto& s : samples) (s.genuine ? n_gen : n_imp)++;
    if (n_gen == 0 || n_imp == 0)
        throw std::invalid_argument("auroc: need both genuine and impostor samples");

    // Midrank-based Mann-Whitney.
    std::vector<ScoreSample> sorted = samples;
    std::sort(sorted.begin(), sorted.end(),
              [](const ScoreSample& a, const ScoreSample& b) { return a.score < b.score; });
    double rank_sum_genuine = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j].score == sorted[i].score) ++j;
        const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k)
            if (sorted[k].genuine) rank_sum_genuine += midrank;
        i = j;
    }
    const double u = rank_sum_genuine - static_cast<double>(n_gen) * (n_gen + 1) / 2.0;
    return u / (static_cast<double>(n_gen) * static_cast<double>(n_imp));
}

std::vector<SweepCell> param_sweep(const TraceSet& dataset, int omega_lo, int omega_hi,
                                   int beta_lo, int beta_hi,
                                   std::size_t impostor_cap_per_template, std::uint64_t seed,
                                   int threads) {
    if (omega_lo > omega_hi || beta_lo > beta_hi)
        throw std::invalid_argument("param_sweep: empty range");
    (void)SaxParams(omega_lo, beta_lo);  // bounds check both corners
    (void)SaxParams(omega_hi, beta_hi);

    const PairSet pairs = make_pair_set(dataset, impostor_cap_per_template, seed);

    std::vector<std::pair<int, int>> cells;
    for (int omega = omega_lo; omega <= omega_hi; ++omega)
        for (int beta = beta_lo; beta <= beta_hi; ++beta) cells.emplace_back(omega, beta);

    std::vector<SweepCell> grid(cells.size());
    auto run_cell = [&](std::size_t idx) {
        const auto [omega, beta] = cells[idx];
        const auto samples = score_pairs(dataset, pairs, RecognizerKind::sax,
                                         SaxParams(omega, beta));
        grid[idx] = {omega, beta, auroc(samples), pairs.genuine.size(), pairs.impostor.size()};
    };

    if (threads <= 1) {
        for (std::size_t idx = 0; idx < cells.size(); ++idx) run_cell(idx);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> workers;
        for (int t = 0; t < threads; ++t)
            workers.push_back(std::async(std::launch::async, [&] {
                for (std::size_t idx = next++; idx < cells.size(); idx = next++) run_cell(idx);
            }));
        for (auto& w : workers) w.get();
    }
    return grid;  // already ordered by (omega, beta)
}

}  // namespace recpass

#include "recpass/bias.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace recpass {

StartEndHeatmaps start_end_heatmap(const TraceSet& dataset, int rows, int cols) {
    if (dataset.traces.empty()) throw std::invalid_argument("start_end_heatmap: empty dataset");
    if (rows < 2 || cols < 2) throw std::invalid_argument("start_end_heatmap: grid must be >= 2x2");

    double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
    double min_y = min_x, max_y = max_x;
    for (const auto& tr : dataset.traces) {
        for (const auto& p : tr.points) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double span_x = max_x - min_x;
    const double span_y = max_y - min_y;

    auto bin = [&](double v, double lo, double span, int n) {
        if (span <= 0) return 0;
        const int idx = static_cast<int>(std::floor((v - lo) / span * n));
        return std::clamp(idx, 0, n - 1);
    };

    StartEndHeatmaps maps;
    for (Heatmap* hm : {&maps.start, &maps.end}) {
        hm->rows = rows;
        hm->cols = cols;
        hm->cells.assign(static_cast<std::size_t>(rows) * cols, 0.0);
    }
    const double w = 1.0 / static_cast<double>(dataset.traces.size());
    for (const auto& tr : dataset.traces) {
        const auto& first = tr.points.front();
        const auto& last = tr.points.back();
        maps.start.cells[static_cast<std::size_t>(bin(first.y, min_y, span_y, rows)) * cols +
                         bin(first.x, min_x, span_x, cols)] += w;
        maps.end.cells[static_cast<std::size_t>(bin(last.y, min_y, span_y, rows)) * cols +
                       bin(last.x, min_x, span_x, cols)] += w;
    }
    return maps;
}

NgramCoverage ngram_coverage(const std::vector<std::vector<int>>& corpus, int n,
                             std::size_t top_k) {
    if (n < 2 || n > 3) throw std::invalid_argument("ngram_coverage: n must be 2 or 3");
    if (top_k < 1) throw std::invalid_argument("ngram_coverage: top_k must be >= 1");

    std::map<std::vector<int>, std::size_t> counts;
    std::size_t total = 0;
    for (const auto& word : corpus) {
        if (word.size() < static_cast<std::size_t>(n)) continue;
        for (std::size_t i = 0; i + n <= word.size(); ++i) {
            counts[std::vector<int>(word.begin() + static_cast<std::ptrdiff_t>(i),
                                    word.begin() + static_cast<std::ptrdiff_t>(i + n))]++;
            ++total;
        }
    }
    if (total == 0) throw std::invalid_argument("ngram_coverage: corpus shorter than n");

    std::vector<std::pair<std::vector<int>, std::size_t>> ranked(counts.begin(), counts.end());
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });

    NgramCoverage out;
    out.total_occurrences = total;
    out.distinct = ranked.size();
    std::size_t covered = 0;
    for (std::size_t i = 0; i < ranked.size() && i < top_k; ++i) covered += ranked[i].second;
    out.coverage = static_cast<double>(covered) / static_cast<double>(total);
    if (ranked.size() > top_k) ranked.resize(top_k);
    out.ranked = std::move(ranked);
    return out;
}

}  // namespace recpass

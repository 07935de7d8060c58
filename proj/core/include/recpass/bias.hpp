#pragma once
// Human-bias analyses: where on the screen traces start and end, and how
// concentrated the n-gram usage of a symbol corpus is.

#include <cstddef>
#include <vector>

#include "recpass/trace.hpp"

namespace recpass {

struct Heatmap {
    int rows = 0;
    int cols = 0;
    std::vector<double> cells;  // row-major fractions summing to 1

    [[nodiscard]] double at(int r, int c) const { return cells[static_cast<std::size_t>(r) * cols + c]; }
};

struct StartEndHeatmaps {
    Heatmap start;
    Heatmap end;
};

// First/last raw points of every trace binned into a grid scaled to the
// dataset-wide bounding box.
StartEndHeatmaps start_end_heatmap(const TraceSet& dataset, int rows, int cols);

struct NgramCoverage {
    double coverage = 0;                   // fraction of occurrences in the top_k n-grams
    std::size_t total_occurrences = 0;
    std::size_t distinct = 0;
    // (n-gram, occurrence count), frequency-ranked, count-descending then
    // lexicographic; truncated to top_k.
    std::vector<std::pair<std::vector<int>, std::size_t>> ranked;
};

NgramCoverage ngram_coverage(const std::vector<std::vector<int>>& corpus, int n,
                             std::size_t top_k);

}  // namespace recpass

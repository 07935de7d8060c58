#pragma once
// Android 3x3 unlock-pattern baseline: valid-pattern enumeration, an n-gram
// model over node sequences with additive smoothing (variable length handled
// by a terminal symbol, renormalized over the valid space), and exact
// partial guessing on the matching-password side.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "recpass/guess_metrics.hpp"

namespace recpass {

struct UnlockPattern {
    std::vector<int> nodes;  // 4..9 distinct grid cells, row-major 0..8

    friend auto operator<=>(const UnlockPattern&, const UnlockPattern&) = default;
};

// Checks length, distinctness, and the rule that a move may not jump over an
// unvisited collinear midpoint.
bool is_valid_pattern(const UnlockPattern& pattern);

// Exhaustive DFS over the grid; deterministic, ordered lexicographically.
const std::vector<UnlockPattern>& enumerate_valid_patterns();

inline constexpr int kPatternTerminal = 9;  // appended end-of-pattern symbol
inline constexpr int kPatternAlphabet = 10;

struct PatternModel {
    int n = 3;
    double lambda = 0.01;
    std::size_t corpus_size = 0;
    std::vector<std::size_t> rejected;  // 0-based corpus indices of invalid patterns
    // Probabilities over enumerate_valid_patterns() order, renormalized to
    // sum to 1 over the valid space.
    std::vector<double> probs;
};

PatternModel pattern_model(const std::vector<UnlockPattern>& corpus, int n = 3,
                           double lambda = 0.01);

// Exact partial guessing over the full 3x3 space (small enough to sort).
PartialGuessReport pattern_partial_guessing(const PatternModel& model, double alpha);

// One pattern per line as a digit string, e.g. `0145`.
std::vector<UnlockPattern> parse_pattern_file(std::istream& in);
std::vector<UnlockPattern> parse_pattern_file(const std::string& path);

}  // namespace recpass

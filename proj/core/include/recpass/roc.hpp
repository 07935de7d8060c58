#pragma once
// Genuine/impostor pair construction, ROC curves, AUROC and the
// (omega, beta) parameter sweep for the SAX recognizer.

#include <cstdint>
#include <vector>

#include "recpass/recognizers.hpp"
#include "recpass/trace.hpp"

namespace recpass {

struct ScoreSample {
    double score;
    bool genuine;
};

struct RocPoint {
    double fpr;
    double tpr;
    double threshold;  // predict genuine when score >= threshold
};

struct RocCurve {
    std::vector<RocPoint> points;  // from (0,0) to (1,1), both rates non-decreasing
};

// Template = first enrolled sample of each account; attempts = the remaining
// samples. Genuine pairs stay within the account, impostor pairs cross
// accounts, optionally capped per template with seeded subsampling.
struct PairSet {
    std::vector<std::pair<std::size_t, std::size_t>> genuine;   // (template, attempt) trace indices
    std::vector<std::pair<std::size_t, std::size_t>> impostor;
    std::vector<std::string> skipped_accounts;  // accounts with a single sample
};

PairSet make_pair_set(const TraceSet& dataset, std::size_t impostor_cap_per_template,
                      std::uint64_t seed);

std::vector<ScoreSample> score_pairs(const TraceSet& dataset, const PairSet& pairs,
                                     RecognizerKind recognizer, const SaxParams& params);

// Convenience: pair construction + scoring in one step.
std::vector<ScoreSample> make_pairs(const TraceSet& dataset, RecognizerKind recognizer,
                                    const SaxParams& params = {},
                                    std::size_t impostor_cap_per_template = 50,
                                    std::uint64_t seed = 0);

// Thresholds swept over all distinct scores, ties grouped; endpoints (0,0)
// and (1,1) always present.
RocCurve roc_curve(const std::vector<ScoreSample>& samples);

// Mann-Whitney statistic P(genuine > impostor) + 1/2 P(tie); equals the
// trapezoidal area under roc_curve.
double auroc(const std::vector<ScoreSample>& samples);

double trapezoid_area(const RocCurve& curve);

struct SweepCell {
    int omega;
    int beta;
    double auroc;
    std::size_t n_genuine;
    std::size_t n_impostor;
};

// Full (omega, beta) grid, every cell scored on the same pair set.
std::vector<SweepCell> param_sweep(const TraceSet& dataset, int omega_lo, int omega_hi,
                                   int beta_lo, int beta_hi,
                                   std::size_t impostor_cap_per_template = 50,
                                   std::uint64_t seed = 0, int threads = 1);

}  // namespace recpass

#pragma once
// Attack-side security metrics: guessing-entropy curves from simulated
// best-first attacks, the partial guessing metric over the full password
// distribution, and upper/lower bounds from smoothed vs unsmoothed models.
//
// The distribution can be consumed two ways: directly from a guess stream
// (exact, feasible on small spaces) or from a log-probability histogram
// built by dynamic programming over word positions, which covers the full
// (beta^2)^omega space without enumerating it.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "recpass/markov.hpp"

namespace recpass {

struct GuessingCurve {
    // (guess_count, fraction of targets cracked within that many guesses)
    std::vector<std::pair<std::uint64_t, double>> points;
    bool stream_exhausted = false;  // unsmoothed model ran out of nonzero guesses
};

// Powers of two up to and including the first >= max_guesses.
std::vector<std::uint64_t> power_of_two_checkpoints(std::uint64_t max_guesses);

// Cracking criterion is exact symbol-word equality.
GuessingCurve guessing_entropy(GuessEnumerator& guesses,
                               const std::vector<std::vector<int>>& targets,
                               const std::vector<std::uint64_t>& checkpoints);

struct AccountWord {
    std::string account_id;
    std::vector<int> symbols;
};

struct CrossvalCurve {
    std::vector<std::uint64_t> checkpoints;
    std::vector<double> mean;    // cracked fraction, averaged over folds
    std::vector<double> stddev;  // spread across folds
    int folds = 0;
};

// Account-level k-fold split: train on the other folds' words, attack the
// held-out accounts' words, aggregate curves pointwise.
CrossvalCurve crossval_guessing(const std::vector<AccountWord>& corpus, int alphabet,
                                int word_length, int n, Smoothing smoothing, double lambda,
                                int folds, const std::vector<std::uint64_t>& checkpoints,
                                std::uint64_t seed);

struct ProbHistogram {
    struct Bucket {
        double word_count = 0;         // integer-valued
        double total_probability = 0;  // exact sum of member word probabilities
    };
    double bucket_width = 0.01;              // bits; bucket i covers surprisal [i*w, (i+1)*w)
    std::map<std::int64_t, Bucket> buckets;  // keyed by surprisal bucket index
    double covered_mass = 0;                 // < 1 for incomplete (unsmoothed) models
    double error_bits = 0;                   // 0 while the DP stayed exact

    [[nodiscard]] double total_words() const;
};

// Position-by-position DP over (context, cumulative log-probability) states.
// States stay keyed by exact log-probability until their number exceeds
// exact_state_cap; beyond that states are merged within surprisal buckets
// and the accumulated worst-case error is recorded in error_bits.
// Zero-probability words never enter the histogram.
ProbHistogram build_prob_histogram(const MarkovModel& model, double bucket_width = 0.01,
                                   std::size_t exact_state_cap = 1u << 21);

struct PartialGuessReport {
    double alpha = 0;
    double mu_alpha = 0;         // minimal guesses reaching cumulative mass alpha
    double lambda_mu = 0;        // mass actually reached at mu_alpha guesses
    double g_alpha = 0;          // expected guesses per Eq. 3-style mix
    double bits = 0;             // effective key length
    double bits_error_bound = 0; // nonzero for the histogram path
    bool reached = true;         // false when available mass < alpha
};

// Effective key length: lg(2 G / lambda - 1) - lg(2 - lambda); exactly lg N
// for a uniform distribution over N words at every alpha.
double effective_key_length_bits(double g_alpha, double lambda_mu);

// Exact path over an explicit descending-probability sequence.
PartialGuessReport partial_guessing(const std::vector<double>& probs_descending, double alpha);

// Exact path over a guess stream (consumes the stream).
PartialGuessReport partial_guessing(GuessEnumerator& guesses, double alpha);

// Histogram path: bucket members are treated as equiprobable at the bucket's
// representative probability; the report carries the bucket-width error bound.
PartialGuessReport partial_guessing(const ProbHistogram& histogram, double alpha);

struct BoundsRow {
    double fraction;
    std::string smoothing;  // "good-turing" (upper) or "none" (lower)
    double alpha;
    double bits;
    PartialGuessReport report;
};

// For each subsample fraction of accounts: 3-gram Good-Turing (upper bound)
// and 3-gram unsmoothed (lower bound) partial-guessing bits at each alpha.
// Subsampling takes a prefix of one seeded account shuffle so larger
// fractions contain smaller ones.
std::vector<BoundsRow> bounds_report(const std::vector<AccountWord>& corpus, int alphabet,
                                     int word_length, const std::vector<double>& fractions,
                                     const std::vector<double>& alphas, std::uint64_t seed,
                                     double bucket_width = 0.01);

}  // namespace recpass

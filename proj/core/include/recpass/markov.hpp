#pragma once
// n-gram Markov chains over the 2-D SAX symbol alphabet: training,
// additive and Good-Turing smoothing, word probabilities, and best-first
// enumeration of the password space in descending probability order.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recpass/sax.hpp"

namespace recpass {

enum class Smoothing { none, additive, good_turing };

Smoothing smoothing_from_name(const std::string& name);
std::string to_string(Smoothing s);

// One context's realized successor distribution over an alphabet of
// `alphabet` symbols: sparse observed entries plus a shared probability for
// every unobserved symbol.
struct CategoricalDist {
    std::vector<std::pair<int, double>> observed;  // sorted by symbol
    double unseen_prob = 0.0;                      // per unobserved symbol
    int alphabet = 0;

    [[nodiscard]] double prob(int symbol) const;
    [[nodiscard]] double max_prob() const;
    [[nodiscard]] double total_mass() const;
};

// Additive (add-lambda) smoothing: P(sym) = (count + lambda) / (total + lambda * alphabet).
CategoricalDist apply_additive(const std::map<int, double>& counts, int alphabet, double lambda);

// Simple Good-Turing: adjusted counts r* = (r+1) N_{r+1} / N_r with a
// log-log linear fit of the count-of-counts taking over at the first gap;
// total unseen mass N_1 / N split uniformly over unobserved symbols. A
// context with no singletons (N_1 = 0) cannot donate mass and falls back to
// the unsmoothed estimate; `degenerate` reports that.
CategoricalDist apply_good_turing(const std::map<int, double>& counts, int alphabet,
                                  bool* degenerate = nullptr);

// Unsmoothed relative frequency.
CategoricalDist apply_mle(const std::map<int, double>& counts, int alphabet);

struct MarkovModel {
    int n = 3;            // gram order, 2 or 3
    int alphabet = 36;    // beta^2 combined symbols
    int word_length = 8;  // omega
    int beta = 6;
    Smoothing smoothing = Smoothing::none;
    double lambda = 0.01;
    std::size_t corpus_size = 0;

    // Counts are the persistent state; probability tables are re-derived on
    // load so the smoothing can be switched without retraining.
    std::map<std::uint32_t, double> start_counts;                  // prefix code -> count
    std::map<std::uint32_t, std::map<int, double>> trans_counts;   // context code -> successor counts

    // Realized tables.
    CategoricalDist start_dist;                          // over alphabet^(n-1) prefix codes
    std::map<std::uint32_t, CategoricalDist> trans_dist; // per observed context
    CategoricalDist default_trans;                       // for contexts never observed
    std::vector<std::uint32_t> degenerate_contexts;      // Good-Turing N_1 = 0 fallbacks
    bool start_degenerate = false;
    double max_trans_prob = 0.0;  // over every reachable context; enumeration bound

    [[nodiscard]] std::uint32_t prefix_code(const std::vector<int>& symbols, std::size_t end) const;
    [[nodiscard]] double start_prob(std::uint32_t prefix) const;
    [[nodiscard]] double trans_prob(std::uint32_t context, int symbol) const;
    [[nodiscard]] const CategoricalDist& context_dist(std::uint32_t context) const;

    // Log2 probability of a full word; -infinity when any factor is zero
    // (possible only without smoothing). Accumulates factors left to right.
    [[nodiscard]] double word_logprob(const std::vector<int>& combined_symbols) const;
    [[nodiscard]] double word_logprob(const SaxWord& word) const;

    void realize();  // rebuild probability tables from counts + smoothing
};

// Tally counts over a corpus of equal-parameter SAX words and realize the
// probability tables.
MarkovModel train(const std::vector<SaxWord>& corpus, int n, Smoothing smoothing,
                  double lambda = 0.01);

// Same, over pre-combined symbol sequences (alphabet given explicitly).
MarkovModel train_symbols(const std::vector<std::vector<int>>& corpus, int alphabet,
                          int word_length, int n, Smoothing smoothing, double lambda = 0.01,
                          int beta = 0);

// Eq.-style expected observations of one start sequence when T passwords are
// spread uniformly over (beta^2)^(n-1) prefixes.
double expected_start_observations(double total_passwords, int beta, int n);

// Lazily emits the highest-probability words in non-increasing probability
// order; ties broken lexicographically on symbol indices. Best-first search
// over prefixes with an admissible completion bound (max transition
// probability to the power of the remaining length).
class GuessEnumerator {
  public:
    struct Guess {
        std::vector<int> symbols;  // combined alphabet indices, length omega
        double prob;
        double logprob;  // log2
    };

    explicit GuessEnumerator(const MarkovModel& model, std::uint64_t limit = UINT64_MAX);

    // nullopt when the limit is reached or, without smoothing, when every
    // nonzero-probability word has been emitted.
    std::optional<Guess> next();

    [[nodiscard]] std::uint64_t emitted() const { return emitted_; }
    [[nodiscard]] bool exhausted_early() const { return exhausted_early_; }

  private:
    struct Node {
        double key;      // admissible upper bound on any completion (log2)
        double logprob;  // exact logprob of the prefix so far
        std::uint32_t parent;
        std::uint16_t symbol;
        std::uint8_t depth;
    };

    std::vector<int> reconstruct(std::uint32_t idx) const;
    bool heap_less(std::uint32_t a, std::uint32_t b) const;
    void push_heap_idx(std::uint32_t idx);
    std::uint32_t pop_heap_idx();

    const MarkovModel& model_;
    std::uint64_t limit_;
    std::uint64_t emitted_ = 0;
    bool exhausted_early_ = false;
    double max_trans_log_ = 0;
    std::vector<Node> pool_;
    std::vector<std::uint32_t> heap_;
};

// Model persistence: versioned text, counts only.
void save_model(std::ostream& out, const MarkovModel& model);
void save_model(const std::string& path, const MarkovModel& model);
MarkovModel load_model(std::istream& in);
MarkovModel load_model(const std::string& path);

}  // namespace recpass

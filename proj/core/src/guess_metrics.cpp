#include "recpass/guess_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace recpass {

std::vector<std::uint64_t> power_of_two_checkpoints(std::uint64_t max_guesses) {
    std::vector<std::uint64_t> cps;
    for (std::uint64_t c = 1; ; c *= 2) {
        cps.push_back(c);
        if (c >= max_guesses || c > (UINT64_MAX >> 1)) break;
    }
    return cps;
}

GuessingCurve guessing_entropy(GuessEnumerator& guesses,
                               const std::vector<std::vector<int>>& targets,
                               const std::vector<std::uint64_t>& checkpoints) {
    if (targets.empty()) throw std::invalid_argument("guessing_entropy: no targets");
    std::map<std::vector<int>, std::size_t> remaining;  // word -> target multiplicity
    for (const auto& t : targets) remaining[t]++;

    std::vector<std::uint64_t> cps = checkpoints;
    std::sort(cps.begin(), cps.end());

    GuessingCurve curve;
    std::size_t cracked = 0;
    const double total = static_cast<double>(targets.size());
    std::uint64_t issued = 0;
    std::size_t next_cp = 0;
    while (next_cp < cps.size()) {
        auto guess = guesses.next();
        if (!guess) {
            curve.stream_exhausted = true;
            break;
        }
        ++issued;
        const auto it = remaining.find(guess->symbols);
        if (it != remaining.end()) {
            cracked += it->second;
            remaining.erase(it);
        }
        while (next_cp < cps.size() && issued == cps[next_cp]) {
            curve.points.emplace_back(cps[next_cp], cracked / total);
            ++next_cp;
        }
        if (remaining.empty()) break;
    }
    // plateau: fill any checkpoints past stream end / full crack
    for (; next_cp < cps.size(); ++next_cp)
        curve.points.emplace_back(cps[next_cp], cracked / total);
    return curve;
}

CrossvalCurve crossval_guessing(const std::vector<AccountWord>& corpus, int alphabet,
                                int word_length, int n, Smoothing smoothing, double lambda,
                                int folds, const std::vector<std::uint64_t>& checkpoints,
                                std::uint64_t seed) {
    std::vector<std::string> accounts;
    for (const auto& aw : corpus)
        if (accounts.empty() || std::find(accounts.begin(), accounts.end(), aw.account_id) == accounts.end())
            accounts.push_back(aw.account_id);
    if (static_cast<int>(accounts.size()) < folds)
        throw std::invalid_argument("crossval_guessing: fewer accounts than folds");

    std::mt19937_64 rng(seed);
    std::shuffle(accounts.begin(), accounts.end(), rng);
    std::map<std::string, int> fold_of;
    for (std::size_t i = 0; i < accounts.size(); ++i)
        fold_of[accounts[i]] = static_cast<int>(i % static_cast<std::size_t>(folds));

    std::vector<std::uint64_t> cps = checkpoints;
    std::sort(cps.begin(), cps.end());
    std::vector<std::vector<double>> fold_curves;
    for (int f = 0; f < folds; ++f) {
        std::vector<std::vector<int>> train_words;
        std::vector<std::vector<int>> targets;
        for (const auto& aw : corpus)
            (fold_of.at(aw.account_id) == f ? targets : train_words).push_back(aw.symbols);
        const MarkovModel model =
            train_symbols(train_words, alphabet, word_length, n, smoothing, lambda);
        GuessEnumerator stream(model);
        const GuessingCurve curve = guessing_entropy(stream, targets, cps);
        std::vector<double> fractions;
        for (const auto& [cp, frac] : curve.points) fractions.push_back(frac);
        fold_curves.push_back(std::move(fractions));
    }

    CrossvalCurve out;
    out.checkpoints = cps;
    out.folds = folds;
    for (std::size_t i = 0; i < cps.size(); ++i) {
        double mean = 0;
        for (const auto& fc : fold_curves) mean += fc[i];
        mean /= folds;
        double var = 0;
        for (const auto& fc : fold_curves) var += (fc[i] - mean) * (fc[i] - mean);
        out.mean.push_back(mean);
        out.stddev.push_back(folds > 1 ? std::sqrt(var / (folds - 1)) : 0.0);
    }
    return out;
}

double ProbHistogram::total_words() const {
    double n = 0;
    for (const auto& [idx, b] : buckets) n += b.word_count;
    return n;
}

ProbHistogram build_prob_histogram(const MarkovModel& model, double bucket_width,
                                   std::size_t exact_state_cap) {
    if (bucket_width <= 0) throw std::invalid_argument("build_prob_histogram: bucket_width <= 0");

    struct Value {
        double count = 0;
        double mass = 0;  // exact: multiplies through transitions
    };
    // Keyed by (context, representative log2-probability). Hashed for speed;
    // iteration order is a pure function of the inserted sequence, so the
    // result is still deterministic for fixed inputs.
    struct KeyHash {
        std::size_t operator()(const std::pair<std::uint32_t, double>& k) const {
            std::uint64_t h = std::hash<double>{}(k.second);
            h ^= (static_cast<std::uint64_t>(k.first) + 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h);
        }
    };
    using StateMap = std::unordered_map<std::pair<std::uint32_t, double>, Value, KeyHash>;

    StateMap states;
    std::uint64_t prefixes = 1;
    for (int i = 0; i < model.n - 1; ++i) prefixes *= static_cast<std::uint64_t>(model.alphabet);
    auto seed = [&](std::uint32_t code, double p) {
        if (p <= 0) return;
        auto& v = states[{code, std::log2(p)}];
        v.count += 1;
        v.mass += p;
    };
    if (model.start_dist.unseen_prob > 0) {
        for (std::uint64_t code = 0; code < prefixes; ++code)
            seed(static_cast<std::uint32_t>(code), model.start_dist.prob(static_cast<int>(code)));
    } else {
        for (const auto& [code, p] : model.start_dist.observed)
            seed(static_cast<std::uint32_t>(code), p);
    }

    ProbHistogram hist;
    hist.bucket_width = bucket_width;
    bool quantized = false;
    int quantized_steps = 0;

    const std::uint32_t ctx_mod =
        model.n == 2 ? 1u : static_cast<std::uint32_t>(model.alphabet);

    // Per-context child table so the inner loop avoids repeated log2 calls and
    // distribution walks: contexts number alphabet^(n-1), states can be millions.
    struct Child {
        std::uint32_t nctx;
        double p;
        double logp;
    };
    std::vector<std::vector<Child>> children(prefixes);
    for (std::uint32_t ctx = 0; ctx < prefixes; ++ctx) {
        const CategoricalDist& dist = model.context_dist(ctx);
        auto add = [&](int sym, double p) {
            if (p <= 0) return;
            const std::uint32_t nctx =
                model.n == 2 ? static_cast<std::uint32_t>(sym)
                             : (ctx % ctx_mod) * static_cast<std::uint32_t>(model.alphabet) +
                                   static_cast<std::uint32_t>(sym);
            children[ctx].push_back({nctx, p, std::log2(p)});
        };
        if (dist.unseen_prob > 0) {
            auto it = dist.observed.begin();
            for (int sym = 0; sym < model.alphabet; ++sym) {
                if (it != dist.observed.end() && it->first == sym) {
                    add(sym, it->second);
                    ++it;
                } else {
                    add(sym, dist.unseen_prob);
                }
            }
        } else {
            for (const auto& [sym, p] : dist.observed) add(sym, p);
        }
    }

    // Quantized phase keys states by (ctx, bucket index) packed into one
    // integer; bucket indices are nonnegative since log-probabilities are <= 0.
    using QuantMap = std::unordered_map<std::uint64_t, Value>;
    QuantMap qstates;
    auto quantize_all = [&] {
        for (const auto& [key, val] : states) {
            const auto idx = static_cast<std::uint64_t>(std::floor(-key.second / bucket_width));
            auto& v = qstates[(static_cast<std::uint64_t>(key.first) << 40) | idx];
            v.count += val.count;
            v.mass += val.mass;
        }
        states.clear();
    };

    for (int pos = model.n - 1; pos < model.word_length; ++pos) {
        if (!quantized) {
            StateMap next;
            next.reserve(states.size() * 2);
            QuantMap qnext;
            // switch to bucket keys the moment the cap is crossed so one
            // position cannot balloon to branching-factor times the cap
            for (const auto& [key, val] : states) {
                const auto& [ctx, logp] = key;
                if (!quantized) {
                    for (const Child& c : children[ctx]) {
                        auto& v = next[{c.nctx, logp + c.logp}];
                        v.count += val.count;
                        v.mass += val.mass * c.p;
                    }
                    if (next.size() > exact_state_cap) {
                        quantized = true;
                        for (const auto& [k, v] : next) {
                            const auto idx =
                                static_cast<std::uint64_t>(std::floor(-k.second / bucket_width));
                            auto& q = qnext[(static_cast<std::uint64_t>(k.first) << 40) | idx];
                            q.count += v.count;
                            q.mass += v.mass;
                        }
                        next.clear();
                    }
                } else {
                    for (const Child& c : children[ctx]) {
                        const auto idx = static_cast<std::uint64_t>(
                            std::floor(-(logp + c.logp) / bucket_width));
                        auto& q = qnext[(static_cast<std::uint64_t>(c.nctx) << 40) | idx];
                        q.count += val.count;
                        q.mass += val.mass * c.p;
                    }
                }
            }
            if (quantized) {
                states.clear();
                qstates = std::move(qnext);
            } else {
                states = std::move(next);
            }
        } else {
            QuantMap next;
            next.reserve(qstates.size() * 2);
            for (const auto& [key, val] : qstates) {
                const std::uint32_t ctx = static_cast<std::uint32_t>(key >> 40);
                const double logp = -(static_cast<double>(key & 0xffffffffffULL) + 0.5) *
                                    bucket_width;
                for (const Child& c : children[ctx]) {
                    const auto idx =
                        static_cast<std::uint64_t>(std::floor(-(logp + c.logp) / bucket_width));
                    auto& v = next[(static_cast<std::uint64_t>(c.nctx) << 40) | idx];
                    v.count += val.count;
                    v.mass += val.mass * c.p;
                }
            }
            qstates = std::move(next);
        }
        if (quantized) ++quantized_steps;
    }

    if (!quantized) quantize_all();
    for (const auto& [key, val] : qstates) {
        auto& b = hist.buckets[static_cast<std::int64_t>(key & 0xffffffffffULL)];
        b.word_count += val.count;
        b.total_probability += val.mass;
        hist.covered_mass += val.mass;
    }
    hist.error_bits = quantized_steps * bucket_width;
    return hist;
}

double effective_key_length_bits(double g_alpha, double lambda_mu) {
    return std::log2(2.0 * g_alpha / lambda_mu - 1.0) - std::log2(2.0 - lambda_mu);
}

namespace {

// Shared accumulator: feeds descending-probability blocks of equiprobable
// words and finalizes at cumulative mass alpha.
struct PgmWalk {
    double alpha;
    double cum_mass = 0;
    double cum_count = 0;
    double sum_p_times_rank = 0;
    bool done = false;
    PartialGuessReport report;

    explicit PgmWalk(double a) : alpha(a) {
        if (!(a > 0 && a < 1)) throw std::invalid_argument("partial_guessing: alpha must be in (0,1)");
    }

    // `count` words each of probability p
    void feed(double p, double count) {
        if (done || p <= 0 || count <= 0) return;
        double take = count;
        if (cum_mass + p * count >= alpha - 1e-12) {
            take = std::ceil((alpha - cum_mass) / p - 1e-12);
            take = std::clamp(take, 1.0, count);
        }
        sum_p_times_rank += p * (take * cum_count + take * (take + 1) / 2);
        cum_count += take;
        cum_mass += p * take;
        if (cum_mass >= alpha - 1e-12) done = true;
    }

    PartialGuessReport finalize(double error_bits) {
        report.alpha = alpha;
        report.reached = done;
        report.mu_alpha = cum_count;
        report.lambda_mu = cum_mass;
        report.g_alpha = (1.0 - cum_mass) * cum_count + sum_p_times_rank;
        report.bits = effective_key_length_bits(report.g_alpha, report.lambda_mu);
        report.bits_error_bound = error_bits;
        return report;
    }
};

}  // namespace

PartialGuessReport partial_guessing(const std::vector<double>& probs_descending, double alpha) {
    PgmWalk walk(alpha);
    for (double p : probs_descending) {
        walk.feed(p, 1);
        if (walk.done) break;
    }
    return walk.finalize(0.0);
}

PartialGuessReport partial_guessing(GuessEnumerator& guesses, double alpha) {
    PgmWalk walk(alpha);
    while (!walk.done) {
        auto g = guesses.next();
        if (!g) break;
        walk.feed(g->prob, 1);
    }
    return walk.finalize(0.0);
}

PartialGuessReport partial_guessing(const ProbHistogram& histogram, double alpha) {
    PgmWalk walk(alpha);
    for (const auto& [idx, b] : histogram.buckets) {  // ascending surprisal = descending prob
        if (b.word_count <= 0) continue;
        walk.feed(b.total_probability / b.word_count, b.word_count);
        if (walk.done) break;
    }
    return walk.finalize(histogram.bucket_width + histogram.error_bits);
}

std::vector<BoundsRow> bounds_report(const std::vector<AccountWord>& corpus, int alphabet,
                                     int word_length, const std::vector<double>& fractions,
                                     const std::vector<double>& alphas, std::uint64_t seed,
                                     double bucket_width) {
    std::vector<std::string> accounts;
    std::set<std::string> seen;
    for (const auto& aw : corpus)
        if (seen.insert(aw.account_id).second) accounts.push_back(aw.account_id);

    std::mt19937_64 rng(seed);
    std::shuffle(accounts.begin(), accounts.end(), rng);

    std::vector<BoundsRow> rows;
    for (double fraction : fractions) {
        if (!(fraction > 0 && fraction <= 1))
            throw std::invalid_argument("bounds_report: fraction out of (0, 1]");
        const auto take =
            static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(accounts.size())));
        if (take > accounts.size() || take < 2)
            throw std::invalid_argument("bounds_report: fraction yields too few accounts");
        std::set<std::string> keep(accounts.begin(),
                                   accounts.begin() + static_cast<std::ptrdiff_t>(take));
        std::vector<std::vector<int>> words;
        for (const auto& aw : corpus)
            if (keep.count(aw.account_id)) words.push_back(aw.symbols);

        for (Smoothing smoothing : {Smoothing::good_turing, Smoothing::none}) {
            const MarkovModel model = train_symbols(words, alphabet, word_length, 3, smoothing);
            const ProbHistogram hist = build_prob_histogram(model, bucket_width);
            for (double alpha : alphas) {
                const PartialGuessReport report = partial_guessing(hist, alpha);
                rows.push_back({fraction, to_string(smoothing), alpha, report.bits, report});
            }
        }
    }
    return rows;
}

}  // namespace recpass

#include "recpass/markov.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace recpass {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::uint64_t prefix_space(int alphabet, int n) {
    std::uint64_t p = 1;
    for (int i = 0; i < n - 1; ++i) p *= static_cast<std::uint64_t>(alphabet);
    return p;
}
}  // namespace

Smoothing smoothing_from_name(const std::string& name) {
    if (name == "none") return Smoothing::none;
    if (name == "additive") return Smoothing::additive;
    if (name == "good-turing" || name == "good_turing") return Smoothing::good_turing;
    throw std::invalid_argument("unknown smoothing '" + name + "'");
}

std::string to_string(Smoothing s) {
    switch (s) {
        case Smoothing::none: return "none";
        case Smoothing::additive: return "additive";
        case Smoothing::good_turing: return "good-turing";
    }
    return "?";
}

double CategoricalDist::prob(int symbol) const {
    const auto it = std::lower_bound(observed.begin(), observed.end(), symbol,
                                     [](const auto& e, int s) { return e.first < s; });
    if (it != observed.end() && it->first == symbol) return it->second;
    return unseen_prob;
}

double CategoricalDist::max_prob() const {
    double m = unseen_prob;
    for (const auto& [s, p] : observed) m = std::max(m, p);
    return m;
}

double CategoricalDist::total_mass() const {
    double m = unseen_prob * (alphabet - static_cast<int>(observed.size()));
    for (const auto& [s, p] : observed) m += p;
    return m;
}

CategoricalDist apply_mle(const std::map<int, double>& counts, int alphabet) {
    double total = 0;
    for (const auto& [s, c] : counts) total += c;
    CategoricalDist dist;
    dist.alphabet = alphabet;
    if (total <= 0) return dist;
    for (const auto& [s, c] : counts)
        if (c > 0) dist.observed.emplace_back(s, c / total);
    return dist;
}

CategoricalDist apply_additive(const std::map<int, double>& counts, int alphabet, double lambda) {
    if (lambda <= 0) throw std::invalid_argument("apply_additive: lambda must be > 0");
    double total = 0;
    for (const auto& [s, c] : counts) total += c;
    const double denom = total + lambda * alphabet;
    CategoricalDist dist;
    dist.alphabet = alphabet;
    dist.unseen_prob = lambda / denom;
    for (const auto& [s, c] : counts)
        if (c > 0) dist.observed.emplace_back(s, (c + lambda) / denom);
    return dist;
}

CategoricalDist apply_good_turing(const std::map<int, double>& counts, int alphabet,
                                  bool* degenerate) {
    if (degenerate) *degenerate = false;
    if (counts.empty()) throw std::invalid_argument("apply_good_turing: empty counts");

    // count-of-counts over integer frequencies
    std::map<long long, double> cc;
    double total = 0;
    std::vector<std::pair<int, long long>> observed;  // (symbol, r)
    for (const auto& [s, c] : counts) {
        if (c <= 0) continue;
        const auto r = static_cast<long long>(std::llround(c));
        cc[r] += 1;
        total += static_cast<double>(r);
        observed.emplace_back(s, r);
    }
    if (observed.empty()) throw std::invalid_argument("apply_good_turing: all counts zero");

    const double n1 = cc.count(1) ? cc.at(1) : 0.0;
    if (n1 == 0.0) {
        if (degenerate) *degenerate = true;
        return apply_mle(counts, alphabet);
    }

    // log-log least squares of N_r against r
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [r, nr] : cc) {
        const double lx = std::log(static_cast<double>(r));
        const double ly = std::log(nr);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const auto npts = static_cast<double>(cc.size());
    const bool can_fit = cc.size() >= 2 && (npts * sxx - sx * sx) > 0;
    const double slope = can_fit ? (npts * sxy - sx * sy) / (npts * sxx - sx * sx) : 0.0;
    const double intercept = can_fit ? (sy - slope * sx) / npts : 0.0;
    auto fitted_nr = [&](long long r) { return std::exp(intercept + slope * std::log(static_cast<double>(r))); };

    // empirical r* until the first count-of-counts gap, fitted after it
    long long first_gap = std::numeric_limits<long long>::max();
    for (const auto& [r, nr] : cc)
        if (!cc.count(r + 1)) { first_gap = r; break; }

    std::map<long long, double> adjusted;
    double running = 0;  // monotone cleanup: adjusted counts non-decreasing in r
    for (const auto& [r, nr] : cc) {
        double rstar;
        if (r < first_gap)
            rstar = static_cast<double>(r + 1) * cc.at(r + 1) / nr;
        else if (can_fit)
            rstar = static_cast<double>(r + 1) * fitted_nr(r + 1) / fitted_nr(r);
        else
            rstar = static_cast<double>(r);
        running = std::max(running, rstar);
        adjusted[r] = running;
    }

    const int n_unseen = alphabet - static_cast<int>(observed.size());
    double p0 = n1 / total;  // Good-Turing zero-class estimate
    if (n_unseen == 0) p0 = 0.0;
    if (p0 >= 1.0) p0 = n1 / (total + n1);  // all-singleton guard

    double weight_sum = 0;
    for (const auto& [s, r] : observed) weight_sum += adjusted.at(r);

    CategoricalDist dist;
    dist.alphabet = alphabet;
    dist.unseen_prob = n_unseen > 0 ? p0 / n_unseen : 0.0;
    const double observed_mass = 1.0 - p0;
    for (const auto& [s, r] : observed)
        dist.observed.emplace_back(s, observed_mass * adjusted.at(r) / weight_sum);
    return dist;
}

std::uint32_t MarkovModel::prefix_code(const std::vector<int>& symbols, std::size_t end) const {
    std::uint32_t code = 0;
    for (std::size_t i = end + 1 - static_cast<std::size_t>(n - 1); i <= end; ++i)
        code = code * static_cast<std::uint32_t>(alphabet) + static_cast<std::uint32_t>(symbols[i]);
    return code;
}

double MarkovModel::start_prob(std::uint32_t prefix) const {
    return start_dist.prob(static_cast<int>(prefix));
}

const CategoricalDist& MarkovModel::context_dist(std::uint32_t context) const {
    const auto it = trans_dist.find(context);
    return it != trans_dist.end() ? it->second : default_trans;
}

double MarkovModel::trans_prob(std::uint32_t context, int symbol) const {
    return context_dist(context).prob(symbol);
}

double MarkovModel::word_logprob(const std::vector<int>& w) const {
    if (static_cast<int>(w.size()) != word_length)
        throw std::invalid_argument("word_logprob: word length mismatch");
    for (int s : w)
        if (s < 0 || s >= alphabet) throw std::invalid_argument("word_logprob: symbol out of range");
    const double p0 = start_prob(prefix_code(w, static_cast<std::size_t>(n - 2)));
    if (p0 <= 0) return kNegInf;
    double lp = std::log2(p0);
    for (std::size_t i = static_cast<std::size_t>(n - 1); i < w.size(); ++i) {
        const double p = trans_prob(prefix_code(w, i - 1), w[i]);
        if (p <= 0) return kNegInf;
        lp += std::log2(p);
    }
    return lp;
}

double MarkovModel::word_logprob(const SaxWord& word) const {
    if (word.beta != beta) throw std::invalid_argument("word_logprob: beta mismatch");
    std::vector<int> w(word.symbols.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = word.combined(static_cast<int>(i));
    return word_logprob(w);
}

void MarkovModel::realize() {
    const std::uint64_t prefixes = prefix_space(alphabet, n);
    if (prefixes > (1ULL << 32))
        throw std::invalid_argument("realize: prefix space too large");

    degenerate_contexts.clear();
    start_degenerate = false;

    std::map<int, double> start_as_int;
    for (const auto& [p, c] : start_counts) start_as_int[static_cast<int>(p)] = c;

    switch (smoothing) {
        case Smoothing::none:
            start_dist = apply_mle(start_as_int, static_cast<int>(prefixes));
            default_trans = CategoricalDist{{}, 0.0, alphabet};
            trans_dist.clear();
            for (const auto& [ctx, counts] : trans_counts)
                trans_dist[ctx] = apply_mle(counts, alphabet);
            break;
        case Smoothing::additive:
            start_dist = apply_additive(start_as_int, static_cast<int>(prefixes), lambda);
            default_trans = apply_additive({}, alphabet, lambda);
            trans_dist.clear();
            for (const auto& [ctx, counts] : trans_counts)
                trans_dist[ctx] = apply_additive(counts, alphabet, lambda);
            break;
        case Smoothing::good_turing: {
            start_dist = apply_good_turing(start_as_int, static_cast<int>(prefixes), &start_degenerate);
            // a context never observed at all: everything is unseen
            default_trans = CategoricalDist{{}, 1.0 / alphabet, alphabet};
            trans_dist.clear();
            for (const auto& [ctx, counts] : trans_counts) {
                bool degen = false;
                trans_dist[ctx] = apply_good_turing(counts, alphabet, &degen);
                if (degen) degenerate_contexts.push_back(ctx);
            }
            break;
        }
    }

    max_trans_prob = 0.0;
    for (const auto& [ctx, dist] : trans_dist) max_trans_prob = std::max(max_trans_prob, dist.max_prob());
    if (trans_dist.size() < prefixes)
        max_trans_prob = std::max(max_trans_prob, default_trans.max_prob());
}

MarkovModel train_symbols(const std::vector<std::vector<int>>& corpus, int alphabet,
                          int word_length, int n, Smoothing smoothing, double lambda, int beta) {
    if (corpus.empty()) throw std::invalid_argument("train: empty corpus");
    if (n != 2 && n != 3) throw std::invalid_argument("train: n must be 2 or 3");
    if (word_length < n - 1) throw std::invalid_argument("train: word length shorter than start prefix");

    MarkovModel model;
    model.n = n;
    model.alphabet = alphabet;
    model.word_length = word_length;
    model.beta = beta;
    model.smoothing = smoothing;
    model.lambda = lambda;
    model.corpus_size = corpus.size();

    for (const auto& w : corpus) {
        if (static_cast<int>(w.size()) != word_length)
            throw std::invalid_argument("train: mixed word lengths in corpus");
        for (int s : w)
            if (s < 0 || s >= alphabet) throw std::invalid_argument("train: symbol out of range");
        model.start_counts[model.prefix_code(w, static_cast<std::size_t>(n - 2))] += 1;
        for (std::size_t i = static_cast<std::size_t>(n - 1); i < w.size(); ++i)
            model.trans_counts[model.prefix_code(w, i - 1)][w[i]] += 1;
    }
    model.realize();
    return model;
}

MarkovModel train(const std::vector<SaxWord>& corpus, int n, Smoothing smoothing, double lambda) {
    if (corpus.empty()) throw std::invalid_argument("train: empty corpus");
    const int beta = corpus.front().beta;
    const int omega = corpus.front().omega();
    std::vector<std::vector<int>> symbols;
    symbols.reserve(corpus.size());
    for (const auto& word : corpus) {
        if (word.beta != beta || word.omega() != omega)
            throw std::invalid_argument("train: mixed SAX parameters in corpus");
        std::vector<int> w(word.symbols.size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = word.combined(static_cast<int>(i));
        symbols.push_back(std::move(w));
    }
    return train_symbols(symbols, beta * beta, omega, n, smoothing, lambda, beta);
}

double expected_start_observations(double total_passwords, int beta, int n) {
    if (total_passwords < 0) throw std::invalid_argument("expected_start_observations: T < 0");
    return total_passwords / std::pow(static_cast<double>(beta) * beta, n - 1);
}

// ---------------------------------------------------------------------------
// Best-first enumeration

// Completion bounds of incomplete prefixes are padded by this much: the
// stepwise logprob accumulation of a descendant can exceed the one-shot
// bound arithmetic by a few ulps, and an underestimating bound would let a
// complete word overtake an equal-probability lexicographic predecessor.
// Only prefix expansion order is affected; emitted keys stay exact.
constexpr double kBoundPad = 1e-9;

GuessEnumerator::GuessEnumerator(const MarkovModel& model, std::uint64_t limit)
    : model_(model), limit_(limit) {
    max_trans_log_ = model.max_trans_prob > 0 ? std::log2(model.max_trans_prob) : kNegInf;
    const int plen = model.n - 1;
    const auto remaining = static_cast<double>(model.word_length - plen);

    auto seed_prefix = [&](std::uint32_t code, double p) {
        if (p <= 0) return;
        // decode prefix into symbols, oldest first
        std::array<int, 2> syms{};
        std::uint32_t c = code;
        for (int i = plen - 1; i >= 0; --i) {
            syms[static_cast<std::size_t>(i)] = static_cast<int>(c % model.alphabet);
            c /= static_cast<std::uint32_t>(model.alphabet);
        }
        std::uint32_t parent = UINT32_MAX;
        double lp = std::log2(p);
        for (int i = 0; i < plen; ++i) {
            const bool last = i == plen - 1;
            const double pad = remaining > 0 ? kBoundPad : 0.0;
            pool_.push_back(Node{last ? lp + remaining * max_trans_log_ + pad : 0.0,
                                 last ? lp : 0.0, parent,
                                 static_cast<std::uint16_t>(syms[static_cast<std::size_t>(i)]),
                                 static_cast<std::uint8_t>(i + 1)});
            parent = static_cast<std::uint32_t>(pool_.size() - 1);
        }
        push_heap_idx(parent);
    };

    const std::uint64_t prefixes = prefix_space(model.alphabet, model.n);
    if (model.start_dist.unseen_prob > 0) {
        for (std::uint64_t code = 0; code < prefixes; ++code)
            seed_prefix(static_cast<std::uint32_t>(code),
                        model.start_dist.prob(static_cast<int>(code)));
    } else {
        for (const auto& [code, p] : model.start_dist.observed)
            seed_prefix(static_cast<std::uint32_t>(code), p);
    }
}

std::vector<int> GuessEnumerator::reconstruct(std::uint32_t idx) const {
    std::vector<int> out;
    for (std::uint32_t i = idx; i != UINT32_MAX; i = pool_[i].parent)
        out.push_back(pool_[i].symbol);
    std::reverse(out.begin(), out.end());
    return out;
}

bool GuessEnumerator::heap_less(std::uint32_t a, std::uint32_t b) const {
    // true when a has lower priority: smaller bound, or on ties the
    // lexicographically larger prefix.
    if (pool_[a].key != pool_[b].key) return pool_[a].key < pool_[b].key;
    const auto wa = reconstruct(a);
    const auto wb = reconstruct(b);
    return std::lexicographical_compare(wb.begin(), wb.end(), wa.begin(), wa.end());
}

void GuessEnumerator::push_heap_idx(std::uint32_t idx) {
    heap_.push_back(idx);
    std::size_t i = heap_.size() - 1;
    while (i > 0) {
        const std::size_t p = (i - 1) / 2;
        if (!heap_less(heap_[p], heap_[i])) break;
        std::swap(heap_[p], heap_[i]);
        i = p;
    }
}

std::uint32_t GuessEnumerator::pop_heap_idx() {
    const std::uint32_t top = heap_.front();
    heap_.front() = heap_.back();
    heap_.pop_back();
    std::size_t i = 0;
    while (true) {
        const std::size_t l = 2 * i + 1, r = 2 * i + 2;
        std::size_t best = i;
        if (l < heap_.size() && heap_less(heap_[best], heap_[l])) best = l;
        if (r < heap_.size() && heap_less(heap_[best], heap_[r])) best = r;
        if (best == i) break;
        std::swap(heap_[i], heap_[best]);
        i = best;
    }
    return top;
}

std::optional<GuessEnumerator::Guess> GuessEnumerator::next() {
    if (emitted_ >= limit_) return std::nullopt;
    while (!heap_.empty()) {
        const std::uint32_t idx = pop_heap_idx();
        const Node node = pool_[idx];
        if (node.depth == model_.word_length) {
            ++emitted_;
            return Guess{reconstruct(idx), std::exp2(node.logprob), node.logprob};
        }
        // context = last n-1 symbols of the prefix
        std::uint32_t ctx;
        if (model_.n == 2) {
            ctx = node.symbol;
        } else {
            ctx = static_cast<std::uint32_t>(pool_[node.parent].symbol) *
                      static_cast<std::uint32_t>(model_.alphabet) +
                  node.symbol;
        }
        const CategoricalDist& dist = model_.context_dist(ctx);
        const auto remaining = static_cast<double>(model_.word_length - node.depth - 1);
        auto push_child = [&](int sym, double p) {
            if (p <= 0) return;
            if (pool_.size() >= UINT32_MAX - 1)
                throw std::runtime_error("enumerate: frontier exceeded 2^32 nodes");
            const double lp = node.logprob + std::log2(p);
            const double key = remaining > 0 ? lp + remaining * max_trans_log_ + kBoundPad : lp;
            pool_.push_back(Node{key, lp, idx,
                                 static_cast<std::uint16_t>(sym),
                                 static_cast<std::uint8_t>(node.depth + 1)});
            push_heap_idx(static_cast<std::uint32_t>(pool_.size() - 1));
        };
        if (dist.unseen_prob > 0) {
            auto it = dist.observed.begin();
            for (int sym = 0; sym < model_.alphabet; ++sym) {
                if (it != dist.observed.end() && it->first == sym) {
                    push_child(sym, it->second);
                    ++it;
                } else {
                    push_child(sym, dist.unseen_prob);
                }
            }
        } else {
            for (const auto& [sym, p] : dist.observed) push_child(sym, p);
        }
    }
    exhausted_early_ = true;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Persistence

void save_model(std::ostream& out, const MarkovModel& model) {
    out << "recpass-model v1\n";
    out << "n " << model.n << '\n';
    out << "omega " << model.word_length << '\n';
    out << "beta " << model.beta << '\n';
    out << "alphabet " << model.alphabet << '\n';
    out << "smoothing " << to_string(model.smoothing) << '\n';
    out << "lambda " << model.lambda << '\n';
    out << "corpus " << model.corpus_size << '\n';
    out << "starts " << model.start_counts.size() << '\n';
    for (const auto& [p, c] : model.start_counts)
        out << p << ' ' << static_cast<long long>(std::llround(c)) << '\n';
    std::size_t rows = 0;
    for (const auto& [ctx, counts] : model.trans_counts) rows += counts.size();
    out << "transitions " << rows << '\n';
    for (const auto& [ctx, counts] : model.trans_counts)
        for (const auto& [sym, c] : counts)
            out << ctx << ' ' << sym << ' ' << static_cast<long long>(std::llround(c)) << '\n';
}

void save_model(const std::string& path, const MarkovModel& model) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    save_model(out, model);
}

MarkovModel load_model(std::istream& in) {
    std::string header;
    do {
        if (!std::getline(in, header)) throw std::runtime_error("load_model: empty stream");
    } while (!header.empty() && header[0] == '#');
    if (header != "recpass-model v1")
        throw std::runtime_error("load_model: unsupported header '" + header + "'");
    MarkovModel model;
    std::string key;
    std::size_t n_starts = 0, n_trans = 0;
    std::string smoothing_name;
    while (in >> key) {
        if (key == "n") in >> model.n;
        else if (key == "omega") in >> model.word_length;
        else if (key == "beta") in >> model.beta;
        else if (key == "alphabet") in >> model.alphabet;
        else if (key == "smoothing") in >> smoothing_name;
        else if (key == "lambda") in >> model.lambda;
        else if (key == "corpus") in >> model.corpus_size;
        else if (key == "starts") {
            in >> n_starts;
            for (std::size_t i = 0; i < n_starts; ++i) {
                std::uint32_t p;
                long long c;
                in >> p >> c;
                model.start_counts[p] = static_cast<double>(c);
            }
        } else if (key == "transitions") {
            in >> n_trans;
            for (std::size_t i = 0; i < n_trans; ++i) {
                std::uint32_t ctx;
                int sym;
                long long c;
                in >> ctx >> sym >> c;
                model.trans_counts[ctx][sym] = static_cast<double>(c);
            }
            break;
        } else {
            throw std::runtime_error("load_model: unknown key '" + key + "'");
        }
    }
    if (!in) throw std::runtime_error("load_model: truncated file");
    model.smoothing = smoothing_from_name(smoothing_name);
    model.realize();
    return model;
}

MarkovModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_model(in);
}

}  // namespace recpass

#include "recpass/pattern.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

namespace recpass {
namespace {

// Midpoint cell of a move, or -1 when the two cells have no collinear
// midpoint on the grid.
int midpoint(int a, int b) {
    const int ar = a / 3, ac = a % 3, br = b / 3, bc = b % 3;
    if ((ar + br) % 2 || (ac + bc) % 2) return -1;
    return (ar + br) / 2 * 3 + (ac + bc) / 2;
}

void dfs(std::vector<int>& path, std::set<int>& visited, std::vector<UnlockPattern>& out) {
    if (path.size() >= 4) out.push_back({path});
    if (path.size() == 9) return;
    for (int next = 0; next <= 8; ++next) {
        if (visited.count(next)) continue;
        const int mid = midpoint(path.back(), next);
        if (mid >= 0 && !visited.count(mid)) continue;
        path.push_back(next);
        visited.insert(next);
        dfs(path, visited, out);
        visited.erase(next);
        path.pop_back();
    }
}

}  // namespace

bool is_valid_pattern(const UnlockPattern& pattern) {
    const auto& nodes = pattern.nodes;
    if (nodes.size() < 4 || nodes.size() > 9) return false;
    std::set<int> visited;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] < 0 || nodes[i] > 8) return false;
        if (!visited.insert(nodes[i]).second) return false;
        if (i > 0) {
            const int mid = midpoint(nodes[i - 1], nodes[i]);
            if (mid >= 0 && !visited.count(mid)) return false;
        }
    }
    return true;
}

const std::vector<UnlockPattern>& enumerate_valid_patterns() {
    static const std::vector<UnlockPattern> patterns = [] {
        std::vector<UnlockPattern> out;
        for (int start = 0; start <= 8; ++start) {
            std::vector<int> path{start};
            std::set<int> visited{start};
            dfs(path, visited, out);
        }
        std::sort(out.begin(), out.end());
        return out;
    }();
    return patterns;
}

PatternModel pattern_model(const std::vector<UnlockPattern>& corpus, int n, double lambda) {
    if (corpus.empty()) throw std::invalid_argument("pattern_model: empty corpus");
    if (n != 2 && n != 3) throw std::invalid_argument("pattern_model: n must be 2 or 3");
    if (lambda <= 0) throw std::invalid_argument("pattern_model: lambda must be > 0");

    PatternModel model;
    model.n = n;
    model.lambda = lambda;

    std::map<int, double> start_counts;  // prefix code over the first n-1 nodes
    std::map<std::uint32_t, std::map<int, double>> trans_counts;

    auto prefix_code = [&](const std::vector<int>& seq, std::size_t end) {
        std::uint32_t code = 0;
        for (std::size_t i = end + 1 - static_cast<std::size_t>(n - 1); i <= end; ++i)
            code = code * kPatternAlphabet + static_cast<std::uint32_t>(seq[i]);
        return code;
    };

    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!is_valid_pattern(corpus[i])) {
            model.rejected.push_back(i);
            continue;
        }
        std::vector<int> seq = corpus[i].nodes;
        seq.push_back(kPatternTerminal);
        start_counts[static_cast<int>(prefix_code(seq, static_cast<std::size_t>(n - 2)))] += 1;
        for (std::size_t j = static_cast<std::size_t>(n - 1); j < seq.size(); ++j)
            trans_counts[prefix_code(seq, j - 1)][seq[j]] += 1;
        ++model.corpus_size;
    }
    if (model.corpus_size == 0) throw std::invalid_argument("pattern_model: no valid patterns in corpus");

    int start_space = 1;
    for (int i = 0; i < n - 1; ++i) start_space *= kPatternAlphabet;
    const CategoricalDist start_dist = apply_additive(start_counts, start_space, lambda);
    std::map<std::uint32_t, CategoricalDist> trans_dist;
    for (const auto& [ctx, counts] : trans_counts)
        trans_dist[ctx] = apply_additive(counts, kPatternAlphabet, lambda);
    const CategoricalDist default_dist = apply_additive({}, kPatternAlphabet, lambda);

    auto trans_prob = [&](std::uint32_t ctx, int sym) {
        const auto it = trans_dist.find(ctx);
        return it != trans_dist.end() ? it->second.prob(sym) : default_dist.prob(sym);
    };

    // Unnormalized chain probability of each valid pattern, then renormalize
    // over the valid space so the restriction yields a proper distribution.
    const auto& space = enumerate_valid_patterns();
    model.probs.resize(space.size());
    double total = 0;
    for (std::size_t i = 0; i < space.size(); ++i) {
        std::vector<int> seq = space[i].nodes;
        seq.push_back(kPatternTerminal);
        double p = start_dist.prob(static_cast<int>(prefix_code(seq, static_cast<std::size_t>(n - 2))));
        for (std::size_t j = static_cast<std::size_t>(n - 1); j < seq.size(); ++j)
            p *= trans_prob(prefix_code(seq, j - 1), seq[j]);
        model.probs[i] = p;
        total += p;
    }
    for (double& p : model.probs) p /= total;
    return model;
}

PartialGuessReport pattern_partial_guessing(const PatternModel& model, double alpha) {
    std::vector<double> probs = model.probs;
    std::sort(probs.begin(), probs.end(), std::greater<>());
    return partial_guessing(probs, alpha);
}

std::vector<UnlockPattern> parse_pattern_file(std::istream& in) {
    std::vector<UnlockPattern> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.size() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        UnlockPattern p;
        for (char c : line) {
            if (c < '0' || c > '8')
                throw std::runtime_error("pattern file line " + std::to_string(lineno) +
                                         ": invalid digit '" + std::string(1, c) + "'");
            p.nodes.push_back(c - '0');
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<UnlockPattern> parse_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_pattern_file(in);
}

}  // namespace recpass

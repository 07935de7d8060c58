#include "recpass/recognizers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace recpass {

RecognizerKind recognizer_from_name(const std::string& name) {
    if (name == "sax") return RecognizerKind::sax;
    if (name == "dtw") return RecognizerKind::dtw;
    if (name == "protractor") return RecognizerKind::protractor;
    throw std::invalid_argument("unknown recognizer '" + name + "'");
}

std::string to_string(RecognizerKind kind) {
    switch (kind) {
        case RecognizerKind::sax: return "sax";
        case RecognizerKind::dtw: return "dtw";
        case RecognizerKind::protractor: return "protractor";
    }
    return "?";
}

SimilarityScore score_sax(const SaxWord& tmpl, const SaxWord& attempt) {
    return {-mindist_2d(tmpl, attempt), RecognizerKind::sax};
}

SimilarityScore score_sax(const SaxWord& tmpl, const SaxWord& attempt, const DistTable& table) {
    return {-mindist_2d(tmpl, attempt, table), RecognizerKind::sax};
}

SimilarityScore score_dtw(const NormalizedTrace& tmpl, const NormalizedTrace& attempt) {
    const std::size_t n = tmpl.size();
    const std::size_t m = attempt.size();
    if (n == 0 || m == 0) throw std::invalid_argument("score_dtw: empty trace");
    constexpr double inf = std::numeric_limits<double>::infinity();
    // Two-row DP over the full alignment lattice.
    std::vector<double> prev(m + 1, inf), cur(m + 1, inf);
    prev[0] = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = inf;
        for (std::size_t j = 1; j <= m; ++j) {
            const double dx = tmpl.x_series[i - 1] - attempt.x_series[j - 1];
            const double dy = tmpl.y_series[i - 1] - attempt.y_series[j - 1];
            const double d = std::hypot(dx, dy);
            cur[j] = d + std::min({prev[j], cur[j - 1], prev[j - 1]});
        }
        std::swap(prev, cur);
    }
    return {-prev[m], RecognizerKind::dtw};
}

std::vector<std::pair<double, double>> protractor_vector(const NormalizedTrace& trace) {
    const std::size_t n = trace.size();
    if (n < 2) throw std::invalid_argument("protractor: degenerate single-point trace");
    // Resample to equidistant points along the path.
    std::vector<double> cum{0};
    for (std::size_t i = 1; i < n; ++i)
        cum.push_back(cum.back() + std::hypot(trace.x_series[i] - trace.x_series[i - 1],
                                              trace.y_series[i] - trace.y_series[i - 1]));
    const double total = cum.back();
    std::vector<std::pair<double, double>> pts(kProtractorResamplePoints);
    std::size_t seg = 1;
    for (int i = 0; i < kProtractorResamplePoints; ++i) {
        const double target = total * i / (kProtractorResamplePoints - 1);
        while (seg + 1 < n && cum[seg] < target) ++seg;
        const double span = cum[seg] - cum[seg - 1];
        const double f = span > 0 ? (target - cum[seg - 1]) / span : 0.0;
        pts[i] = {trace.x_series[seg - 1] + f * (trace.x_series[seg] - trace.x_series[seg - 1]),
                  trace.y_series[seg - 1] + f * (trace.y_series[seg] - trace.y_series[seg - 1])};
    }
    double cx = 0, cy = 0;
    for (const auto& [x, y] : pts) {
        cx += x;
        cy += y;
    }
    cx /= pts.size();
    cy /= pts.size();
    double norm = 0;
    for (auto& [x, y] : pts) {
        x -= cx;
        y -= cy;
        norm += x * x + y * y;
    }
    norm = std::sqrt(norm);
    if (norm == 0) throw std::invalid_argument("protractor: degenerate trace (all points equal)");
    for (auto& [x, y] : pts) {
        x /= norm;
        y /= norm;
    }
    return pts;
}

SimilarityScore score_protractor(const NormalizedTrace& tmpl, const NormalizedTrace& attempt) {
    const auto vt = protractor_vector(tmpl);
    const auto va = protractor_vector(attempt);
    // Optimal-rotation cosine: maximize sum of dot products over rotations of
    // the attempt; closed form via the (a, b) moment pair.
    double a = 0, b = 0;
    for (std::size_t i = 0; i < vt.size(); ++i) {
        a += vt[i].first * va[i].first + vt[i].second * va[i].second;
        b += vt[i].first * va[i].second - vt[i].second * va[i].first;
    }
    const double best_cos = std::clamp(std::hypot(a, b), -1.0, 1.0);
    return {-std::acos(best_cos), RecognizerKind::protractor};
}

}  // namespace recpass

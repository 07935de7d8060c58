#include "recpass/sax.hpp"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>
#include <charconv>
#include <stdexcept>

namespace recpass {

SaxParams::SaxParams(int omega_, int beta_) : omega(omega_), beta(beta_) {
    if (omega < 1 || omega > 64) throw std::invalid_argument("SaxParams: omega must be in [1, 64]");
    if (beta < 2 || beta > 26) throw std::invalid_argument("SaxParams: beta must be in [2, 26]");
}

Breakpoints breakpoints(int beta) {
    if (beta < 2) throw std::invalid_argument("breakpoints: beta must be >= 2");
    boost::math::normal_distribution<double> norm;
    Breakpoints bp;
    bp.values.reserve(beta - 1);
    for (int i = 1; i < beta; ++i)
        bp.values.push_back(boost::math::quantile(norm, static_cast<double>(i) / beta));
    return bp;
}

DistTable make_dist_table(int beta) {
    const Breakpoints bp = breakpoints(beta);
    DistTable table{beta, std::vector<double>(static_cast<std::size_t>(beta) * beta, 0.0)};
    for (int i = 0; i < beta; ++i) {
        for (int j = 0; j < beta; ++j) {
            if (std::abs(i - j) <= 1) continue;
            const int hi = std::max(i, j);
            const int lo = std::min(i, j);
            table.entries[static_cast<std::size_t>(i) * beta + j] = bp.values[hi - 1] - bp.values[lo];
        }
    }
    return table;
}

std::vector<double> paa(const std::vector<double>& series, int omega) {
    if (series.empty()) throw std::invalid_argument("paa: empty series");
    if (omega < 1) throw std::invalid_argument("paa: omega must be >= 1");
    const std::size_t n = series.size();
    const double seg = static_cast<double>(n) / omega;
    std::vector<double> means(omega, 0.0);
    for (int s = 0; s < omega; ++s) {
        const double lo = s * seg;
        const double hi = (s + 1) * seg;
        double acc = 0;
        // sample j occupies [j, j+1); weight = overlap with [lo, hi)
        const auto jlo = static_cast<std::size_t>(std::floor(lo));
        auto jhi = static_cast<std::size_t>(std::ceil(hi));
        if (jhi > n) jhi = n;
        for (std::size_t j = jlo; j < jhi; ++j) {
            const double w = std::min(hi, static_cast<double>(j + 1)) - std::max(lo, static_cast<double>(j));
            if (w > 0) acc += w * series[j];
        }
        means[s] = acc / seg;
    }
    return means;
}

int sax_symbol(double value, const Breakpoints& bp) {
    // band (values[i-1], values[i]]: index = count of breakpoints < value
    const auto it = std::lower_bound(bp.values.begin(), bp.values.end(), value);
    return static_cast<int>(it - bp.values.begin());
}

std::vector<int> sax_encode_1d(const std::vector<double>& series, const SaxParams& params) {
    const Breakpoints bp = breakpoints(params.beta);
    const std::vector<double> means = paa(series, params.omega);
    std::vector<int> symbols(means.size());
    for (std::size_t i = 0; i < means.size(); ++i) symbols[i] = sax_symbol(means[i], bp);
    return symbols;
}

SaxWord sax_encode_2d(const NormalizedTrace& trace, const SaxParams& params) {
    if (trace.x_series.size() != trace.y_series.size())
        throw std::invalid_argument("sax_encode_2d: x/y length mismatch");
    const std::vector<int> xs = sax_encode_1d(trace.x_series, params);
    const std::vector<int> ys = sax_encode_1d(trace.y_series, params);
    SaxWord word;
    word.beta = static_cast<std::uint16_t>(params.beta);
    word.n_original = static_cast<std::uint32_t>(trace.x_series.size());
    word.symbols.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        word.symbols.emplace_back(static_cast<std::uint8_t>(xs[i]), static_cast<std::uint8_t>(ys[i]));
    return word;
}

std::string to_text(const SaxWord& word) {
    std::string out;
    for (std::size_t i = 0; i < word.symbols.size(); ++i) {
        if (i) out += '.';
        out += 'x';
        out += std::to_string(word.symbols[i].first);
        out += 'y';
        out += std::to_string(word.symbols[i].second);
    }
    return out;
}

SaxWord sax_word_from_text(const std::string& text, int beta, std::uint32_t n_original) {
    SaxWord word;
    word.beta = static_cast<std::uint16_t>(beta);
    word.n_original = n_original;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('.', pos);
        if (end == std::string::npos) end = text.size();
        const std::string_view cell(text.data() + pos, end - pos);
        const std::size_t ypos = cell.find('y');
        if (cell.size() < 4 || cell[0] != 'x' || ypos == std::string_view::npos)
            throw std::invalid_argument("sax_word_from_text: malformed cell '" + std::string(cell) + "'");
        int xs = 0, ys = 0;
        auto rx = std::from_chars(cell.data() + 1, cell.data() + ypos, xs);
        auto ry = std::from_chars(cell.data() + ypos + 1, cell.data() + cell.size(), ys);
        if (rx.ec != std::errc{} || ry.ec != std::errc{} || xs < 0 || ys < 0 || xs >= beta || ys >= beta)
            throw std::invalid_argument("sax_word_from_text: symbol out of range in '" + std::string(cell) + "'");
        word.symbols.emplace_back(static_cast<std::uint8_t>(xs), static_cast<std::uint8_t>(ys));
        pos = end + 1;
        if (end == text.size()) break;
    }
    if (word.symbols.empty()) throw std::invalid_argument("sax_word_from_text: empty word");
    return word;
}

double mindist_1d(const std::vector<int>& q, const std::vector<int>& c, std::size_t n, const DistTable& table) {
    if (q.size() != c.size()) throw std::invalid_argument("mindist_1d: length mismatch");
    double acc = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double d = table(q[i], c[i]);
        acc += d * d;
    }
    return std::sqrt(static_cast<double>(n) / q.size()) * std::sqrt(acc);
}

double mindist_2d(const SaxWord& q, const SaxWord& c) {
    return mindist_2d(q, c, make_dist_table(q.beta));
}

double mindist_2d(const SaxWord& q, const SaxWord& c, const DistTable& table) {
    if (q.symbols.size() != c.symbols.size()) throw std::invalid_argument("mindist_2d: length mismatch");
    if (q.beta != c.beta) throw std::invalid_argument("mindist_2d: alphabet mismatch");
    const std::size_t n = std::max(q.n_original, c.n_original);
    double acc = 0;
    for (std::size_t i = 0; i < q.symbols.size(); ++i) {
        const double d = table(q.symbols[i].first, c.symbols[i].first) +
                         table(q.symbols[i].second, c.symbols[i].second);
        acc += d * d;
    }
    return std::sqrt(static_cast<double>(n) / q.symbols.size()) * std::sqrt(acc);
}

}  // namespace recpass

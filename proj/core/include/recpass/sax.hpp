#pragma once
// 2-D symbolic aggregate approximation: PAA segmentation, equiprobable
// normal breakpoints, per-dimension symbol assignment and the MINDIST
// lower-bound distance between symbol words.

#include <cstdint>
#include <string>
#include <vector>

#include "recpass/trace.hpp"

namespace recpass {

struct SaxParams {
    int omega = 8;  // word length (symbols per dimension)
    int beta = 6;   // alphabet size per dimension

    SaxParams() = default;
    SaxParams(int omega_, int beta_);  // throws std::invalid_argument out of [1,64] x [2,26]

    friend bool operator==(const SaxParams&, const SaxParams&) = default;
};

// beta-1 boundaries splitting the standard normal into beta equiprobable
// bands: values[i] = Phi^-1((i+1)/beta). Strictly increasing, symmetric
// about zero.
struct Breakpoints {
    std::vector<double> values;
};

Breakpoints breakpoints(int beta);

// Lookup table for the per-symbol dist() of MINDIST: zero on and next to the
// diagonal, breakpoint difference beyond it.
struct DistTable {
    int beta;
    std::vector<double> entries;  // beta x beta, row-major

    [[nodiscard]] double operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * beta + j]; }
};

DistTable make_dist_table(int beta);

// PAA segment means. When omega does not divide the series length, boundary
// samples contribute fractionally to both adjacent segments.
std::vector<double> paa(const std::vector<double>& series, int omega);

// Symbol for one value: the index of the half-open band (low, high] it falls
// in. Below the lowest breakpoint -> 0, above the highest -> beta-1.
int sax_symbol(double value, const Breakpoints& bp);

// PAA + symbol binning for one dimension.
std::vector<int> sax_encode_1d(const std::vector<double>& series, const SaxParams& params);

struct SaxWord {
    std::vector<std::pair<std::uint8_t, std::uint8_t>> symbols;  // (xsym, ysym), each in [0, beta)
    std::uint32_t n_original = 0;                                // source series length
    std::uint16_t beta = 0;

    [[nodiscard]] int omega() const { return static_cast<int>(symbols.size()); }
    // Combined symbol index xsym * beta + ysym, the Markov-chain alphabet.
    [[nodiscard]] int combined(int i) const { return symbols[i].first * beta + symbols[i].second; }

    friend bool operator==(const SaxWord&, const SaxWord&) = default;
};

SaxWord sax_encode_2d(const NormalizedTrace& trace, const SaxParams& params);

// Text form: per position `x{i}y{j}` joined by '.', e.g. "x0y5.x1y4".
std::string to_text(const SaxWord& word);
SaxWord sax_word_from_text(const std::string& text, int beta, std::uint32_t n_original);

// MINDIST between two 1-D symbol strings of equal length omega; n is the
// original series length.
double mindist_1d(const std::vector<int>& q, const std::vector<int>& c, std::size_t n, const DistTable& table);

// 2-D extension: per position the x and y dist() values are summed, then
// square-accumulated across positions as in the 1-D form. n = max of the two
// original lengths.
double mindist_2d(const SaxWord& q, const SaxWord& c);
double mindist_2d(const SaxWord& q, const SaxWord& c, const DistTable& table);

}  // namespace recpass

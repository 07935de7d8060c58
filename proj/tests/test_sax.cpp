#include <doctest.h>

#include <cmath>
#include <random>

#include "recpass/sax.hpp"

using namespace recpass;

namespace {

// Independent inverse standard-normal CDF: bisection against erf.
double inverse_normal_cdf_oracle(double p) {
    auto cdf = [](double x) { return 0.5 * (1.0 + std::erf(x / std::sqrt(2.0))); };
    double lo = -10, hi = 10;
    for (int i = 0; i < 200; ++i) {
        const double mid = (lo + hi) / 2;
        (cdf(mid) < p ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace

TEST_CASE("breakpoints match the published beta=6 boundaries") {
    const auto bp = breakpoints(6);
    REQUIRE(bp.values.size() == 5);
    const double expected[] = {-0.97, -0.43, 0.0, 0.43, 0.97};
    for (int i = 0; i < 5; ++i) CHECK(std::abs(bp.values[i] - expected[i]) < 0.005);
}

TEST_CASE("breakpoints beta=2 is the median") {
    const auto bp = breakpoints(2);
    REQUIRE(bp.values.size() == 1);
    CHECK(std::abs(bp.values[0]) < 1e-12);
}

TEST_CASE("breakpoints beta=4 against the numeric inverse-CDF oracle") {
    const auto bp = breakpoints(4);
    REQUIRE(bp.values.size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(bp.values[i] - inverse_normal_cdf_oracle((i + 1) / 4.0)) < 1e-3);
    CHECK(std::abs(bp.values[1]) < 1e-12);
    CHECK(std::abs(bp.values[2] - 0.6745) < 1e-3);
}

TEST_CASE("breakpoints are increasing and symmetric") {
    for (int beta : {2, 3, 5, 6, 8, 13, 26}) {
        const auto bp = breakpoints(beta);
        for (std::size_t i = 1; i < bp.values.size(); ++i) CHECK(bp.values[i] > bp.values[i - 1]);
        for (std::size_t i = 0; i < bp.values.size(); ++i)
            CHECK(std::abs(bp.values[i] + bp.values[bp.values.size() - 1 - i]) < 1e-9);
    }
}

TEST_CASE("breakpoints reject beta < 2") {
    CHECK_THROWS(breakpoints(1));
}

TEST_CASE("dist table matches the published beta=6 entries") {
    const auto table = make_dist_table(6);
    // a..f = 0..5
    CHECK(table(0, 1) == 0.0);
    CHECK(std::abs(table(0, 2) - 0.54) < 0.005);
    CHECK(std::abs(table(3, 5) - 0.54) < 0.005);
    // entries spanning two breakpoints carry two units of 2-dp rounding
    CHECK(std::abs(table(0, 5) - 1.94) < 0.011);
    CHECK(std::abs(table(0, 3) - 0.97) < 0.011);
    CHECK(std::abs(table(0, 4) - 1.4) < 0.011);
    CHECK(std::abs(table(1, 3) - 0.43) < 0.011);
    CHECK(std::abs(table(1, 4) - 0.86) < 0.011);
    CHECK(std::abs(table(1, 5) - 1.4) < 0.011);
    CHECK(std::abs(table(2, 4) - 0.43) < 0.011);
    CHECK(std::abs(table(2, 5) - 0.97) < 0.011);
    for (int i = 0; i < 6; ++i) {
        CHECK(table(i, i) == 0.0);
        for (int j = 0; j < 6; ++j) {
            CHECK(table(i, j) == table(j, i));
            if (std::abs(i - j) <= 1) CHECK(table(i, j) == 0.0);
        }
    }
}

TEST_CASE("paa exact and constant segments") {
    CHECK(paa({1, 1, 2, 2}, 2) == std::vector<double>{1, 2});
    CHECK(paa({3, 3, 3, 3, 3, 3}, 3) == std::vector<double>{3, 3, 3});
}

TEST_CASE("paa fractional weighting") {
    const auto means = paa({0, 1, 2}, 2);
    REQUIRE(means.size() == 2);
    CHECK(means[0] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(means[1] == doctest::Approx(5.0 / 3).epsilon(1e-12));
}

TEST_CASE("paa preserves the overall mean") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 40);
        const int omega = 1 + static_cast<int>(rng() % 10);
        std::vector<double> series(n);
        double mean = 0;
        for (auto& v : series) mean += (v = u(rng));
        mean /= n;
        const auto means = paa(series, omega);
        double paa_mean = 0;
        for (double m : means) paa_mean += m;
        paa_mean /= omega;
        CHECK(paa_mean == doctest::Approx(mean).epsilon(1e-9));
    }
}

TEST_CASE("paa rejects empty input") {
    CHECK_THROWS(paa({}, 4));
}

TEST_CASE("tie rule: zero falls in band 2 at beta=6") {
    const auto bp = breakpoints(6);
    CHECK(sax_symbol(0.0, bp) == 2);
    CHECK(sax_symbol(1e-9, bp) == 3);
    CHECK(sax_symbol(-2.0, bp) == 0);
    CHECK(sax_symbol(2.0, bp) == 5);
}

TEST_CASE("encode: constant zero series maps to the middle band") {
    const SaxParams params(4, 6);
    const auto symbols = sax_encode_1d({0, 0, 0, 0, 0, 0, 0, 0}, params);
    for (int s : symbols) CHECK(s == 2);
}

TEST_CASE("symbol frequencies are uniform for standard-normal input") {
    // Monte Carlo anchor for the equiprobable-band construction: bin 10^6
    // standard-normal values (one sample per segment).
    std::mt19937_64 rng(42);
    std::normal_distribution<double> gauss(0, 1);
    const int n = 1'000'000;
    const auto bp = breakpoints(6);
    std::vector<int> freq(6, 0);
    for (int i = 0; i < n; ++i) freq[static_cast<std::size_t>(sax_symbol(gauss(rng), bp))]++;
    for (int s = 0; s < 6; ++s)
        CHECK(std::abs(freq[s] / static_cast<double>(n) - 1.0 / 6) < 0.02);
}

TEST_CASE("2-D encode composes the per-dimension encodings") {
    NormalizedTrace tr;
    tr.x_series.assign(8, -3.0);
    tr.y_series.assign(8, 3.0);
    const auto word = sax_encode_2d(tr, SaxParams(8, 6));
    REQUIRE(word.omega() == 8);
    for (const auto& [xs, ys] : word.symbols) {
        CHECK(xs == 0);
        CHECK(ys == 5);
    }
    CHECK(word.n_original == 8);
    CHECK(sax_encode_2d(tr, SaxParams(8, 6)) == word);
}

TEST_CASE("2-D encode rejects mismatched dimensions") {
    NormalizedTrace tr;
    tr.x_series = {0, 0, 0};
    tr.y_series = {0, 0};
    CHECK_THROWS(sax_encode_2d(tr, SaxParams(2, 6)));
}

TEST_CASE("mindist_1d hand-evaluated example") {
    const auto table = make_dist_table(6);
    // q = "ac", c = "ca", n = 16
    const double d = mindist_1d({0, 2}, {2, 0}, 16, table);
    CHECK(d == doctest::Approx(std::sqrt(8.0) * std::sqrt(2 * table(0, 2) * table(0, 2)))
                   .epsilon(1e-9));
    CHECK(std::abs(d - 2.16) < 0.02);
}

TEST_CASE("mindist is zero on equal words and symmetric") {
    const auto table = make_dist_table(6);
    CHECK(mindist_1d({0, 1, 2}, {0, 1, 2}, 9, table) == 0.0);

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 1000; ++trial) {
        SaxWord q, c;
        q.beta = c.beta = 6;
        q.n_original = 32 + rng() % 32;
        c.n_original = 32 + rng() % 32;
        for (int i = 0; i < 8; ++i) {
            q.symbols.emplace_back(rng() % 6, rng() % 6);
            c.symbols.emplace_back(rng() % 6, rng() % 6);
        }
        const double qc = mindist_2d(q, c, table);
        const double cq = mindist_2d(c, q, table);
        CHECK(qc == cq);
        CHECK(qc >= 0);
    }
}

TEST_CASE("mindist_2d reduces to mindist_1d when only x differs") {
    const auto table = make_dist_table(6);
    SaxWord q, c;
    q.beta = c.beta = 6;
    q.n_original = c.n_original = 40;
    const std::vector<int> qx{0, 3, 5, 1}, cx{2, 3, 0, 4}, ys{1, 1, 4, 2};
    for (int i = 0; i < 4; ++i) {
        q.symbols.emplace_back(qx[i], ys[i]);
        c.symbols.emplace_back(cx[i], ys[i]);
    }
    CHECK(mindist_2d(q, c, table) == doctest::Approx(mindist_1d(qx, cx, 40, table)).epsilon(1e-12));
}

TEST_CASE("sax word text form round-trips") {
    SaxWord word;
    word.beta = 6;
    word.n_original = 123;
    word.symbols = {{0, 5}, {1, 4}, {3, 3}, {5, 0}};
    const auto text = to_text(word);
    CHECK(text == "x0y5.x1y4.x3y3.x5y0");
    CHECK(sax_word_from_text(text, 6, 123) == word);
    CHECK_THROWS(sax_word_from_text("x9y1", 6, 1));
    CHECK_THROWS(sax_word_from_text("garbage", 6, 1));
}

TEST_CASE("SaxParams bounds") {
    CHECK_THROWS(SaxParams(0, 6));
    CHECK_THROWS(SaxParams(65, 6));
    CHECK_THROWS(SaxParams(8, 1));
    CHECK_THROWS(SaxParams(8, 27));
    CHECK_NOTHROW(SaxParams(1, 2));
    CHECK_NOTHROW(SaxParams(64, 26));
}

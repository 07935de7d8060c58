#include "recpass/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace recpass {
namespace {

constexpr double kCanvas = 1000.0;  // desk-scale screen units
constexpr double kPi = 3.14159265358979323846;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

template <typename T>
const T& weighted_pick(std::mt19937_64& rng, const std::vector<std::pair<T, double>>& items) {
    double total = 0;
    for (const auto& [v, w] : items) total += w;
    double u = std::uniform_real_distribution<double>(0.0, total)(rng);
    for (const auto& [v, w] : items) {
        if (u < w) return v;
        u -= w;
    }
    return items.back().first;
}

struct BaseShape {
    std::vector<double> xs, ys;
    double size;
};

// Small letter polylines on a unit box, drawn as one stroke.
const std::vector<std::vector<std::pair<double, double>>> kLetters = {
    {{0, 1}, {0, 0}, {1, 0}},                               // L
    {{0, 0}, {0, 1}, {0.5, 0.4}, {1, 1}, {1, 0}},           // M
    {{0, 0}, {0, 1}, {1, 0}, {1, 1}},                       // N
    {{1, 1}, {0, 0.8}, {1, 0.2}, {0, 0}},                   // S-ish
    {{0, 1}, {0.3, 0}, {0.5, 0.7}, {0.7, 0}, {1, 1}},       // W
    {{0, 1}, {1, 1}, {0, 0}, {1, 0}},                       // Z
};

std::vector<std::pair<double, double>> resample_polyline(
    const std::vector<std::pair<double, double>>& pts, int count) {
    std::vector<double> cum{0};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double dx = pts[i].first - pts[i - 1].first;
        const double dy = pts[i].second - pts[i - 1].second;
        cum.push_back(cum.back() + std::hypot(dx, dy));
    }
    const double total = cum.back();
    std::vector<std::pair<double, double>> out;
    out.reserve(count);
    std::size_t seg = 1;
    for (int i = 0; i < count; ++i) {
        const double target = total * i / (count - 1);
        while (seg + 1 < pts.size() && cum[seg] < target) ++seg;
        const double span = cum[seg] - cum[seg - 1];
        const double f = span > 0 ? (target - cum[seg - 1]) / span : 0.0;
        out.emplace_back(pts[seg - 1].first + f * (pts[seg].first - pts[seg - 1].first),
                         pts[seg - 1].second + f * (pts[seg].second - pts[seg - 1].second));
    }
    return out;
}

// Discrete palettes keep the across-account distribution concentrated.
BaseShape make_base(ShapeKind kind, std::mt19937_64& rng, int npoints) {
    static const std::vector<std::pair<double, double>> kSizes = {
        {150, 0.3}, {250, 0.5}, {400, 0.2}};
    static const std::vector<std::pair<std::pair<double, double>, double>> kCenters = {
        {{300, 300}, 0.30}, {{500, 500}, 0.25}, {{700, 300}, 0.15},
        {{300, 700}, 0.15}, {{700, 700}, 0.15}};
    static const std::vector<std::pair<int, double>> kPhases = {
        {0, 0.4}, {1, 0.2}, {2, 0.15}, {3, 0.1}, {4, 0.05}, {5, 0.04}, {6, 0.03}, {7, 0.03}};
    static const std::vector<std::pair<int, double>> kDirections = {{+1, 0.7}, {-1, 0.3}};

    const double size = weighted_pick(rng, kSizes);
    const auto center = weighted_pick(rng, kCenters);
    const int phase_idx = weighted_pick(rng, kPhases);
    const int dir = weighted_pick(rng, kDirections);
    const double phase = phase_idx * (2 * kPi / 8);

    BaseShape shape;
    shape.size = size;
    shape.xs.reserve(npoints);
    shape.ys.reserve(npoints);

    auto emit_polyline = [&](const std::vector<std::pair<double, double>>& pts) {
        for (const auto& [u, v] : resample_polyline(pts, npoints)) {
            shape.xs.push_back(center.first + size * (u - 0.5));
            shape.ys.push_back(center.second + size * (v - 0.5));
        }
    };

    switch (kind) {
        case ShapeKind::circle:
            for (int i = 0; i < npoints; ++i) {
                const double a = phase + dir * 2 * kPi * i / npoints;
                shape.xs.push_back(center.first + size * 0.5 * std::cos(a));
                shape.ys.push_back(center.second + size * 0.5 * std::sin(a));
            }
            break;
        case ShapeKind::square: {
            std::vector<std::pair<double, double>> corners = {
                {0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}};
            std::rotate(corners.begin(), corners.begin() + phase_idx % 4, corners.end() - 1);
            corners.back() = corners.front();
            if (dir < 0) std::reverse(corners.begin(), corners.end());
            emit_polyline(corners);
            break;
        }
        case ShapeKind::zigzag: {
            const int segments = 3 + phase_idx % 3;
            std::vector<std::pair<double, double>> pts;
            for (int s = 0; s <= segments; ++s)
                pts.emplace_back(static_cast<double>(s) / segments, s % 2 == 0 ? 0.0 : 1.0);
            if (dir < 0) std::reverse(pts.begin(), pts.end());
            emit_polyline(pts);
            break;
        }
        case ShapeKind::letter_stroke:
            emit_polyline(kLetters[phase_idx % kLetters.size()]);
            break;
        case ShapeKind::random_walk: {
            std::normal_distribution<double> step(0.0, 1.0);
            double x = center.first, y = center.second;
            double vx = 0, vy = 0;
            for (int i = 0; i < npoints; ++i) {
                vx = 0.8 * vx + step(rng) * size * 0.05;
                vy = 0.8 * vy + step(rng) * size * 0.05;
                x += vx;
                y += vy;
                shape.xs.push_back(x);
                shape.ys.push_back(y);
            }
            break;
        }
    }
    return shape;
}

}  // namespace

TraceSet synth_gestures(const SynthSpec& spec, std::uint64_t seed) {
    if (spec.shape_mix.empty()) throw std::invalid_argument("synth_gestures: empty shape mix");
    if (spec.accounts < 1) throw std::invalid_argument("synth_gestures: need at least one account");
    if (spec.samples_per_account < 1) throw std::invalid_argument("synth_gestures: need >= 1 sample");
    if (spec.points_per_trace < 2) throw std::invalid_argument("synth_gestures: need >= 2 points");
    for (const auto& [kind, w] : spec.shape_mix)
        if (w <= 0) throw std::invalid_argument("synth_gestures: non-positive mix weight");

    TraceSet set;
    set.source = "synthetic";
    for (int a = 0; a < spec.accounts; ++a) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(a) + 1)));
        const ShapeKind kind = weighted_pick(rng, spec.shape_mix);
        const BaseShape base = make_base(kind, rng, spec.points_per_trace);

        char acct[32];
        std::snprintf(acct, sizeof acct, "acct%05d", a);
        std::normal_distribution<double> noise(0.0, 1.0);
        for (int s = 0; s < spec.samples_per_account; ++s) {
            RawTrace tr;
            tr.account_id = acct;
            char sid[16];
            std::snprintf(sid, sizeof sid, "s%02d", s);
            tr.sample_id = sid;

            const double sigma = spec.jitter * base.size;
            const double ox = sigma > 0 ? noise(rng) * sigma : 0.0;
            const double oy = sigma > 0 ? noise(rng) * sigma : 0.0;
            const double scale = sigma > 0 ? 1.0 + noise(rng) * spec.jitter * 0.3 : 1.0;
            for (std::size_t i = 0; i < base.xs.size(); ++i) {
                double x = ox + scale * base.xs[i];
                double y = oy + scale * base.ys[i];
                if (sigma > 0) {
                    x += noise(rng) * sigma * 0.5;
                    y += noise(rng) * sigma * 0.5;
                }
                tr.points.push_back({static_cast<double>(i) * 8.0, x, y});
            }
            set.traces.push_back(std::move(tr));
        }
    }
    return set;
}

}  // namespace recpass

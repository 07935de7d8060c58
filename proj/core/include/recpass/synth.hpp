#pragma once
// Deterministic synthetic gesture-password generator. Stands in for human
// datasets: each account commits to one base shape drawn from a skewed mix
// over a small palette of shape parameters, and its samples are jittered
// repetitions of that base. The palette skew concentrates the resulting
// symbol distribution the way human choice does.

#include <cstdint>
#include <vector>

#include "recpass/trace.hpp"

namespace recpass {

enum class ShapeKind { circle, square, zigzag, letter_stroke, random_walk };

struct SynthSpec {
    // (shape, weight) pairs; weights need not sum to 1 but must be positive.
    std::vector<std::pair<ShapeKind, double>> shape_mix = {
        {ShapeKind::circle, 0.35},        {ShapeKind::square, 0.25},
        {ShapeKind::zigzag, 0.20},        {ShapeKind::letter_stroke, 0.15},
        {ShapeKind::random_walk, 0.05},
    };
    int accounts = 100;
    int samples_per_account = 4;
    double jitter = 0.05;       // noise scale relative to the shape's size
    int points_per_trace = 64;  // base sampling resolution
};

// Pure function of (spec, seed): the same arguments always produce the same
// TraceSet, point for point.
TraceSet synth_gestures(const SynthSpec& spec, std::uint64_t seed);

}  // namespace recpass

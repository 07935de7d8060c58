#pragma once
// Uniform scoring interface over the three recognizers used to validate the
// symbolic representation: SAX/MINDIST, dynamic time warping, and the
// Protractor closed-form cosine matcher. Higher score = more similar.

#include <string>

#include "recpass/sax.hpp"
#include "recpass/trace.hpp"

namespace recpass {

enum class RecognizerKind { sax, dtw, protractor };

RecognizerKind recognizer_from_name(const std::string& name);
std::string to_string(RecognizerKind kind);

struct SimilarityScore {
    double value;  // comparable only within one recognizer
    RecognizerKind recognizer;
};

// Negated 2-D MINDIST; identical words score 0, the maximum.
SimilarityScore score_sax(const SaxWord& tmpl, const SaxWord& attempt);
SimilarityScore score_sax(const SaxWord& tmpl, const SaxWord& attempt, const DistTable& table);

// Negated DTW alignment cost, Euclidean point distance over (x, y), full
// warping window.
SimilarityScore score_dtw(const NormalizedTrace& tmpl, const NormalizedTrace& attempt);

// Protractor: resample to a fixed point count, translate to centroid,
// scale-normalize, then the closed-form optimal rotation. Score is the
// negated angular distance (rotation- and scale-invariant).
SimilarityScore score_protractor(const NormalizedTrace& tmpl, const NormalizedTrace& attempt);

inline constexpr int kProtractorResamplePoints = 64;

// Resampled/centered/normalized Protractor vector; exposed for the rotation
// search oracle in tests.
std::vector<std::pair<double, double>> protractor_vector(const NormalizedTrace& trace);

}  // namespace recpass

#pragma once
// Raw and normalized touch traces: the pre-discretization password representation.

#include <string>
#include <vector>

namespace recpass {

struct TracePoint {
    double t;  // milliseconds, non-decreasing within a trace
    double x;
    double y;
};

struct RawTrace {
    std::string account_id;
    std::string sample_id;
    std::vector<TracePoint> points;  // >= 2, time-ordered

    [[nodiscard]] std::size_t size() const { return points.size(); }
};

// Per-dimension z-normalized coordinate series. A dimension whose input was
// constant is mapped to all zeros and flagged degenerate instead of dividing
// by a zero deviation.
struct NormalizedTrace {
    std::vector<double> x_series;
    std::vector<double> y_series;
    bool degenerate_x = false;
    bool degenerate_y = false;

    [[nodiscard]] std::size_t size() const { return x_series.size(); }
};

struct TraceSet {
    std::vector<RawTrace> traces;  // grouped: all samples of an account are contiguous
    std::string source;

    [[nodiscard]] std::vector<std::string> account_ids() const;
    [[nodiscard]] std::vector<const RawTrace*> samples_of(const std::string& account_id) const;
};

// Shift/scale each coordinate dimension to zero mean and unit standard
// deviation (sample convention, divide by N-1). Requires >= 2 points.
NormalizedTrace znormalize(const RawTrace& trace);

// Same normalization applied directly to one series; exposed for tests and
// for recognizers that work on synthetic series.
std::vector<double> znormalize_series(const std::vector<double>& series, bool* degenerate = nullptr);

}  // namespace recpass

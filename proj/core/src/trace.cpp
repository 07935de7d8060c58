#include "recpass/trace.hpp"

#include <cmath>
#include <stdexcept>

namespace recpass {

std::vector<std::string> TraceSet::account_ids() const {
    std::vector<std::string> ids;
    for (const auto& tr : traces) {
        if (ids.empty() || ids.back() != tr.account_id) {
            bool seen = false;
            for (const auto& id : ids)
                if (id == tr.account_id) { seen = true; break; }
            if (!seen) ids.push_back(tr.account_id);
        }
    }
    return ids;
}

std::vector<const RawTrace*> TraceSet::samples_of(const std::string& account_id) const {
    std::vector<const RawTrace*> out;
    for (const auto& tr : traces)
        if (tr.account_id == account_id) out.push_back(&tr);
    return out;
}

std::vector<double> znormalize_series(const std::vector<double>& series, bool* degenerate) {
    if (series.size() < 2) throw std::invalid_argument("znormalize: series needs >= 2 samples");
    const double n = static_cast<double>(series.size());
    double mean = 0;
    for (double v : series) mean += v;
    mean /= n;
    double ss = 0;
    for (double v : series) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    std::vector<double> out(series.size());
    if (sd == 0.0) {
        if (degenerate) *degenerate = true;
        return out;  // all zeros; SAX bins them at the middle band
    }
    if (degenerate) *degenerate = false;
    for (std::size_t i = 0; i < series.size(); ++i) out[i] = (series[i] - mean) / sd;
    return out;
}

NormalizedTrace znormalize(const RawTrace& trace) {
    if (trace.points.size() < 2) throw std::invalid_argument("znormalize: trace needs >= 2 points");
    std::vector<double> xs, ys;
    xs.reserve(trace.points.size());
    ys.reserve(trace.points.size());
    for (const auto& p : trace.points) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    NormalizedTrace out;
    out.x_series = znormalize_series(xs, &out.degenerate_x);
    out.y_series = znormalize_series(ys, &out.degenerate_y);
    return out;
}

}  // namespace recpass

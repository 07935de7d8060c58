#include "recpass/trace_io.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace recpass {
namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return fields;
}

bool parse_double(const std::string& s, double& out) {
    const char* b = s.data();
    const char* e = s.data() + s.size();
    while (b < e && *b == ' ') ++b;
    auto r = std::from_chars(b, e, out);
    return r.ec == std::errc{} && r.ptr == e;
}

// Validates a finished sample; rejected traces are reported with the line of
// the offending row and skipped.
void finish_trace(RawTrace&& tr, std::size_t first_line, ParseResult& result) {
    if (tr.points.size() < 2) {
        result.issues.push_back({first_line, "trace '" + tr.account_id + "/" + tr.sample_id +
                                                 "' rejected: fewer than 2 points"});
        return;
    }
    for (std::size_t i = 1; i < tr.points.size(); ++i) {
        if (tr.points[i].t < tr.points[i - 1].t) {
            result.issues.push_back({first_line + i, "trace '" + tr.account_id + "/" + tr.sample_id +
                                                         "' rejected: timestamps decrease at row " +
                                                         std::to_string(first_line + i)});
            return;
        }
    }
    result.set.traces.push_back(std::move(tr));
}

ParseResult parse_delimited(std::istream& in) {
    ParseResult result;
    std::string line;
    std::size_t lineno = 0;
    // leading comment lines (provenance headers) are ignored
    do {
        if (!std::getline(in, line)) throw std::runtime_error("parse_trace_file: empty file");
        ++lineno;
        if (line.size() && line.back() == '\r') line.pop_back();
    } while (!line.empty() && line[0] == '#');
    if (line != "account_id,sample_id,t,x,y")
        throw std::runtime_error("parse_trace_file: bad header '" + line + "'");

    RawTrace current;
    std::size_t current_first_line = 0;
    bool have = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.size() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv(line);
        double t, x, y;
        if (fields.size() != 5 || !parse_double(fields[2], t) || !parse_double(fields[3], x) ||
            !parse_double(fields[4], y)) {
            result.issues.push_back({lineno, "malformed row"});
            continue;
        }
        if (!have || fields[0] != current.account_id || fields[1] != current.sample_id) {
            if (have) finish_trace(std::move(current), current_first_line, result);
            current = RawTrace{fields[0], fields[1], {}};
            current_first_line = lineno;
            have = true;
        }
        current.points.push_back({t, x, y});
    }
    if (have) finish_trace(std::move(current), current_first_line, result);
    return result;
}

ParseResult parse_records(std::istream& in) {
    ParseResult result;
    std::string line;
    std::size_t lineno = 0;
    bool any = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        any = true;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
            RawTrace tr;
            tr.account_id = rec.at("account_id").get<std::string>();
            tr.sample_id = rec.at("sample_id").get<std::string>();
            for (const auto& p : rec.at("points")) {
                if (!p.is_array() || p.size() != 3) throw std::runtime_error("point is not [t,x,y]");
                tr.points.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
            }
            finish_trace(std::move(tr), lineno, result);
        } catch (const std::exception& e) {
            result.issues.push_back({lineno, std::string("malformed record: ") + e.what()});
        }
    }
    if (!any) throw std::runtime_error("parse_trace_file: empty file");
    return result;
}

// Regroup so that each account's samples are contiguous, preserving first-seen
// account order and within-account sample order.
void group_by_account(TraceSet& set) {
    std::vector<RawTrace> grouped;
    grouped.reserve(set.traces.size());
    std::vector<std::string> order;
    std::map<std::string, std::vector<RawTrace>> buckets;
    for (auto& tr : set.traces) {
        if (!buckets.count(tr.account_id)) order.push_back(tr.account_id);
        buckets[tr.account_id].push_back(std::move(tr));
    }
    for (const auto& id : order)
        for (auto& tr : buckets[id]) grouped.push_back(std::move(tr));
    set.traces = std::move(grouped);
}

std::string format_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ParseResult parse_trace_file(std::istream& in, TraceFormat format) {
    ParseResult result =
        format == TraceFormat::delimited_text ? parse_delimited(in) : parse_records(in);
    group_by_account(result.set);
    return result;
}

ParseResult parse_trace_file(const std::string& path, TraceFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    auto result = parse_trace_file(in, format);
    result.set.source = path;
    return result;
}

TraceFormat sniff_format(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t i = 0;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size() || line[i] == '#') continue;
        return line[i] == '{' ? TraceFormat::record_stream : TraceFormat::delimited_text;
    }
    throw std::runtime_error("cannot sniff format of empty file " + path);
}

void write_trace_file(std::ostream& out, const TraceSet& set, TraceFormat format) {
    if (format == TraceFormat::delimited_text) {
        out << "account_id,sample_id,t,x,y\n";
        for (const auto& tr : set.traces)
            for (const auto& p : tr.points)
                out << tr.account_id << ',' << tr.sample_id << ',' << format_num(p.t) << ','
                    << format_num(p.x) << ',' << format_num(p.y) << '\n';
    } else {
        for (const auto& tr : set.traces) {
            nlohmann::json rec;
            rec["account_id"] = tr.account_id;
            rec["sample_id"] = tr.sample_id;
            auto& pts = rec["points"] = nlohmann::json::array();
            for (const auto& p : tr.points) pts.push_back({p.t, p.x, p.y});
            out << rec.dump() << '\n';
        }
    }
}

void write_trace_file(const std::string& path, const TraceSet& set, TraceFormat format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_trace_file(out, set, format);
}

}  // namespace recpass

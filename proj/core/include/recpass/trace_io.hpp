#pragma once
// Dataset ingestion and serialization. Two interchangeable on-disk forms:
//   delimited-text: CSV with header `account_id,sample_id,t,x,y`, one point
//     per row, rows of one sample contiguous;
//   record-stream: one JSON object per line,
//     {"account_id":..., "sample_id":..., "points":[[t,x,y],...]}.

#include <iosfwd>
#include <string>
#include <vector>

#include "recpass/trace.hpp"

namespace recpass {

enum class TraceFormat { delimited_text, record_stream };

struct ParseIssue {
    std::size_t line;  // 1-based
    std::string message;
};

struct ParseResult {
    TraceSet set;
    std::vector<ParseIssue> issues;  // rejected traces / malformed rows, file kept going
};

ParseResult parse_trace_file(std::istream& in, TraceFormat format);
ParseResult parse_trace_file(const std::string& path, TraceFormat format);

// Guesses the format from the first non-empty byte ('{' -> record-stream).
TraceFormat sniff_format(const std::string& path);

void write_trace_file(std::ostream& out, const TraceSet& set, TraceFormat format);
void write_trace_file(const std::string& path, const TraceSet& set, TraceFormat format);

}  // namespace recpass

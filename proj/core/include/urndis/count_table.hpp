#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "urndis/sample.hpp"

namespace urndis {

// OTU-by-sample count matrix parsed from tab-delimited text.
// Rows are OTUs, columns are samples; column c becomes a Sample whose colors
// are the row indices with nonzero counts.
struct CountTable {
  std::vector<std::string> sample_ids;
  std::vector<std::string> otu_ids;
  std::vector<std::vector<std::uint64_t>> counts;  // counts[row][col]

  std::uint64_t column_sum(std::size_t col) const;
  Sample column_sample(std::size_t col) const;
  std::optional<std::size_t> find_sample(std::string_view id) const;
};

// Format: optional '#' comment lines, then a header line (id cell followed by
// sample ids), then one row per OTU: id cell followed by integer counts.
// Tab-delimited, UTF-8, LF or CRLF. Throws ParseError (with the offending
// line) on ragged rows, non-integer or negative counts, duplicate sample ids,
// or an all-zero sample column.
CountTable parse_count_table(std::istream& in);

// Exact inverse of parse_count_table for round-tripping.
void write_count_table(const CountTable& t, std::ostream& out);

// Keeps samples whose total count is >= min_n, preserving order.
CountTable filter_min_depth(const CountTable& t, std::uint64_t min_n);

}  // namespace urndis

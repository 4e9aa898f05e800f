#include "urndis/count_table.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <unordered_set>

namespace urndis {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::uint64_t parse_count(std::string_view field, std::size_t lineno,
                          const std::string& otu, std::size_t col) {
  std::uint64_t value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty()) {
    throw ParseError("count for OTU '" + otu + "', sample column " +
                         std::to_string(col + 1) + " is not a nonnegative integer: '" +
                         std::string(field) + "'",
                     lineno);
  }
  return value;
}

}  // namespace

std::uint64_t CountTable::column_sum(std::size_t col) const {
  std::uint64_t sum = 0;
  for (const auto& row : counts) sum += row[col];
  return sum;
}

Sample CountTable::column_sample(std::size_t col) const {
  std::vector<std::pair<ColorId, std::uint64_t>> c;
  for (std::size_t row = 0; row < counts.size(); ++row)
    if (counts[row][col] > 0) c.emplace_back(static_cast<ColorId>(row), counts[row][col]);
  return Sample(std::move(c));
}

std::optional<std::size_t> CountTable::find_sample(std::string_view id) const {
  for (std::size_t i = 0; i < sample_ids.size(); ++i)
    if (sample_ids[i] == id) return i;
  return std::nullopt;
}

CountTable parse_count_table(std::istream& in) {
  CountTable t;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!have_header) {
      if (line.empty() || line.front() == '#') continue;  // leading comments
      const auto fields = split_tabs(line);
      if (fields.size() < 2)
        throw ParseError("header needs an id cell and at least one sample id", lineno);
      std::unordered_set<std::string_view> seen;
      for (std::size_t i = 1; i < fields.size(); ++i) {
        if (fields[i].empty()) throw ParseError("empty sample id in header", lineno);
        if (!seen.insert(fields[i]).second)
          throw ParseError("duplicate sample id '" + std::string(fields[i]) + "'", lineno);
        t.sample_ids.emplace_back(fields[i]);
      }
      have_header = true;
      continue;
    }
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != t.sample_ids.size() + 1)
      throw ParseError("row has " + std::to_string(fields.size()) + " fields, expected " +
                           std::to_string(t.sample_ids.size() + 1),
                       lineno);
    t.otu_ids.emplace_back(fields[0]);
    std::vector<std::uint64_t> row(t.sample_ids.size());
    for (std::size_t c = 0; c < row.size(); ++c)
      row[c] = parse_count(fields[c + 1], lineno, t.otu_ids.back(), c);
    t.counts.push_back(std::move(row));
  }

  if (!have_header) throw ParseError("no header line found", 0);
  if (t.counts.empty()) throw ParseError("no data rows", 0);
  for (std::size_t c = 0; c < t.sample_ids.size(); ++c)
    if (t.column_sum(c) == 0)
      throw ParseError("sample '" + t.sample_ids[c] + "' has zero total count", 0);
  return t;
}

void write_count_table(const CountTable& t, std::ostream& out) {
  out << "otu";
  for (const auto& id : t.sample_ids) out << '\t' << id;
  out << '\n';
  for (std::size_t row = 0; row < t.counts.size(); ++row) {
    out << t.otu_ids[row];
    for (std::uint64_t v : t.counts[row]) out << '\t' << v;
    out << '\n';
  }
}

CountTable filter_min_depth(const CountTable& t, std::uint64_t min_n) {
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < t.sample_ids.size(); ++c)
    if (t.column_sum(c) >= min_n) keep.push_back(c);

  CountTable out;
  out.otu_ids = t.otu_ids;
  for (std::size_t c : keep) out.sample_ids.push_back(t.sample_ids[c]);
  out.counts.reserve(t.counts.size());
  for (const auto& row : t.counts) {
    std::vector<std::uint64_t> r(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) r[i] = row[keep[i]];
    out.counts.push_back(std::move(r));
  }
  return out;
}

}  // namespace urndis

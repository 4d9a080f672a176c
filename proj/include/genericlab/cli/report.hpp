#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "genericlab/rational.hpp"

namespace genericlab::cli {

/// A cell: text, integer, flag, exact rational or a float.
using Value = std::variant<std::string, std::int64_t, bool, Rational, double>;

struct Row {
  std::vector<std::pair<std::string, Value>> cells;
  bool pass = true;

  Row& add(std::string key, Value v) {
    cells.emplace_back(std::move(key), std::move(v));
    return *this;
  }
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<Row> rows;

  std::size_t passed() const;
  std::size_t failed() const { return rows.size() - passed(); }
  bool all_pass() const { return failed() == 0; }
};

enum class Format { jsonl, csv, table };

Format parse_format(const std::string& name);

/// Rationals render as "num/den" next to a 6-place decimal; floats with 12
/// significant digits. Output depends only on the report contents.
std::string render(const Report& r, Format format);
std::string render_jsonl(const Report& r);
std::string render_csv(const Report& r);
std::string render_table(const Report& r);

}  // namespace genericlab::cli

#include "genericlab/cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "genericlab/cli/config.hpp"

namespace genericlab::cli {

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.pass; }));
}

Format parse_format(const std::string& name) {
  if (name == "jsonl") return Format::jsonl;
  if (name == "csv") return Format::csv;
  if (name == "table") return Format::table;
  throw ConfigError("unknown format '" + name + "' (expected jsonl, csv or table)");
}

namespace {

using Json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json to_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return Json{{"exact", to_fraction_string(x)}, {"decimal", to_decimal_string(x)}};
        } else if constexpr (std::is_same_v<T, double>) {
          return Json(std::stod(format_double(x)));
        } else {
          return Json(x);
        }
      },
      v);
}

// Flat text cells; rationals expand to an exact and a decimal column.
std::vector<std::pair<std::string, std::string>> flatten(const Row& row) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [key, v] : row.cells) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Rational>) {
            out.emplace_back(key, to_fraction_string(x));
            out.emplace_back(key + "_decimal", to_decimal_string(x));
          } else if constexpr (std::is_same_v<T, double>) {
            out.emplace_back(key, format_double(x));
          } else if constexpr (std::is_same_v<T, bool>) {
            out.emplace_back(key, x ? "true" : "false");
          } else if constexpr (std::is_same_v<T, std::int64_t>) {
            out.emplace_back(key, std::to_string(x));
          } else {
            out.emplace_back(key, x);
          }
        },
        v);
  }
  out.emplace_back("pass", row.pass ? "true" : "false");
  return out;
}

std::vector<std::string> columns(const std::vector<std::vector<std::pair<std::string, std::string>>>& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows) {
    for (const auto& [key, text] : row) {
      if (key != "pass" && std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
    }
  }
  cols.push_back("pass");
  return cols;
}

std::string lookup(const std::vector<std::pair<std::string, std::string>>& row, const std::string& key) {
  for (const auto& [k, text] : row) {
    if (k == key) return text;
  }
  return {};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_jsonl(const Report& r) {
  std::ostringstream out;
  Json config = Json::object();
  for (const auto& [k, v] : r.config) config[k] = v;
  out << Json{{"type", "config"}, {"command", r.command}, {"seed", r.seed}, {"config", config}}.dump() << '\n';
  for (const auto& row : r.rows) {
    Json j{{"type", "row"}};
    for (const auto& [key, v] : row.cells) j[key] = to_json(v);
    j["pass"] = row.pass;
    out << j.dump() << '\n';
  }
  out << Json{{"type", "summary"}, {"rows", r.rows.size()}, {"passed", r.passed()}, {"failed", r.failed()}}.dump()
      << '\n';
  return out.str();
}

std::string render_csv(const Report& r) {
  std::vector<std::vector<std::pair<std::string, std::string>>> flat;
  for (const auto& row : r.rows) flat.push_back(flatten(row));
  const auto cols = columns(flat);
  std::ostringstream out;
  out << "# " << r.command << " seed=" << r.seed << '\n';
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_escape(cols[i]);
  out << '\n';
  for (const auto& row : flat) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_escape(lookup(row, cols[i]));
    out << '\n';
  }
  return out.str();
}

std::string render_table(const Report& r) {
  std::vector<std::vector<std::pair<std::string, std::string>>> flat;
  for (const auto& row : r.rows) flat.push_back(flatten(row));
  const auto cols = columns(flat);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    width[i] = cols[i].size();
    for (const auto& row : flat) width[i] = std::max(width[i], lookup(row, cols[i]).size());
  }
  auto line = [&](auto cell) {
    std::string s;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      std::string text = cell(i);
      if (i) s += "  ";
      s += text;
      if (i + 1 < cols.size()) s += std::string(width[i] - text.size(), ' ');
    }
    return s + '\n';
  };
  std::ostringstream out;
  out << r.command << " (seed " << r.seed << ")\n";
  out << line([&](std::size_t i) { return cols[i]; });
  for (const auto& row : flat) out << line([&](std::size_t i) { return lookup(row, cols[i]); });
  out << r.passed() << "/" << r.rows.size() << " rows pass\n";
  return out.str();
}

std::string render(const Report& r, Format format) {
  switch (format) {
    case Format::jsonl:
      return render_jsonl(r);
    case Format::csv:
      return render_csv(r);
    case Format::table:
      return render_table(r);
  }
  return {};
}

}  // namespace genericlab::cli

#include "genericlab/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace genericlab::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::size_t parse_count(const std::string& text) {
  std::size_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) throw ConfigError("'" + text + "' is not a count");
  return value;
}

std::vector<std::size_t> parse_range(const std::string& text) {
  std::vector<std::size_t> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const std::size_t lo = parse_count(trim(text.substr(0, dots)));
    const std::size_t hi = parse_count(trim(text.substr(dots + 2)));
    if (lo > hi) throw ConfigError("empty range '" + text + "'");
    for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_count(trim(item)));
  if (out.empty()) throw ConfigError("empty list '" + text + "'");
  return out;
}

ExperimentConfig::ExperimentConfig(std::string command, std::vector<KeySpec> keys)
    : command_(std::move(command)), keys_(std::move(keys)) {
  for (const auto& k : keys_) values_[k.name] = k.default_value;
}

const KeySpec& ExperimentConfig::spec(const std::string& key) const {
  auto it = std::find_if(keys_.begin(), keys_.end(), [&](const KeySpec& k) { return k.name == key; });
  if (it == keys_.end()) throw ConfigError("unknown key '" + key + "' for " + command_);
  return *it;
}

void ExperimentConfig::validate(const KeySpec& spec, const std::string& value) const {
  try {
    switch (spec.kind) {
      case KeyKind::count:
        parse_count(value);
        break;
      case KeyKind::rational:
        parse_rational(value);
        break;
      case KeyKind::tolerance:
        if (sgn(parse_rational(value)) <= 0) throw ConfigError("must be positive");
        break;
      case KeyKind::range:
        parse_range(value);
        break;
      case KeyKind::text:
        break;
    }
  } catch (const std::exception& e) {
    throw ConfigError("bad value '" + value + "' for " + spec.name + ": " + e.what());
  }
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  const KeySpec& k = spec(key);
  validate(k, value);
  values_[key] = value;
}

void ExperimentConfig::load_text(const std::string& text, const std::string& origin) {
  std::stringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(number) + ": expected key=value");
    }
    set(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
  }
}

void ExperimentConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  load_text(buffer.str(), path);
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::effective() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& k : keys_) out.emplace_back(k.name, values_.at(k.name));
  return out;
}

const std::string& ExperimentConfig::text(const std::string& key) const {
  spec(key);
  return values_.at(key);
}

std::size_t ExperimentConfig::count(const std::string& key) const { return parse_count(text(key)); }

Rational ExperimentConfig::rational(const std::string& key) const { return parse_rational(text(key)); }

std::vector<std::size_t> ExperimentConfig::range(const std::string& key) const { return parse_range(text(key)); }

}  // namespace genericlab::cli

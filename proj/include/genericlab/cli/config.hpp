#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "genericlab/rational.hpp"

namespace genericlab::cli {

/// Any problem with the configuration; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class KeyKind { count, rational, tolerance, range, text };

struct KeySpec {
  std::string name;
  KeyKind kind;
  std::string default_value;
  std::string help;
};

/// Flat key=value settings for one subcommand. Lines starting with '#' and
/// blank lines are ignored; unknown keys and malformed values are rejected.
class ExperimentConfig {
 public:
  ExperimentConfig(std::string command, std::vector<KeySpec> keys);

  void set(const std::string& key, const std::string& value);
  void load_text(const std::string& text, const std::string& origin = "config");
  void load_file(const std::string& path);

  const std::string& command() const { return command_; }
  const std::vector<KeySpec>& keys() const { return keys_; }
  /// Every key with its effective value, in declaration order.
  std::vector<std::pair<std::string, std::string>> effective() const;

  const std::string& text(const std::string& key) const;
  std::size_t count(const std::string& key) const;
  Rational rational(const std::string& key) const;
  /// "a..b" or "a,b,c" or a single count.
  std::vector<std::size_t> range(const std::string& key) const;

 private:
  const KeySpec& spec(const std::string& key) const;
  void validate(const KeySpec& spec, const std::string& value) const;

  std::string command_;
  std::vector<KeySpec> keys_;
  std::map<std::string, std::string> values_;
};

std::size_t parse_count(const std::string& text);
std::vector<std::size_t> parse_range(const std::string& text);

}  // namespace genericlab::cli

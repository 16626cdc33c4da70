#pragma once

// Run-time defaults for the command-line tool. Precedence: command-line
// flags over the config file over the built-ins below. The file is plain
// `key = value` lines; '#' starts a comment.
//
//   hmax = 8
//   jwindow = -6:6
//   catalog_bound = 8
//   strict_guards = false
//   max_length = 7
//   max_flow = 3

#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "ghostkit/labels.hpp"

namespace ghostkit {

struct Config {
  Rational hmax{8};
  Rational jmin{-6};
  Rational jmax{6};
  int catalog_bound = 8;
  bool strict_guards = false;
  int max_length = 7;
  int max_flow = 3;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline int parse_config_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    int x = std::stoi(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw ValidationError("config key '" + key + "' needs an integer, got '" + v + "'");
}

}  // namespace detail

/// Parses "a:b" into a ghost window with a <= b.
inline std::pair<Rational, Rational> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ValidationError("window '" + text + "' is not of the form a:b");
  Rational a = parse_rational(detail::trim(text.substr(0, colon)));
  Rational b = parse_rational(detail::trim(text.substr(colon + 1)));
  if (b < a) throw ValidationError("window '" + text + "' is empty");
  return {a, b};
}

inline void apply_config_entry(Config& c, const std::string& key, const std::string& value) {
  if (key == "hmax") {
    c.hmax = parse_rational(value);
  } else if (key == "jwindow") {
    std::tie(c.jmin, c.jmax) = parse_window(value);
  } else if (key == "catalog_bound") {
    c.catalog_bound = detail::parse_config_int(key, value);
  } else if (key == "strict_guards") {
    if (value == "true" || value == "1") c.strict_guards = true;
    else if (value == "false" || value == "0") c.strict_guards = false;
    else throw ValidationError("config key 'strict_guards' needs true or false");
  } else if (key == "max_length") {
    c.max_length = detail::parse_config_int(key, value);
  } else if (key == "max_flow") {
    c.max_flow = detail::parse_config_int(key, value);
  } else {
    throw ValidationError("unknown config key '" + key + "'");
  }
}

inline Config parse_config(std::istream& in, Config base = {}) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ValidationError("config line " + std::to_string(lineno) + " has no '='");
    apply_config_entry(base, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
  }
  return base;
}

inline Config load_config_file(const std::string& path, Config base = {}) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file '" + path + "'");
  return parse_config(in, std::move(base));
}

/// Built-ins, then the file named by `path` or else by GHOSTKIT_CONFIG.
inline Config load_config(const std::optional<std::string>& path = std::nullopt) {
  if (path) return load_config_file(*path);
  if (const char* env = std::getenv("GHOSTKIT_CONFIG"); env && *env) return load_config_file(env);
  return {};
}

}  // namespace ghostkit

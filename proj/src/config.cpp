// Copyright 2026 The qaelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qaelab/config.hpp"

#include <charconv>
#include <istream>
#include <set>
#include <string_view>

namespace qaelab {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text, std::size_t line, std::string_view key) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw ConfigError(line, "invalid value '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

std::vector<std::uint64_t> parse_list(std::string_view text, std::size_t line, std::string_view key) {
  std::vector<std::uint64_t> values;
  while (true) {
    const auto comma = text.find(',');
    values.push_back(parse_number<std::uint64_t>(trim(text.substr(0, comma)), line, key));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

}  // namespace

ConfigError::ConfigError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

ExperimentConfig parse_experiment_config(std::istream& in) {
  ExperimentConfig config;
  std::set<std::string, std::less<>> seen;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line, "expected 'key = value'");
    std::string key(trim(text.substr(0, eq)));
    const std::string_view value = trim(text.substr(eq + 1));
    if (key == "reps") key = "repetitions";
    if (value.empty()) throw ConfigError(line, "missing value for " + key);
    if (!seen.insert(key).second) throw ConfigError(line, "duplicate key " + key);

    try {
      if (key == "algorithm") {
        config.algorithm = parse_algorithm(value);
      } else if (key == "qubits") {
        config.domain_qubits = parse_number<int>(value, line, key);
      } else if (key == "a") {
        config.a_true = parse_number<double>(value, line, key);
      } else if (key == "m") {
        config.m = parse_number<std::uint64_t>(value, line, key);
      } else if (key == "schedule") {
        config.schedule = parse_schedule_kind(value);
      } else if (key == "epsilon") {
        config.epsilon = parse_number<double>(value, line, key);
      } else if (key == "alpha") {
        config.alpha = parse_number<double>(value, line, key);
      } else if (key == "ratio") {
        config.ratio = parse_number<std::uint64_t>(value, line, key);
      } else if (key == "shots") {
        config.shots_list = parse_list(value, line, key);
      } else if (key == "repetitions") {
        config.repetitions = parse_number<std::uint64_t>(value, line, key);
      } else if (key == "seed") {
        config.base_seed = parse_number<std::uint64_t>(value, line, key);
      } else if (key == "backend") {
        config.backend = parse_backend(value);
      } else if (key == "jobs") {
        config.jobs = parse_number<unsigned>(value, line, key);
      } else {
        throw ConfigError(line, "unknown key " + key);
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ConfigError(line, e.what());
    }
  }
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(line, e.what());
  }
  return config;
}

}  // namespace qaelab

// Copyright 2026 The hypcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypcap/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hypcap {
namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

KvConfig KvConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open config file: " + path);
  return parse_stream(in, path);
}

KvConfig KvConfig::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse_stream(in, "<string>");
}

KvConfig KvConfig::parse_stream(std::istream& in, const std::string& origin) {
  KvConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw config_error(origin + ":" + std::to_string(lineno) +
                         ": expected key=value, got: " + t);
    }
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty()) {
      throw config_error(origin + ":" + std::to_string(lineno) + ": empty key");
    }
    cfg.values_[key] = value;
  }
  return cfg;
}

bool KvConfig::has(const std::string& key) const {
  return values_.count(key) != 0;
}

std::string KvConfig::get_str(const std::string& key,
                              const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

std::string KvConfig::require_str(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw config_error("missing config key: " + key);
  return it->second;
}

namespace {

int to_int(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  int out = 0;
  try {
    out = std::stoi(v, &pos);
  } catch (const std::exception&) {
    throw config_error("config key " + key + ": not an integer: " + v);
  }
  if (pos != v.size()) {
    throw config_error("config key " + key + ": not an integer: " + v);
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double out = 0;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw config_error("config key " + key + ": not a number: " + v);
  }
  if (pos != v.size()) {
    throw config_error("config key " + key + ": not a number: " + v);
  }
  return out;
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  unsigned long long out = 0;
  try {
    out = std::stoull(v, &pos);
  } catch (const std::exception&) {
    throw config_error("config key " + key + ": not an unsigned integer: " + v);
  }
  if (pos != v.size()) {
    throw config_error("config key " + key + ": not an unsigned integer: " + v);
  }
  return static_cast<std::uint64_t>(out);
}

}  // namespace

int KvConfig::get_int(const std::string& key, int fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : to_int(key, it->second);
}

int KvConfig::require_int(const std::string& key) const {
  return to_int(key, require_str(key));
}

double KvConfig::get_double(const std::string& key, double fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : to_double(key, it->second);
}

double KvConfig::require_double(const std::string& key) const {
  return to_double(key, require_str(key));
}

std::uint64_t KvConfig::get_u64(const std::string& key,
                                std::uint64_t fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : to_u64(key, it->second);
}

void KvConfig::set(const std::string& key, const std::string& value) {
  values_[key] = value;
}

}  // namespace hypcap

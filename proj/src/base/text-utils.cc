// src/base/text-utils.cc

// Copyright 2026  The uen authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "uen/base/text-utils.h"

#include <fstream>

#include "uen/base/errors.h"

namespace uen {

std::string Trim(std::string_view s) {
  const char *ws = " \t\r\n";
  const size_t begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return "";
  const size_t end = s.find_last_not_of(ws);
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> Split(std::string_view s, char delim) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::pair<std::string, std::string> SplitKeyValue(std::string_view s) {
  const size_t eq = s.find('=');
  if (eq == std::string_view::npos)
    UEN_THROW(ConfigError, "expected key=value, got '", s, "'");
  std::string key = Trim(s.substr(0, eq));
  if (key.empty()) UEN_THROW(ConfigError, "empty key in '", s, "'");
  return {key, Trim(s.substr(eq + 1))};
}

std::vector<std::pair<std::string, std::string>> ReadKeyValueFile(
    const std::string &path) {
  std::ifstream is(path);
  if (!is) UEN_THROW(ConfigError, "cannot open config file ", path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    line_no++;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (Trim(line).empty()) continue;
    try {
      out.push_back(SplitKeyValue(line));
    } catch (const ConfigError &e) {
      UEN_THROW(ConfigError, path, ":", line_no, ": ", e.what());
    }
  }
  return out;
}

void WriteKeyValueLines(
    const std::vector<std::pair<std::string, std::string>> &entries,
    const std::string &path) {
  std::ofstream os(path);
  if (!os) UEN_THROW(InputError, "cannot write ", path);
  for (const auto &[key, value] : entries) os << key << " = " << value << "\n";
  if (!os) UEN_THROW(InputError, "error writing ", path);
}

}  // namespace uen

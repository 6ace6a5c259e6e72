// uen/base/text-utils.h

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

#ifndef UEN_BASE_TEXT_UTILS_H_
#define UEN_BASE_TEXT_UTILS_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace uen {

std::string Trim(std::string_view s);
std::vector<std::string> Split(std::string_view s, char delim);

// Splits "key=value" at the first '='; keys and values are trimmed.  Throws
// ConfigError if there is no '=' or the key is empty.
std::pair<std::string, std::string> SplitKeyValue(std::string_view s);

// Reads "key = value" lines in file order.  '#' starts a comment.
std::vector<std::pair<std::string, std::string>> ReadKeyValueFile(
    const std::string &path);

template <typename Map>
void WriteKeyValueFile(const Map &entries, const std::string &path);

void WriteKeyValueLines(
    const std::vector<std::pair<std::string, std::string>> &entries,
    const std::string &path);

template <typename Map>
void WriteKeyValueFile(const Map &entries, const std::string &path) {
  WriteKeyValueLines({entries.begin(), entries.end()}, path);
}

}  // namespace uen

#endif  // UEN_BASE_TEXT_UTILS_H_

// uen/base/binary-io.h

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

#ifndef UEN_BASE_BINARY_IO_H_
#define UEN_BASE_BINARY_IO_H_

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>
#include <type_traits>

#include "uen/base/errors.h"

namespace uen {

static_assert(std::endian::native == std::endian::little,
              "binary containers are written little-endian; "
              "big-endian hosts are not supported");

template <typename T>
void WriteLe(std::ostream& os, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  os.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T ReadLe(std::istream& is) {
  static_assert(std::is_trivially_copyable_v<T>);
  T value;
  is.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!is) UEN_THROW(FormatError, "unexpected end of stream");
  return value;
}

inline void ReadExact(std::istream& is, void* dst, std::size_t bytes) {
  is.read(static_cast<char*>(dst), static_cast<std::streamsize>(bytes));
  if (static_cast<std::size_t>(is.gcount()) != bytes)
    UEN_THROW(FormatError, "unexpected end of stream");
}

// Reads exactly magic.size() bytes and compares them with `magic`.
inline void ExpectMagic(std::istream& is, const std::string& magic) {
  std::string got(magic.size(), '\0');
  is.read(got.data(), static_cast<std::streamsize>(got.size()));
  if (!is || got != magic)
    UEN_THROW(FormatError, "bad header magic, expected ", magic);
}

}  // namespace uen

#endif  // UEN_BASE_BINARY_IO_H_

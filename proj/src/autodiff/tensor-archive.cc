// src/autodiff/tensor-archive.cc

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

#include "uen/autodiff/tensor-archive.h"

#include <cstring>
#include <fstream>

#include "uen/base/binary-io.h"
#include "uen/base/errors.h"

namespace uen {

namespace {

const char kMagic[] = "UENCKPT1";
const char kTrailer[] = "UENCKEND";

template <typename Real>
constexpr DType DTypeOf();
template <>
constexpr DType DTypeOf<float>() { return DType::kFloat32; }
template <>
constexpr DType DTypeOf<double>() { return DType::kFloat64; }

size_t ElementBytes(DType dtype) {
  switch (dtype) {
    case DType::kFloat32: return 4;
    case DType::kFloat64: return 8;
    case DType::kInt64: return 8;
  }
  UEN_THROW(CheckpointError, "unknown dtype tag ", static_cast<int>(dtype));
}

}  // namespace

template <typename Real>
void TensorArchive::Put(const std::string &name, const Shape &shape,
                        const Eigen::Array<Real, Eigen::Dynamic, 1> &values) {
  if (NumElements(shape) != values.size())
    UEN_THROW(DimensionError, "archive entry ", name, ": shape ",
              ShapeToString(shape), " does not match ", values.size(),
              " values");
  Entry e;
  e.dtype = DTypeOf<Real>();
  e.shape = shape;
  e.payload.resize(values.size() * sizeof(Real));
  std::memcpy(e.payload.data(), values.data(), e.payload.size());
  entries_[name] = std::move(e);
}

void TensorArchive::PutInt(const std::string &name, int64_t value) {
  Entry e;
  e.dtype = DType::kInt64;
  e.payload.resize(sizeof(int64_t));
  std::memcpy(e.payload.data(), &value, sizeof(value));
  entries_[name] = std::move(e);
}

bool TensorArchive::Contains(const std::string &name) const {
  return entries_.count(name) != 0;
}

const TensorArchive::Entry &TensorArchive::Get(const std::string &name) const {
  auto it = entries_.find(name);
  if (it == entries_.end())
    UEN_THROW(CheckpointError, "archive has no entry named ", name);
  return it->second;
}

template <typename Real>
Eigen::Array<Real, Eigen::Dynamic, 1> TensorArchive::GetArray(
    const std::string &name, const Shape &shape) const {
  const Entry &e = Get(name);
  if (e.dtype != DTypeOf<Real>())
    UEN_THROW(CheckpointError, "entry ", name, " has unexpected dtype");
  if (e.shape != shape)
    UEN_THROW(CheckpointError, "entry ", name, " has shape ",
              ShapeToString(e.shape), ", expected ", ShapeToString(shape));
  Eigen::Array<Real, Eigen::Dynamic, 1> values(NumElements(shape));
  std::memcpy(values.data(), e.payload.data(), e.payload.size());
  return values;
}

int64_t TensorArchive::GetInt(const std::string &name) const {
  const Entry &e = Get(name);
  if (e.dtype != DType::kInt64 || !e.shape.empty())
    UEN_THROW(CheckpointError, "entry ", name, " is not an int64 scalar");
  int64_t value;
  std::memcpy(&value, e.payload.data(), sizeof(value));
  return value;
}

void TensorArchive::Write(std::ostream &os) const {
  os.write(kMagic, 8);
  WriteLe<uint64_t>(os, entries_.size());
  for (const auto &[name, e] : entries_) {
    WriteLe<uint32_t>(os, static_cast<uint32_t>(name.size()));
    os.write(name.data(), static_cast<std::streamsize>(name.size()));
    WriteLe<uint8_t>(os, static_cast<uint8_t>(e.dtype));
    WriteLe<uint32_t>(os, static_cast<uint32_t>(e.shape.size()));
    for (int64_t d : e.shape) WriteLe<int64_t>(os, d);
    WriteLe<uint64_t>(os, e.payload.size());
    os.write(e.payload.data(), static_cast<std::streamsize>(e.payload.size()));
  }
  os.write(kTrailer, 8);
  if (!os) UEN_THROW(CheckpointError, "failed writing archive");
}

TensorArchive TensorArchive::Read(std::istream &is) {
  TensorArchive archive;
  try {
    ExpectMagic(is, kMagic);
    const uint64_t count = ReadLe<uint64_t>(is);
    for (uint64_t i = 0; i < count; i++) {
      const uint32_t name_len = ReadLe<uint32_t>(is);
      if (name_len > (1u << 16)) UEN_THROW(FormatError, "implausible name");
      std::string name(name_len, '\0');
      ReadExact(is, name.data(), name_len);
      Entry e;
      e.dtype = static_cast<DType>(ReadLe<uint8_t>(is));
      const uint32_t rank = ReadLe<uint32_t>(is);
      if (rank > 8) UEN_THROW(FormatError, "implausible rank ", rank);
      e.shape.resize(rank);
      for (auto &d : e.shape) d = ReadLe<int64_t>(is);
      const uint64_t bytes = ReadLe<uint64_t>(is);
      if (bytes != NumElements(e.shape) * ElementBytes(e.dtype))
        UEN_THROW(FormatError, "entry ", name, " payload size mismatch");
      e.payload.resize(bytes);
      ReadExact(is, e.payload.data(), bytes);
      if (!archive.entries_.emplace(std::move(name), std::move(e)).second)
        UEN_THROW(FormatError, "duplicate entry");
    }
    ExpectMagic(is, kTrailer);
    if (is.peek() != std::char_traits<char>::eof())
      UEN_THROW(FormatError, "trailing bytes after archive");
  } catch (const FormatError &e) {
    UEN_THROW(CheckpointError, "corrupt checkpoint: ", e.what());
  } catch (const DimensionError &e) {
    UEN_THROW(CheckpointError, "corrupt checkpoint: ", e.what());
  }
  return archive;
}

void TensorArchive::WriteFile(const std::string &path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) UEN_THROW(CheckpointError, "cannot open ", path, " for writing");
  Write(os);
}

TensorArchive TensorArchive::ReadFile(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) UEN_THROW(CheckpointError, "cannot open ", path);
  return Read(is);
}

template void TensorArchive::Put<float>(const std::string &, const Shape &,
                                        const Eigen::ArrayXf &);
template void TensorArchive::Put<double>(const std::string &, const Shape &,
                                         const Eigen::ArrayXd &);
template Eigen::ArrayXf TensorArchive::GetArray<float>(const std::string &,
                                                       const Shape &) const;
template Eigen::ArrayXd TensorArchive::GetArray<double>(const std::string &,
                                                        const Shape &) const;

}  // namespace uen

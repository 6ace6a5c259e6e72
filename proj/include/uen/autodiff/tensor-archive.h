// uen/autodiff/tensor-archive.h

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

#ifndef UEN_AUTODIFF_TENSOR_ARCHIVE_H_
#define UEN_AUTODIFF_TENSOR_ARCHIVE_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "uen/autodiff/tensor.h"

namespace uen {

enum class DType : uint8_t { kFloat32 = 0, kFloat64 = 1, kInt64 = 2 };

/**
   Flat name -> (dtype, shape, little-endian payload) container.  On disk:

     "UENCKPT1"  uint64 entry_count
     per entry:  uint32 name_len, name bytes, uint8 dtype, uint32 rank,
                 int64 dims[rank], uint64 payload_bytes, payload
     "UENCKEND"

   Entries are written in name order so equal archives serialize to equal
   bytes.
*/
class TensorArchive {
 public:
  struct Entry {
    DType dtype = DType::kFloat32;
    Shape shape;
    std::vector<char> payload;
  };

  template <typename Real>
  void Put(const std::string &name, const Shape &shape,
           const Eigen::Array<Real, Eigen::Dynamic, 1> &values);
  template <typename Real>
  void Put(const std::string &name, const Tensor<Real> &tensor) {
    Put<Real>(name, tensor.shape(), tensor.data());
  }
  void PutInt(const std::string &name, int64_t value);

  bool Contains(const std::string &name) const;
  const Entry &Get(const std::string &name) const;

  // Copies the named entry; throws CheckpointError on missing name or on a
  // dtype/shape mismatch.
  template <typename Real>
  Eigen::Array<Real, Eigen::Dynamic, 1> GetArray(const std::string &name,
                                                 const Shape &shape) const;
  int64_t GetInt(const std::string &name) const;

  const std::map<std::string, Entry> &entries() const { return entries_; }

  void Write(std::ostream &os) const;
  // Throws CheckpointError on bad magic, truncation or trailing bytes.
  static TensorArchive Read(std::istream &is);

  void WriteFile(const std::string &path) const;
  static TensorArchive ReadFile(const std::string &path);

 private:
  std::map<std::string, Entry> entries_;
};

}  // namespace uen

#endif  // UEN_AUTODIFF_TENSOR_ARCHIVE_H_

// src/dsp/feature-io.cc

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

#include "uen/dsp/feature-io.h"

#include <fstream>
#include <vector>

#include "uen/base/binary-io.h"
#include "uen/base/errors.h"

namespace uen {

namespace {

const char kFeatureMagic[] = "UENFEAT1";

using RowMajorXf =
    Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace

void WriteFeatures(const FeatureMatrix &feat, std::ostream &os) {
  os.write(kFeatureMagic, 8);
  WriteLe<uint32_t>(os, static_cast<uint32_t>(feat.kind));
  WriteLe<uint32_t>(os, static_cast<uint32_t>(feat.num_dims()));
  WriteLe<uint32_t>(os, static_cast<uint32_t>(feat.num_frames()));
  WriteLe<float>(os, feat.frame_shift_s);
  const RowMajorXf rows = feat.values;
  for (Eigen::Index i = 0; i < rows.size(); i++)
    WriteLe<float>(os, rows.data()[i]);
}

FeatureMatrix ReadFeatures(std::istream &is) {
  ExpectMagic(is, kFeatureMagic);
  FeatureMatrix feat;
  const uint32_t kind = ReadLe<uint32_t>(is);
  if (kind > static_cast<uint32_t>(FeatureKind::kMfcc))
    UEN_THROW(FormatError, "unknown feature kind ", kind);
  feat.kind = static_cast<FeatureKind>(kind);
  const uint32_t dims = ReadLe<uint32_t>(is);
  const uint32_t frames = ReadLe<uint32_t>(is);
  feat.frame_shift_s = ReadLe<float>(is);
  if (dims > 65536 || frames > (1u << 28))
    UEN_THROW(FormatError, "implausible feature size ", dims, " x ", frames);
  RowMajorXf rows(dims, frames);
  ReadExact(is, rows.data(), sizeof(float) * rows.size());
  feat.values = rows;
  if (is.peek() != std::char_traits<char>::eof())
    UEN_THROW(FormatError, "trailing bytes after feature matrix");
  return feat;
}

void WriteFeatureFile(const FeatureMatrix &feat, const std::string &path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) UEN_THROW(InputError, "cannot write ", path);
  WriteFeatures(feat, os);
  if (!os) UEN_THROW(InputError, "error writing ", path);
}

FeatureMatrix ReadFeatureFile(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) UEN_THROW(InputError, "cannot open ", path);
  try {
    return ReadFeatures(is);
  } catch (const FormatError &e) {
    UEN_THROW(FormatError, path, ": ", e.what());
  }
}

}  // namespace uen

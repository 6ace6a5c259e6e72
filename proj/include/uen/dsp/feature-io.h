// uen/dsp/feature-io.h

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

#ifndef UEN_DSP_FEATURE_IO_H_
#define UEN_DSP_FEATURE_IO_H_

#include <istream>
#include <ostream>
#include <string>

#include "uen/dsp/feature-types.h"

namespace uen {

// Binary feature container: "UENFEAT1", kind (u32), F (u32), T (u32),
// frame shift in seconds (f32), then F*T row-major float32 values, all
// little-endian.  The VAD mask is not stored.
void WriteFeatures(const FeatureMatrix &feat, std::ostream &os);
FeatureMatrix ReadFeatures(std::istream &is);

void WriteFeatureFile(const FeatureMatrix &feat, const std::string &path);
FeatureMatrix ReadFeatureFile(const std::string &path);

}  // namespace uen

#endif  // UEN_DSP_FEATURE_IO_H_

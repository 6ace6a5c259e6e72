// src/cli/feature-store.cc

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

#include "uen/cli/feature-store.h"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>

#include "uen/base/errors.h"
#include "uen/base/text-utils.h"
#include "uen/dsp/feature-io.h"
#include "uen/sim/corpus-builder.h"

namespace uen {

namespace {

int64_t ParseCount(const std::string &text) {
  int64_t v = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || v < 0)
    UEN_THROW(FormatError, "bad count '", text, "'");
  return v;
}

}  // namespace

FeatureIndex ReadFeatureIndex(const std::string &path) {
  std::ifstream is(path);
  if (!is) UEN_THROW(InputError, "cannot open feature index ", path);
  FeatureIndex out;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    line_no++;
    if (Trim(line).empty()) continue;
    const std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 5)
      UEN_THROW(FormatError, path, ":", line_no, ": expected 5 fields, got ",
                f.size());
    FeatureIndexEntry e;
    e.utt_id = f[0];
    e.speaker_id = f[1];
    e.path = f[2];
    try {
      e.num_frames = ParseCount(f[3]);
      int64_t total = 0;
      for (const std::string &r : Split(f[4], ',')) {
        e.runs.push_back(ParseCount(r));
        total += e.runs.back();
      }
      if (total != e.num_frames)
        UEN_THROW(FormatError, "run lengths sum to ", total, ", not ",
                  e.num_frames);
    } catch (const FormatError &err) {
      UEN_THROW(FormatError, path, ":", line_no, ": ", err.what());
    }
    if (!seen.insert(e.utt_id).second)
      UEN_THROW(DataError, path, ": duplicate utterance id '", e.utt_id, "'");
    out.push_back(std::move(e));
  }
  return out;
}

void WriteFeatureIndex(const FeatureIndex &index, const std::string &path) {
  std::ofstream os(path);
  if (!os) UEN_THROW(InputError, "cannot write ", path);
  for (const FeatureIndexEntry &e : index) {
    os << e.utt_id << '\t' << e.speaker_id << '\t' << e.path << '\t'
       << e.num_frames << '\t';
    for (size_t i = 0; i < e.runs.size(); i++)
      os << (i ? "," : "") << e.runs[i];
    os << '\n';
  }
  if (!os) UEN_THROW(InputError, "error writing ", path);
}

std::vector<int64_t> SpeechRuns(const std::vector<bool> &mask) {
  std::vector<int64_t> runs;
  int64_t len = 0;
  for (bool v : mask) {
    if (v) {
      len++;
    } else if (len > 0) {
      runs.push_back(len);
      len = 0;
    }
  }
  if (len > 0) runs.push_back(len);
  return runs;
}

std::vector<TrainingUtterance> LoadTrainingUtterances(
    const std::string &index_path) {
  const FeatureIndex index = ReadFeatureIndex(index_path);
  const std::string root =
      std::filesystem::path(index_path).parent_path().string();
  std::vector<TrainingUtterance> out;
  out.reserve(index.size());
  for (const FeatureIndexEntry &e : index) {
    const FeatureMatrix feat = ReadFeatureFile(ResolvePath(root, e.path));
    if (feat.num_frames() != e.num_frames)
      UEN_THROW(DataError, e.path, " has ", feat.num_frames(),
                " frames but the index says ", e.num_frames);
    TrainingUtterance utt;
    utt.id = e.utt_id;
    int64_t start = 0;
    for (int64_t len : e.runs) {
      utt.segments.push_back(feat.values.middleCols(start, len));
      start += len;
    }
    out.push_back(std::move(utt));
  }
  return out;
}

}  // namespace uen

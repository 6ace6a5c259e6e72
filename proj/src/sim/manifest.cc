// src/sim/manifest.cc

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

#include "uen/sim/manifest.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>

#include "uen/base/errors.h"
#include "uen/base/text-utils.h"

namespace uen {

const char *DomainName(Domain d) {
  return d == Domain::kCleanSource ? "clean_source" : "degraded_target";
}

Domain ParseDomain(const std::string &name) {
  if (name == "clean_source") return Domain::kCleanSource;
  if (name == "degraded_target") return Domain::kDegradedTarget;
  UEN_THROW(FormatError, "unknown domain '", name, "'");
}

void CheckUniqueIds(const Manifest &manifest) {
  std::set<std::string> seen;
  for (const UtteranceRecord &r : manifest)
    if (!seen.insert(r.utt_id).second)
      UEN_THROW(DataError, "duplicate utterance id '", r.utt_id, "'");
}

std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double ParseDouble(const std::string &s) {
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    UEN_THROW(FormatError, "not a number: '", s, "'");
  return v;
}

Manifest ReadManifest(const std::string &path) {
  std::ifstream is(path);
  if (!is) UEN_THROW(InputError, "cannot open manifest ", path);
  Manifest out;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    line_no++;
    if (Trim(line).empty()) continue;
    const std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 6)
      UEN_THROW(FormatError, path, ":", line_no, ": expected 6 fields, got ",
                f.size());
    UtteranceRecord r;
    r.utt_id = f[0];
    r.speaker_id = f[1];
    r.path = f[2];
    if (r.utt_id.empty())
      UEN_THROW(FormatError, path, ":", line_no, ": empty utterance id");
    try {
      r.domain = ParseDomain(f[3]);
      if (f[4] != "-") r.snr_estimate_db = ParseDouble(f[4]);
      if (f[5] != "-")
        for (const std::string &kv : Split(f[5], ';'))
          r.provenance.insert(SplitKeyValue(kv));
    } catch (const Error &e) {
      UEN_THROW(FormatError, path, ":", line_no, ": ", e.what());
    }
    out.push_back(std::move(r));
  }
  CheckUniqueIds(out);
  return out;
}

void WriteManifest(const Manifest &manifest, const std::string &path) {
  CheckUniqueIds(manifest);
  std::ofstream os(path);
  if (!os) UEN_THROW(InputError, "cannot write manifest ", path);
  for (const UtteranceRecord &r : manifest) {
    os << r.utt_id << '\t' << r.speaker_id << '\t' << r.path << '\t'
       << DomainName(r.domain) << '\t'
       << (r.snr_estimate_db ? FormatDouble(*r.snr_estimate_db) : "-")
       << '\t';
    if (r.provenance.empty()) {
      os << '-';
    } else {
      bool first = true;
      for (const auto &[k, v] : r.provenance) {
        os << (first ? "" : ";") << k << '=' << v;
        first = false;
      }
    }
    os << '\n';
  }
  if (!os) UEN_THROW(InputError, "failed writing manifest ", path);
}

Manifest FilterBySnr(const Manifest &manifest, double keep_fraction) {
  if (manifest.empty()) UEN_THROW(InputError, "empty manifest");
  if (!(keep_fraction > 0 && keep_fraction <= 1))
    UEN_THROW(ConfigError, "keep_fraction ", keep_fraction,
              " not in (0, 1]");
  for (const UtteranceRecord &r : manifest)
    if (!r.snr_estimate_db)
      UEN_THROW(InputError, "record '", r.utt_id, "' has no SNR estimate");
  Manifest sorted = manifest;
  std::sort(sorted.begin(), sorted.end(),
            [](const UtteranceRecord &a, const UtteranceRecord &b) {
              if (*a.snr_estimate_db != *b.snr_estimate_db)
                return *a.snr_estimate_db > *b.snr_estimate_db;
              return a.utt_id < b.utt_id;
            });
  // The epsilon keeps products like 0.29 * 100 from flooring to 28.
  const size_t keep = static_cast<size_t>(
      std::floor(static_cast<double>(sorted.size()) * keep_fraction + 1e-9));
  sorted.resize(keep);
  return sorted;
}

}  // namespace uen

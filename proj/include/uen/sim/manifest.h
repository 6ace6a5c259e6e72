// uen/sim/manifest.h

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

#ifndef UEN_SIM_MANIFEST_H_
#define UEN_SIM_MANIFEST_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace uen {

enum class Domain { kCleanSource, kDegradedTarget };

const char *DomainName(Domain d);
Domain ParseDomain(const std::string &name);

struct UtteranceRecord {
  std::string utt_id;
  std::string speaker_id;
  std::string path;
  Domain domain = Domain::kCleanSource;
  std::optional<double> snr_estimate_db;
  // e.g. rir, noise, snr_db
  std::map<std::string, std::string> provenance;
};

using Manifest = std::vector<UtteranceRecord>;

// Throws DataError on a duplicate utt_id.
void CheckUniqueIds(const Manifest &manifest);

/**
   One record per line, tab separated:
     utt_id  speaker_id  path  domain  snr_estimate_db|-  k=v;k=v
   An empty provenance is written as "-".  Reading throws FormatError on a
   malformed line and DataError on duplicate ids.
*/
Manifest ReadManifest(const std::string &path);
void WriteManifest(const Manifest &manifest, const std::string &path);

// Shortest text that parses back to the same double.
std::string FormatDouble(double v);
// Throws FormatError unless the whole string is a number.
double ParseDouble(const std::string &s);

/**
   Keeps the floor(n * keep_fraction) records with the highest
   snr_estimate_db, sorted by descending estimate with ties broken by
   ascending utt_id.  Throws InputError for an empty manifest or a record
   without an estimate, ConfigError unless 0 < keep_fraction <= 1.
*/
Manifest FilterBySnr(const Manifest &manifest, double keep_fraction = 0.5);

}  // namespace uen

#endif  // UEN_SIM_MANIFEST_H_

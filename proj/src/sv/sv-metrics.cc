// src/sv/sv-metrics.cc

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

#include "uen/sv/sv-metrics.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "uen/base/errors.h"

namespace uen {

void DcfParams::Validate() const {
  if (!(p_target > 0 && p_target < 1))
    UEN_THROW(ConfigError, "p_target must lie in (0, 1), got ", p_target);
  if (!(c_miss > 0) || !(c_fa > 0))
    UEN_THROW(ConfigError, "DCF costs must be positive");
}

std::vector<RocPoint> ComputeRoc(const std::vector<double> &target_scores,
                                 const std::vector<double> &nontarget_scores) {
  if (target_scores.empty() || nontarget_scores.empty())
    UEN_THROW(MetricUndefinedError, "need both target and nontarget trials (",
              target_scores.size(), " targets, ", nontarget_scores.size(),
              " nontargets)");
  std::vector<double> tar(target_scores), non(nontarget_scores);
  std::sort(tar.begin(), tar.end());
  std::sort(non.begin(), non.end());
  std::vector<double> thresholds(tar);
  thresholds.insert(thresholds.end(), non.begin(), non.end());
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  const double nt = tar.size(), nn = non.size();
  std::vector<RocPoint> roc;
  roc.reserve(thresholds.size() + 2);
  roc.push_back({-std::numeric_limits<double>::infinity(), 0.0, 1.0});
  size_t t_below = 0, n_below = 0;
  for (double th : thresholds) {
    while (t_below < tar.size() && tar[t_below] < th) t_below++;
    while (n_below < non.size() && non[n_below] < th) n_below++;
    roc.push_back({th, t_below / nt, (nn - n_below) / nn});
  }
  roc.push_back({std::numeric_limits<double>::infinity(), 1.0, 0.0});
  return roc;
}

double ComputeEer(const std::vector<double> &target_scores,
                  const std::vector<double> &nontarget_scores) {
  const std::vector<RocPoint> roc =
      ComputeRoc(target_scores, nontarget_scores);
  // roc.front() has p_miss 0 < p_fa 1 and roc.back() the reverse, so the
  // first point with p_miss >= p_fa has a predecessor.
  size_t i = 1;
  while (roc[i].p_miss < roc[i].p_fa) i++;
  const RocPoint &a = roc[i - 1], &b = roc[i];
  if (b.p_miss == b.p_fa) return b.p_miss;
  const double denom = (b.p_miss - a.p_miss) - (b.p_fa - a.p_fa);
  const double alpha = (a.p_fa - a.p_miss) / denom;
  return a.p_miss + alpha * (b.p_miss - a.p_miss);
}

double ComputeMinDcf(const std::vector<double> &target_scores,
                     const std::vector<double> &nontarget_scores,
                     const DcfParams &params) {
  params.Validate();
  const std::vector<RocPoint> roc =
      ComputeRoc(target_scores, nontarget_scores);
  const double w_miss = params.c_miss * params.p_target;
  const double w_fa = params.c_fa * (1 - params.p_target);
  double best = std::numeric_limits<double>::infinity();
  for (const RocPoint &p : roc)
    best = std::min(best, w_miss * p.p_miss + w_fa * p.p_fa);
  return best / std::min(w_miss, w_fa);
}

void SplitByLabel(const TrialScores &scores, std::vector<double> *targets,
                  std::vector<double> *nontargets) {
  targets->clear();
  nontargets->clear();
  for (const TrialScore &s : scores)
    (s.label == TrialLabel::kTarget ? targets : nontargets)->push_back(s.score);
}

double ComputeEer(const TrialScores &scores) {
  std::vector<double> tar, non;
  SplitByLabel(scores, &tar, &non);
  return ComputeEer(tar, non);
}

double ComputeMinDcf(const TrialScores &scores, const DcfParams &params) {
  std::vector<double> tar, non;
  SplitByLabel(scores, &tar, &non);
  return ComputeMinDcf(tar, non, params);
}

Eigen::VectorXd ToyEmbed(const FeatureMatrix &feat) {
  const int64_t dim = feat.num_dims(), frames = feat.num_frames();
  if (feat.vad_mask && feat.vad_mask->size() != static_cast<size_t>(frames))
    UEN_THROW(DimensionError, "VAD mask has ", feat.vad_mask->size(),
              " entries for ", frames, " frames");
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd sum_sq = Eigen::VectorXd::Zero(dim);
  int64_t count = 0;
  for (int64_t t = 0; t < frames; t++) {
    if (feat.vad_mask && !(*feat.vad_mask)[t]) continue;
    const Eigen::VectorXd x = feat.values.col(t).cast<double>();
    sum += x;
    sum_sq += x.cwiseProduct(x);
    count++;
  }
  if (count < kMinEmbedFrames)
    UEN_THROW(InputError, "embedding needs at least ", kMinEmbedFrames,
              " speech frames, got ", count);
  Eigen::VectorXd embed(2 * dim);
  const Eigen::VectorXd mean = sum / count;
  embed.head(dim) = mean;
  embed.tail(dim) =
      (sum_sq / count - mean.cwiseProduct(mean)).cwiseMax(0.0).cwiseSqrt();
  const double norm = embed.norm();
  if (norm > 0) embed /= norm;
  return embed;
}

double CosineScore(const Eigen::VectorXd &a, const Eigen::VectorXd &b) {
  if (a.size() != b.size())
    UEN_THROW(DimensionError, "embedding sizes differ: ", a.size(), " vs ",
              b.size());
  const double denom = a.norm() * b.norm();
  return denom > 0 ? a.dot(b) / denom : 0.0;
}

TrialScores ScoreTrials(const EmbeddingMap &enroll, const EmbeddingMap &test,
                        const std::vector<Trial> &trials) {
  TrialScores out;
  out.reserve(trials.size());
  for (const Trial &t : trials) {
    auto e = enroll.find(t.enroll_id);
    if (e == enroll.end())
      UEN_THROW(DataError, "no enrollment embedding for ", t.enroll_id);
    auto s = test.find(t.test_id);
    if (s == test.end())
      UEN_THROW(DataError, "no test embedding for ", t.test_id);
    out.push_back({t.enroll_id, t.test_id, CosineScore(e->second, s->second),
                   t.label});
  }
  return out;
}

const char *TrialLabelName(TrialLabel label) {
  return label == TrialLabel::kTarget ? "target" : "nontarget";
}

TrialLabel ParseTrialLabel(const std::string &text) {
  if (text == "target") return TrialLabel::kTarget;
  if (text == "nontarget") return TrialLabel::kNontarget;
  UEN_THROW(FormatError, "bad trial label '", text, "'");
}

TrialScores ReadScoreFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) UEN_THROW(InputError, "cannot open score file ", path);
  TrialScores out;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    line_no++;
    std::istringstream ls(line);
    TrialScore s;
    std::string label, extra;
    if (!(ls >> s.enroll_id)) continue;  // blank line
    if (!(ls >> s.test_id >> s.score >> label) || (ls >> extra))
      UEN_THROW(FormatError, path, ":", line_no, ": expected "
                "'enroll_id test_id score label'");
    s.label = ParseTrialLabel(label);
    out.push_back(std::move(s));
  }
  return out;
}

void WriteScoreFile(const TrialScores &scores, const std::string &path) {
  std::ofstream os(path);
  if (!os) UEN_THROW(InputError, "cannot write ", path);
  os.precision(17);
  for (const TrialScore &s : scores)
    os << s.enroll_id << ' ' << s.test_id << ' ' << s.score << ' '
       << TrialLabelName(s.label) << '\n';
}

std::vector<Trial> ReadTrialFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) UEN_THROW(InputError, "cannot open trial file ", path);
  std::vector<Trial> out;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    line_no++;
    std::istringstream ls(line);
    Trial t;
    std::string label, extra;
    if (!(ls >> t.enroll_id)) continue;
    if (!(ls >> t.test_id >> label) || (ls >> extra))
      UEN_THROW(FormatError, path, ":", line_no,
                ": expected 'enroll_id test_id label'");
    t.label = ParseTrialLabel(label);
    out.push_back(std::move(t));
  }
  return out;
}

void WriteTrialFile(const std::vector<Trial> &trials,
                    const std::string &path) {
  std::ofstream os(path);
  if (!os) UEN_THROW(InputError, "cannot write ", path);
  for (const Trial &t : trials)
    os << t.enroll_id << ' ' << t.test_id << ' ' << TrialLabelName(t.label)
       << '\n';
}

MetricReport EvaluateScores(const TrialScores &scores,
                            const DcfParams &params) {
  std::vector<double> tar, non;
  SplitByLabel(scores, &tar, &non);
  MetricReport r;
  r.eer = ComputeEer(tar, non);
  r.min_dcf = ComputeMinDcf(tar, non, params);
  r.dcf_params = params;
  r.n_target = tar.size();
  r.n_nontarget = non.size();
  return r;
}

std::string MetricReportToJson(const MetricReport &r) {
  nlohmann::ordered_json j;
  j["eer"] = r.eer;
  j["min_dcf"] = r.min_dcf;
  j["dcf_params"] = {{"p_target", r.dcf_params.p_target},
                     {"c_miss", r.dcf_params.c_miss},
                     {"c_fa", r.dcf_params.c_fa}};
  j["n_target"] = r.n_target;
  j["n_nontarget"] = r.n_nontarget;
  return j.dump(2);
}

}  // namespace uen

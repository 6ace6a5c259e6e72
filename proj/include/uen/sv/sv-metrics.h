// uen/sv/sv-metrics.h

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

#ifndef UEN_SV_SV_METRICS_H_
#define UEN_SV_SV_METRICS_H_

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "uen/dsp/feature-types.h"

namespace uen {

enum class TrialLabel { kTarget, kNontarget };

struct TrialScore {
  std::string enroll_id;
  std::string test_id;
  double score = 0;
  TrialLabel label = TrialLabel::kNontarget;
};

using TrialScores = std::vector<TrialScore>;

struct DcfParams {
  double p_target = 0.05;
  double c_miss = 1.0;
  double c_fa = 1.0;

  // Throws ConfigError unless p_target is in (0, 1) and both costs are
  // positive.
  void Validate() const;
};

// One operating point: trials with score >= threshold are accepted.  The
// sweep starts at -inf (accept all) and ends at +inf (reject all).
struct RocPoint {
  double threshold;
  double p_miss;
  double p_fa;
};

// Operating points for every distinct score plus both infinities, in
// increasing threshold order.  Throws MetricUndefinedError unless both
// classes are present.
std::vector<RocPoint> ComputeRoc(const std::vector<double> &target_scores,
                                 const std::vector<double> &nontarget_scores);

// Equal error rate.  Between the two adjacent operating points where the
// miss rate overtakes the false-alarm rate both rates are interpolated
// linearly and the crossing value is returned.
double ComputeEer(const std::vector<double> &target_scores,
                  const std::vector<double> &nontarget_scores);
double ComputeEer(const TrialScores &scores);

// Minimum over the sweep of c_miss*p_target*P_miss + c_fa*(1-p_target)*P_fa,
// divided by min(c_miss*p_target, c_fa*(1-p_target)).  Not clamped.
double ComputeMinDcf(const std::vector<double> &target_scores,
                     const std::vector<double> &nontarget_scores,
                     const DcfParams &params = {});
double ComputeMinDcf(const TrialScores &scores, const DcfParams &params = {});

void SplitByLabel(const TrialScores &scores, std::vector<double> *targets,
                  std::vector<double> *nontargets);

// Per-dimension mean and (population) standard deviation over the frames
// selected by feat.vad_mask (all frames when absent), concatenated and
// scaled to unit L2 norm.  Throws InputError for fewer than 10 frames.
Eigen::VectorXd ToyEmbed(const FeatureMatrix &feat);

constexpr int kMinEmbedFrames = 10;

struct Trial {
  std::string enroll_id;
  std::string test_id;
  TrialLabel label = TrialLabel::kNontarget;
};

using EmbeddingMap = std::map<std::string, Eigen::VectorXd>;

double CosineScore(const Eigen::VectorXd &a, const Eigen::VectorXd &b);

// Cosine score per trial.  Throws DataError for an id missing from either
// map.
TrialScores ScoreTrials(const EmbeddingMap &enroll, const EmbeddingMap &test,
                        const std::vector<Trial> &trials);

// Score files: one "enroll_id test_id score label" line per trial, label
// "target" or "nontarget".
TrialScores ReadScoreFile(const std::string &path);
void WriteScoreFile(const TrialScores &scores, const std::string &path);

// Trial lists: "enroll_id test_id label".
std::vector<Trial> ReadTrialFile(const std::string &path);
void WriteTrialFile(const std::vector<Trial> &trials, const std::string &path);

const char *TrialLabelName(TrialLabel label);
TrialLabel ParseTrialLabel(const std::string &text);

struct MetricReport {
  double eer = 0;
  double min_dcf = 0;
  DcfParams dcf_params;
  int64_t n_target = 0;
  int64_t n_nontarget = 0;
};

MetricReport EvaluateScores(const TrialScores &scores,
                            const DcfParams &params = {});
// {"eer", "min_dcf", "dcf_params": {...}, "n_target", "n_nontarget"}
std::string MetricReportToJson(const MetricReport &report);

}  // namespace uen

#endif  // UEN_SV_SV_METRICS_H_

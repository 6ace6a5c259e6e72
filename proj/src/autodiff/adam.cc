// src/autodiff/adam.cc

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

#include "uen/autodiff/adam.h"

#include <cmath>

#include "uen/base/errors.h"

namespace uen {

template <typename Real>
Adam<Real>::Adam(std::vector<Tensor<Real>> params, AdamOptions options)
    : params_(std::move(params)) {
  state_.options = options;
  for (const auto &p : params_) {
    if (!p.requires_grad())
      UEN_THROW(UsageError, "Adam parameter does not require grad");
    state_.first_moment.push_back(
        Eigen::Array<Real, Eigen::Dynamic, 1>::Zero(p.size()));
    state_.second_moment.push_back(
        Eigen::Array<Real, Eigen::Dynamic, 1>::Zero(p.size()));
  }
}

template <typename Real>
void Adam<Real>::Step(double learning_rate) {
  for (size_t i = 0; i < params_.size(); i++)
    if (!params_[i].has_grad())
      UEN_THROW(UsageError, "Adam::Step: parameter ", i, " has no gradient");

  const AdamOptions &o = state_.options;
  const int64_t t = ++state_.step_count;
  const double bias1 = 1.0 - std::pow(o.beta1, static_cast<double>(t));
  const double bias2 = 1.0 - std::pow(o.beta2, static_cast<double>(t));
  const Real b1 = static_cast<Real>(o.beta1), b2 = static_cast<Real>(o.beta2);
  const Real step = static_cast<Real>(learning_rate / bias1);
  const Real inv_sqrt_bias2 = static_cast<Real>(1.0 / std::sqrt(bias2));
  const Real eps = static_cast<Real>(o.epsilon);
  for (size_t i = 0; i < params_.size(); i++) {
    const auto &g = params_[i].grad();
    auto &m = state_.first_moment[i];
    auto &v = state_.second_moment[i];
    m = b1 * m + (Real(1) - b1) * g;
    v = b2 * v + (Real(1) - b2) * g.square();
    params_[i].mutable_data() -= step * m / (v.sqrt() * inv_sqrt_bias2 + eps);
  }
  ClearGrads();
}

template <typename Real>
void Adam<Real>::ClearGrads() {
  for (auto &p : params_) p.ClearGrad();
}

template <typename Real>
void Adam<Real>::Save(const std::string &prefix,
                      TensorArchive *archive) const {
  archive->PutInt(prefix + "/step", state_.step_count);
  for (size_t i = 0; i < params_.size(); i++) {
    const std::string base = prefix + "/" + std::to_string(i);
    archive->Put<Real>(base + "/m", params_[i].shape(),
                       state_.first_moment[i]);
    archive->Put<Real>(base + "/v", params_[i].shape(),
                       state_.second_moment[i]);
  }
}

template <typename Real>
void Adam<Real>::Load(const std::string &prefix, const TensorArchive &archive) {
  AdamState<Real> loaded;
  loaded.options = state_.options;
  loaded.step_count = archive.GetInt(prefix + "/step");
  for (size_t i = 0; i < params_.size(); i++) {
    const std::string base = prefix + "/" + std::to_string(i);
    loaded.first_moment.push_back(
        archive.GetArray<Real>(base + "/m", params_[i].shape()));
    loaded.second_moment.push_back(
        archive.GetArray<Real>(base + "/v", params_[i].shape()));
  }
  state_ = std::move(loaded);
}

template class Adam<float>;
template class Adam<double>;

}  // namespace uen

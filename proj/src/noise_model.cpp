// Copyright 2026 The Synest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "synest/noise_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace synest {

int family_param_count(ChannelFamily f) {
  switch (f) {
    case ChannelFamily::AmplitudeDamping:
    case ChannelFamily::PhaseDamping:
    case ChannelFamily::SystematicRotation:
      return 1;
    case ChannelFamily::GeneralizedAmplitudeDamping:
    case ChannelFamily::AdPlusDephase:
      return 2;
    case ChannelFamily::Pauli:
      return 3;
  }
  throw std::logic_error("unknown channel family");
}

const std::vector<std::string>& family_param_names(ChannelFamily f) {
  static const std::vector<std::string> ad = {"gamma"};
  static const std::vector<std::string> ph = {"p"};
  static const std::vector<std::string> sr = {"theta"};
  static const std::vector<std::string> two = {"gamma", "p"};
  static const std::vector<std::string> pauli = {"px", "py", "pz"};
  switch (f) {
    case ChannelFamily::AmplitudeDamping:
      return ad;
    case ChannelFamily::PhaseDamping:
      return ph;
    case ChannelFamily::SystematicRotation:
      return sr;
    case ChannelFamily::GeneralizedAmplitudeDamping:
    case ChannelFamily::AdPlusDephase:
      return two;
    case ChannelFamily::Pauli:
      return pauli;
  }
  throw std::logic_error("unknown channel family");
}

KrausChannel make_channel(ChannelFamily f, const std::vector<double>& p) {
  if (static_cast<int>(p.size()) != family_param_count(f))
    throw std::invalid_argument("wrong parameter count for channel family");
  switch (f) {
    case ChannelFamily::AmplitudeDamping:
      return amplitude_damping(p[0]);
    case ChannelFamily::PhaseDamping:
      return phase_damping(p[0]);
    case ChannelFamily::SystematicRotation:
      return systematic_rotation(p[0]);
    case ChannelFamily::GeneralizedAmplitudeDamping:
      return generalized_amplitude_damping(p[0], p[1]);
    case ChannelFamily::AdPlusDephase:
      return ad_plus_dephase(p[0], p[1]);
    case ChannelFamily::Pauli:
      return pauli_channel(p[0], p[1], p[2]);
  }
  throw std::logic_error("unknown channel family");
}

ChannelFamily family_from_name(const std::string& name) {
  if (name == "amplitude_damping") return ChannelFamily::AmplitudeDamping;
  if (name == "phase_damping") return ChannelFamily::PhaseDamping;
  if (name == "systematic_rotation") return ChannelFamily::SystematicRotation;
  if (name == "generalized_amplitude_damping")
    return ChannelFamily::GeneralizedAmplitudeDamping;
  if (name == "ad_plus_dephase") return ChannelFamily::AdPlusDephase;
  if (name == "pauli") return ChannelFamily::Pauli;
  throw std::invalid_argument("unknown channel family: " + name);
}

std::string family_name(ChannelFamily f) {
  switch (f) {
    case ChannelFamily::AmplitudeDamping:
      return "amplitude_damping";
    case ChannelFamily::PhaseDamping:
      return "phase_damping";
    case ChannelFamily::SystematicRotation:
      return "systematic_rotation";
    case ChannelFamily::GeneralizedAmplitudeDamping:
      return "generalized_amplitude_damping";
    case ChannelFamily::AdPlusDephase:
      return "ad_plus_dephase";
    case ChannelFamily::Pauli:
      return "pauli";
  }
  throw std::logic_error("unknown channel family");
}

bool ParameterDomain::contains(const std::vector<double>& alpha) const {
  if (alpha.size() != box.size()) return false;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (!(alpha[i] >= box[i][0] && alpha[i] <= box[i][1])) return false;
  if (pauli_simplex) {
    for (std::size_t base = 0; base + 3 <= alpha.size(); base += 3)
      if (alpha[base] + alpha[base + 1] + alpha[base + 2] > 1.0) return false;
  }
  return true;
}

std::vector<std::array<double, 2>> default_param_intervals(ChannelFamily f) {
  switch (f) {
    case ChannelFamily::AmplitudeDamping:
    case ChannelFamily::PhaseDamping:
      return {{0.0, 0.5}};
    case ChannelFamily::SystematicRotation:
      return {{0.0, std::numbers::pi / 4}};
    case ChannelFamily::GeneralizedAmplitudeDamping:
      return {{0.0, 1.0}, {0.0, 1.0}};
    case ChannelFamily::AdPlusDephase:
      return {{0.0, 0.5}, {0.0, 0.5}};
    case ChannelFamily::Pauli:
      return {{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}};
  }
  throw std::logic_error("unknown channel family");
}

NoiseModel::NoiseModel(int qubit_count, ChannelFamily family, bool uniform,
                       std::vector<int> free_idx,
                       std::vector<double> fixed_params)
    : qubit_count_(qubit_count),
      family_(family),
      uniform_(uniform),
      free_idx_(std::move(free_idx)),
      fixed_(std::move(fixed_params)) {
  const int np = family_param_count(family);
  if (static_cast<int>(fixed_.size()) != np)
    throw std::invalid_argument("fixed parameter vector has wrong length");
  for (std::size_t i = 0; i < free_idx_.size(); ++i) {
    if (free_idx_[i] < 0 || free_idx_[i] >= np)
      throw std::invalid_argument("free parameter index out of range");
    if (i > 0 && free_idx_[i] <= free_idx_[i - 1])
      throw std::invalid_argument("free parameter indices must ascend");
  }
  alpha_.assign(param_dim(), 0.0);
  for (int k = 0; k < param_dim(); ++k)
    alpha_[k] = fixed_[free_idx_[k % free_per_qubit()]];
  domain_ = build_default_domain(family_, uniform_, qubit_count_, free_idx_);
}

NoiseModel NoiseModel::uniform_model(int qubit_count, ChannelFamily family) {
  std::vector<int> free(family_param_count(family));
  for (std::size_t i = 0; i < free.size(); ++i) free[i] = static_cast<int>(i);
  return NoiseModel(qubit_count, family, true, free,
                    std::vector<double>(free.size(), 0.0));
}

NoiseModel NoiseModel::per_qubit_model(int qubit_count, ChannelFamily family) {
  std::vector<int> free(family_param_count(family));
  for (std::size_t i = 0; i < free.size(); ++i) free[i] = static_cast<int>(i);
  return NoiseModel(qubit_count, family, false, free,
                    std::vector<double>(free.size(), 0.0));
}

void NoiseModel::set_alpha(std::vector<double> a) {
  if (static_cast<int>(a.size()) != param_dim())
    throw std::invalid_argument("alpha length mismatch");
  alpha_ = std::move(a);
}

NoiseModel NoiseModel::with_alpha(std::vector<double> a) const {
  NoiseModel m = *this;
  m.set_alpha(std::move(a));
  return m;
}

std::vector<double> NoiseModel::channel_params(int qubit) const {
  std::vector<double> p = fixed_;
  const int nf = free_per_qubit();
  const int base = uniform_ ? 0 : qubit * nf;
  for (int k = 0; k < nf; ++k) p[free_idx_[k]] = alpha_[base + k];
  return p;
}

KrausChannel NoiseModel::channel(int qubit) const {
  return make_channel(family_, channel_params(qubit));
}

ChannelTraceTable NoiseModel::trace_table(int qubit) const {
  return channel_trace_table(channel(qubit));
}

void NoiseModel::set_domain(ParameterDomain d) {
  if (static_cast<int>(d.box.size()) != param_dim())
    throw std::invalid_argument("domain box length mismatch");
  for (const auto& iv : d.box)
    if (!(iv[0] < iv[1])) throw std::invalid_argument("empty domain interval");
  domain_ = std::move(d);
}

std::vector<std::string> NoiseModel::param_labels() const {
  const auto& names = family_param_names(family_);
  std::vector<std::string> out;
  if (uniform_) {
    for (int i : free_idx_) out.push_back(names[i]);
  } else {
    for (int q = 0; q < qubit_count_; ++q)
      for (int i : free_idx_)
        out.push_back("q" + std::to_string(q) + "." + names[i]);
  }
  return out;
}

ParameterDomain NoiseModel::build_default_domain(ChannelFamily family,
                                                 bool uniform, int qubits,
                                                 const std::vector<int>& free) {
  auto intervals = default_param_intervals(family);
  ParameterDomain d;
  const int copies = uniform ? 1 : qubits;
  for (int q = 0; q < copies; ++q)
    for (int i : free) d.box.push_back(intervals[i]);
  d.pauli_simplex = family == ChannelFamily::Pauli &&
                    static_cast<int>(free.size()) == 3;
  return d;
}

double schedule_eval(const NoiseSchedule& s, std::int64_t t,
                     const std::array<double, 2>* interval) {
  double v = 0;
  switch (s.kind) {
    case NoiseSchedule::Kind::Constant:
      v = s.a;
      break;
    case NoiseSchedule::Kind::Line:
      v = s.a + s.b * static_cast<double>(t);
      break;
    case NoiseSchedule::Kind::Sine:
      v = s.a * (s.b + std::sin(2 * std::numbers::pi * s.omega *
                                static_cast<double>(t)));
      break;
  }
  if (interval && !(v >= (*interval)[0] && v <= (*interval)[1]))
    throw std::domain_error("schedule value leaves the parameter domain");
  return v;
}

double schedule_eval_qubit(const NoiseSchedule& s, std::int64_t t, int row,
                           int col, int cols,
                           const std::array<double, 2>* interval) {
  if (!s.nonuniform) return schedule_eval(s, t, interval);
  const double mult = cols * row + col + 1;
  double v = 0;
  switch (s.kind) {
    case NoiseSchedule::Kind::Constant:
      v = s.a * mult;
      break;
    case NoiseSchedule::Kind::Line:
      v = s.a * mult + s.b * static_cast<double>(t);
      break;
    case NoiseSchedule::Kind::Sine:
      v = s.a * mult *
          (s.b + std::sin(2 * std::numbers::pi * s.omega *
                          static_cast<double>(t)));
      break;
  }
  if (interval && !(v >= (*interval)[0] && v <= (*interval)[1]))
    throw std::domain_error("schedule value leaves the parameter domain");
  return v;
}

}  // namespace synest

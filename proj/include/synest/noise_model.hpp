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

#ifndef SYNEST_NOISE_MODEL_HPP
#define SYNEST_NOISE_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "synest/channels.hpp"
#include "synest/surface_code.hpp"

namespace synest {

enum class ChannelFamily {
  AmplitudeDamping,
  PhaseDamping,
  SystematicRotation,
  GeneralizedAmplitudeDamping,
  AdPlusDephase,
  Pauli,
};

int family_param_count(ChannelFamily f);
const std::vector<std::string>& family_param_names(ChannelFamily f);
KrausChannel make_channel(ChannelFamily f, const std::vector<double>& params);
ChannelFamily family_from_name(const std::string& name);
std::string family_name(ChannelFamily f);

// Box prior support over the packed parameter vector, with an optional
// simplex constraint tying each qubit's Pauli triple to px+py+pz <= 1.
struct ParameterDomain {
  std::vector<std::array<double, 2>> box;
  bool pauli_simplex = false;

  bool contains(const std::vector<double>& alpha) const;
  double volume_side(int i) const { return box[i][1] - box[i][0]; }
};

// Default per-channel-parameter prior intervals for a family.
std::vector<std::array<double, 2>> default_param_intervals(ChannelFamily f);

// Single-qubit channel family applied to every data qubit. The packed
// vector alpha covers the free parameters only: one slot each when uniform,
// one slot per (qubit, free parameter) otherwise, ordered by qubit index
// then parameter index.
class NoiseModel {
 public:
  NoiseModel() = default;
  NoiseModel(int qubit_count, ChannelFamily family, bool uniform,
             std::vector<int> free_idx, std::vector<double> fixed_params);

  static NoiseModel uniform_model(int qubit_count, ChannelFamily family);
  static NoiseModel per_qubit_model(int qubit_count, ChannelFamily family);

  int qubit_count() const { return qubit_count_; }
  ChannelFamily family() const { return family_; }
  bool uniform() const { return uniform_; }
  int free_per_qubit() const { return static_cast<int>(free_idx_.size()); }
  const std::vector<int>& free_indices() const { return free_idx_; }
  int param_dim() const {
    return uniform_ ? free_per_qubit() : free_per_qubit() * qubit_count_;
  }

  const std::vector<double>& alpha() const { return alpha_; }
  void set_alpha(std::vector<double> a);
  NoiseModel with_alpha(std::vector<double> a) const;

  // Full channel parameter vector for one qubit (fixed slots filled in).
  std::vector<double> channel_params(int qubit) const;
  KrausChannel channel(int qubit) const;
  ChannelTraceTable trace_table(int qubit) const;

  const ParameterDomain& domain() const { return domain_; }
  void set_domain(ParameterDomain d);
  bool in_domain(const std::vector<double>& alpha) const {
    return domain_.contains(alpha);
  }

  // Human-readable packed-slot names, e.g. "gamma" or "q3.gamma".
  std::vector<std::string> param_labels() const;

 private:
  static ParameterDomain build_default_domain(ChannelFamily family,
                                              bool uniform, int qubits,
                                              const std::vector<int>& free);

  int qubit_count_ = 0;
  ChannelFamily family_ = ChannelFamily::AmplitudeDamping;
  bool uniform_ = true;
  std::vector<int> free_idx_;
  std::vector<double> fixed_;  // full per-channel params; free slots unused
  std::vector<double> alpha_;
  ParameterDomain domain_;
};

struct NoiseSchedule {
  enum class Kind { Constant, Line, Sine };
  Kind kind = Kind::Constant;
  double a = 0, b = 0, omega = 0;
  // Per-qubit variant scales the offset a by (cols*i + j + 1) for the qubit
  // in row i, column j.
  bool nonuniform = false;
  int param_index = 0;  // which channel parameter the schedule drives
};

// Parameter value at cycle t; throws when a domain is given and violated.
double schedule_eval(const NoiseSchedule& s, std::int64_t t,
                     const std::array<double, 2>* interval = nullptr);
double schedule_eval_qubit(const NoiseSchedule& s, std::int64_t t, int row,
                           int col, int cols,
                           const std::array<double, 2>* interval = nullptr);

}  // namespace synest

#endif  // SYNEST_NOISE_MODEL_HPP

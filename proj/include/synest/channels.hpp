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

#ifndef SYNEST_CHANNELS_HPP
#define SYNEST_CHANNELS_HPP

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "synest/tensor.hpp"

namespace synest {

struct KrausChannel {
  std::vector<Eigen::Matrix2cd> kraus;
  std::vector<std::string> param_names;
  std::vector<double> params;
};

KrausChannel amplitude_damping(double gamma);
KrausChannel phase_damping(double p);
KrausChannel systematic_rotation(double theta);
KrausChannel generalized_amplitude_damping(double gamma, double p);
KrausChannel ad_plus_dephase(double gamma, double p);
KrausChannel pauli_channel(double px, double py, double pz);

Eigen::Matrix2cd apply_channel(const KrausChannel& ch,
                               const Eigen::Matrix2cd& rho);

// Max-abs entry of sum K_i^dag K_i - I; 0 for a trace-preserving channel.
double cptp_residual(const KrausChannel& ch);

// 4x4 action on row-major vectorized density matrices:
// S[2i+j, 2k+l] = sum_K K(i,k) conj(K(j,l)).
DenseTensor to_superoperator(const KrausChannel& ch);

// (Tr sigma_x E(rho), Tr sigma_y E(rho), Tr sigma_z E(rho)).
std::array<double, 3> pauli_traces(const KrausChannel& ch,
                                   const Eigen::Matrix2cd& rho);

// Channel response over the operator basis B = {I, X, Z, XZ}:
// v[l][i] = Tr(B_l E(B_i)), index = 2x + z for X^x Z^z. Real for every
// channel whose Kraus operators are real matrices; the engine then runs
// real-arithmetic contractions.
struct ChannelTraceTable {
  std::array<std::array<std::complex<double>, 4>, 4> v;
  bool is_real = false;
  double real_at(int l, int i) const { return v[l][i].real(); }
};
ChannelTraceTable channel_trace_table(const KrausChannel& ch);

}  // namespace synest

#endif  // SYNEST_CHANNELS_HPP

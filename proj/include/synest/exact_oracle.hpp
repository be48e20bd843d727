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
//
// Dense reference simulator. Everything here works on explicit 2^n x 2^n
// density matrices and is deliberately independent of the tensor-network
// code path; it exists to validate that path and to freeze reference
// constants. Slow on purpose, capped so nothing exponential runs by
// accident.

#ifndef SYNEST_EXACT_ORACLE_HPP
#define SYNEST_EXACT_ORACLE_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "synest/logical_state.hpp"
#include "synest/noise_model.hpp"
#include "synest/surface_code.hpp"

namespace synest {

// Hard ceilings on simulated qubits (data qubits plus the reference qubit
// when present). 12 qubits is a 4096-dim density matrix.
inline constexpr int kOracleMaxQubits = 12;
inline constexpr int kOracleChoiMaxQubits = 10;

// Explicit density matrix. Basis index bit q (bit 0 least significant)
// holds the computational state of qubit q = r * cols + c; the reference
// qubit, when present, is the top bit.
struct DenseState {
  int qubit_count = 0;
  Eigen::MatrixXcd rho;

  Eigen::Index dim() const { return Eigen::Index{1} << qubit_count; }
};

// Encoded initial state built by explicit projector products: every
// stabilizer projector (I + g)/2 in turn, then the logical projector the
// kind calls for.
DenseState oracle_initial_state(const SurfaceCodeLayout& layout,
                                LogicalStateKind kind);

// Applies the per-qubit Kraus maps of the model, qubit by qubit. Qubits
// beyond model.qubit_count() (the reference qubit) are left alone.
void oracle_apply_noise(DenseState& state, const NoiseModel& model);

// Sandwiches rho with (I + m_j g_j)/2 for every generator, in order.
void oracle_project_syndrome(DenseState& state,
                             const SurfaceCodeLayout& layout,
                             const std::vector<int>& syndrome);

// Convenience: initial state with noise already applied.
DenseState oracle_noisy_state(const SurfaceCodeLayout& layout,
                              const NoiseModel& model, LogicalStateKind kind);

// Syndrome probability by the projector route: build, corrupt, project,
// trace.
double oracle_likelihood(const SurfaceCodeLayout& layout,
                         const std::vector<int>& syndrome,
                         const NoiseModel& model, LogicalStateKind kind);

// Same probability from a pre-corrupted state; used by loops over many
// syndromes.
double oracle_likelihood_from_state(const DenseState& noisy,
                                    const SurfaceCodeLayout& layout,
                                    const std::vector<int>& syndrome);

// Syndrome probability by the independent stabilizer-group route:
//   p(m) = 2^-(n-1) * sum over the 2^(n-1) group elements S of
//          f(m, S) Tr[S E(rho0)],
// with f(m, S) the product of outcomes of the generators composing S.
double oracle_likelihood_expansion(const SurfaceCodeLayout& layout,
                                   const std::vector<int>& syndrome,
                                   const NoiseModel& model,
                                   LogicalStateKind kind);

// All 2^(n-1) probabilities at once. Index encodes the syndrome: bit j set
// means generator j read -1.
std::vector<double> oracle_syndrome_distribution(
    const SurfaceCodeLayout& layout, const NoiseModel& model,
    LogicalStateKind kind);

std::vector<int> syndrome_from_mask(const SurfaceCodeLayout& layout,
                                    std::uint64_t mask);
std::uint64_t mask_from_syndrome(const std::vector<int>& syndrome);

// Conditional logical process matrix for outcome m, computed on the full
// space with the reference qubit. Row index is 2 * i + a with i the
// post-measurement logical basis state and a the reference basis state;
// identity noise with the all +1 outcome gives the maximally entangled
// projector and Tr K_m is the syndrome probability under the mixed
// logical input.
Eigen::Matrix4cd oracle_conditional_choi(const SurfaceCodeLayout& layout,
                                         const std::vector<int>& syndrome,
                                         const NoiseModel& model);

// Same from a pre-corrupted entangled_ref state.
Eigen::Matrix4cd oracle_conditional_choi_from_state(
    const DenseState& noisy, const SurfaceCodeLayout& layout,
    const std::vector<int>& syndrome);

// Canonical key string for one frozen-constant fixture row; the row's
// inputs-hash column is the FNV-1a-64 hex of this key.
std::string fixture_case_key(const std::string& case_id, int rows, int cols,
                             ChannelFamily family,
                             const std::vector<double>& params,
                             std::uint64_t syndrome_mask,
                             LogicalStateKind kind);

}  // namespace synest

#endif  // SYNEST_EXACT_ORACLE_HPP

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

#ifndef SYNEST_SURFACE_CODE_HPP
#define SYNEST_SURFACE_CODE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "synest/pauli.hpp"

namespace synest {

// One stabilizer generator of the rotated layout. Plaquette cells live on
// the dual lattice: cell (R,C) touches data qubits (R,C), (R,C+1), (R+1,C),
// (R+1,C+1) where those are in range, R in [-1, rows-1], C in [-1, cols-1].
struct StabilizerGenerator {
  int cell_r = 0;
  int cell_c = 0;
  bool x_type = false;      // X-colored plaquette, else Z-colored
  std::vector<int> qubits;  // touched qubit indices, ascending
  PauliString op;
};

struct SurfaceCodeLayout {
  int rows = 0;  // L
  int cols = 0;  // W
  std::vector<StabilizerGenerator> generators;  // canonical row-major order
  PauliString logical_x;  // X chain down column 0
  PauliString logical_z;  // Z chain across row 0

  int qubit_count() const { return rows * cols; }
  int generator_count() const { return static_cast<int>(generators.size()); }
  int distance() const { return rows < cols ? rows : cols; }
  int qubit_index(int r, int c) const { return r * cols + c; }
  int qubit_row(int q) const { return q / cols; }
  int qubit_col(int q) const { return q % cols; }
};

// Builds the rows x cols rotated layout. Throws on non-positive dimensions.
// rows = cols = 1 degenerates to a single qubit with zero generators.
SurfaceCodeLayout build_rotated_layout(int rows, int cols);

// Outcome i is -1 iff the error anticommutes with generator i.
std::vector<int> syndrome_of_error(const SurfaceCodeLayout& layout,
                                   const PauliString& error);

struct SyndromeRecord {
  std::int64_t cycle_index = 0;
  std::vector<std::int8_t> outcomes;  // entries +1 / -1, canonical order
};

struct SyndromeBatch {
  int rows = 0;
  int cols = 0;
  std::vector<SyndromeRecord> records;

  int outcome_length() const { return rows * cols - 1; }
  std::size_t size() const { return records.size(); }
};

// Plain-text batch format: '#' lines are comments; each data line is one
// cycle, rows*cols-1 space-separated '+1'/'-1' tokens in canonical generator
// order. cycle_index is assigned by data-line position on read.
void write_syndrome_file(const std::string& path, const SyndromeBatch& batch,
                         const std::vector<std::string>& header_comments = {});
SyndromeBatch read_syndrome_file(const std::string& path, int rows, int cols);

}  // namespace synest

#endif  // SYNEST_SURFACE_CODE_HPP

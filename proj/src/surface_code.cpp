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

#include "synest/surface_code.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace synest {

SurfaceCodeLayout build_rotated_layout(int rows, int cols) {
  if (rows <= 0 || cols <= 0)
    throw std::invalid_argument("layout dimensions must be positive");

  SurfaceCodeLayout lay;
  lay.rows = rows;
  lay.cols = cols;
  const int n = rows * cols;

  for (int R = -1; R <= rows - 1; ++R) {
    for (int C = -1; C <= cols - 1; ++C) {
      std::vector<int> qubits;
      for (int dr = 0; dr <= 1; ++dr) {
        for (int dc = 0; dc <= 1; ++dc) {
          int r = R + dr, c = C + dc;
          if (r >= 0 && r < rows && c >= 0 && c < cols)
            qubits.push_back(r * cols + c);
        }
      }
      bool x_type = ((R + C) & 1) != 0;
      bool keep = false;
      if (qubits.size() == 4) {
        keep = true;
      } else if (qubits.size() == 2) {
        // Weight-2 cells survive only on the matching-colored boundary:
        // X plaquettes on the top/bottom rows, Z on the left/right columns.
        bool horizontal_edge = (R == -1 || R == rows - 1);
        keep = horizontal_edge ? x_type : !x_type;
      }
      if (!keep) continue;

      StabilizerGenerator g;
      g.cell_r = R;
      g.cell_c = C;
      g.x_type = x_type;
      g.qubits = qubits;
      g.op = PauliString(n);
      for (int q : qubits) {
        if (x_type)
          g.op.set_x(q, true);
        else
          g.op.set_z(q, true);
      }
      lay.generators.push_back(std::move(g));
    }
  }

  lay.logical_x = PauliString(n);
  for (int r = 0; r < rows; ++r) lay.logical_x.set_x(lay.qubit_index(r, 0), true);
  lay.logical_z = PauliString(n);
  for (int c = 0; c < cols; ++c) lay.logical_z.set_z(lay.qubit_index(0, c), true);
  return lay;
}

std::vector<int> syndrome_of_error(const SurfaceCodeLayout& layout,
                                   const PauliString& error) {
  std::vector<int> s(layout.generators.size());
  for (std::size_t i = 0; i < layout.generators.size(); ++i)
    s[i] = layout.generators[i].op.commutes_with(error) ? 1 : -1;
  return s;
}

void write_syndrome_file(const std::string& path, const SyndromeBatch& batch,
                         const std::vector<std::string>& header_comments) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (const auto& c : header_comments) out << "# " << c << "\n";
  const int len = batch.outcome_length();
  for (const auto& rec : batch.records) {
    if (static_cast<int>(rec.outcomes.size()) != len)
      throw std::runtime_error("record length mismatch in batch");
    for (int i = 0; i < len; ++i) {
      if (i) out << ' ';
      out << (rec.outcomes[i] > 0 ? "+1" : "-1");
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

SyndromeBatch read_syndrome_file(const std::string& path, int rows, int cols) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  SyndromeBatch batch;
  batch.rows = rows;
  batch.cols = cols;
  const int len = rows * cols - 1;
  std::string line;
  std::int64_t cycle = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    SyndromeRecord rec;
    rec.cycle_index = cycle;
    rec.outcomes.reserve(len);
    std::string tok;
    while (ls >> tok) {
      if (tok == "+1")
        rec.outcomes.push_back(1);
      else if (tok == "-1")
        rec.outcomes.push_back(-1);
      else
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": bad token '" + tok + "'");
    }
    if (static_cast<int>(rec.outcomes.size()) != len)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected " + std::to_string(len) +
                               " outcomes, got " +
                               std::to_string(rec.outcomes.size()));
    batch.records.push_back(std::move(rec));
    ++cycle;
  }
  return batch;
}

}  // namespace synest

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

#ifndef SYNEST_PAULI_HPP
#define SYNEST_PAULI_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace synest {

// n-qubit Pauli operator i^phase_i * prod_q X_q^{x_q} Z_q^{z_q}.
// The per-qubit factor order is X before Z, so Y = i * X * Z has
// x = z = 1 and phase_i = 1.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n);

  static PauliString identity(int n) { return PauliString(n); }
  // which is one of 'I', 'X', 'Y', 'Z'.
  static PauliString single(int n, int qubit, char which);

  int num_qubits() const { return n_; }
  bool x_bit(int q) const { return bit(x_, q); }
  bool z_bit(int q) const { return bit(z_, q); }
  void set_x(int q, bool v) { set_bit(x_, q, v); }
  void set_z(int q, bool v) { set_bit(z_, q, v); }
  int phase_exponent() const { return phase_i_; }
  void set_phase_exponent(int p) { phase_i_ = ((p % 4) + 4) % 4; }
  std::complex<double> phase() const;

  // Letter at qubit q ignoring phase: 'I', 'X', 'Y', or 'Z'.
  char letter(int q) const;
  int weight() const;
  bool is_identity() const;  // ignores phase

  PauliString operator*(const PauliString& other) const;
  bool commutes_with(const PauliString& other) const;

  bool same_letters(const PauliString& other) const {
    return x_ == other.x_ && z_ == other.z_;
  }
  bool operator==(const PauliString& other) const {
    return n_ == other.n_ && phase_i_ == other.phase_i_ &&
           x_ == other.x_ && z_ == other.z_;
  }

  std::string str() const;

  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }

 private:
  static bool bit(const std::vector<std::uint64_t>& w, int q) {
    return (w[q >> 6] >> (q & 63)) & 1u;
  }
  static void set_bit(std::vector<std::uint64_t>& w, int q, bool v) {
    if (v)
      w[q >> 6] |= std::uint64_t{1} << (q & 63);
    else
      w[q >> 6] &= ~(std::uint64_t{1} << (q & 63));
  }

  int n_ = 0;
  int phase_i_ = 0;
  std::vector<std::uint64_t> x_, z_;
};

inline bool commutes(const PauliString& a, const PauliString& b) {
  return a.commutes_with(b);
}

namespace gf2 {

// Bit vector helpers over word-packed GF(2) vectors.
using Vec = std::vector<std::uint64_t>;

Vec make_vec(int bits);
bool get_bit(const Vec& v, int i);
void set_bit(Vec& v, int i, bool val);
void xor_into(Vec& dst, const Vec& src);
bool is_zero(const Vec& v);

// Echelonized span of a fixed list of basis vectors. Reduction against the
// echelon is deterministic (pivots are taken lowest-index-first) and reports
// the combination of original basis vectors that reproduces the input.
class Span {
 public:
  Span(int bits, const std::vector<Vec>& basis);

  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces v in place against the echelon. Returns true iff v was in the
  // span; combo_out (optional) then holds one selection of original basis
  // vectors whose product equals the input.
  bool reduce(Vec& v, std::vector<int>* combo_out) const;

 private:
  int bits_;
  int basis_size_;
  std::vector<Vec> rows_;    // echelon rows
  std::vector<int> pivots_;  // pivot bit of each row
  std::vector<Vec> combos_;  // row -> combination over original basis
};

}  // namespace gf2

// (x|z) symplectic support vector of a Pauli, phase ignored.
gf2::Vec pauli_support_vec(const PauliString& p);

}  // namespace synest

#endif  // SYNEST_PAULI_HPP

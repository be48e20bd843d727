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

#include "synest/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace synest {

namespace {
int popcount_and(const std::vector<std::uint64_t>& a,
                 const std::vector<std::uint64_t>& b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}
}  // namespace

PauliString::PauliString(int n)
    : n_(n), x_((n + 63) / 64, 0), z_((n + 63) / 64, 0) {
  if (n < 0) throw std::invalid_argument("negative qubit count");
}

PauliString PauliString::single(int n, int qubit, char which) {
  PauliString p(n);
  switch (which) {
    case 'I':
      break;
    case 'X':
      p.set_x(qubit, true);
      break;
    case 'Z':
      p.set_z(qubit, true);
      break;
    case 'Y':
      p.set_x(qubit, true);
      p.set_z(qubit, true);
      p.phase_i_ = 1;  // Y = i X Z
      break;
    default:
      throw std::invalid_argument("bad Pauli letter");
  }
  return p;
}

std::complex<double> PauliString::phase() const {
  static const std::complex<double> table[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[phase_i_];
}

char PauliString::letter(int q) const {
  bool x = x_bit(q), z = z_bit(q);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

int PauliString::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i)
    w += std::popcount(x_[i] | z_[i]);
  return w;
}

bool PauliString::is_identity() const {
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (x_[i] | z_[i]) return false;
  return true;
}

PauliString PauliString::operator*(const PauliString& other) const {
  if (n_ != other.n_) throw std::invalid_argument("qubit count mismatch");
  PauliString r(n_);
  // Reordering (X^a Z^b)(X^c Z^d) = (-1)^{b&c} X^{a^c} Z^{b^d} per qubit:
  // each Z in the left factor hops over each X in the right factor.
  int swaps = popcount_and(z_, other.x_);
  r.phase_i_ = (phase_i_ + other.phase_i_ + 2 * swaps) % 4;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    r.x_[i] = x_[i] ^ other.x_[i];
    r.z_[i] = z_[i] ^ other.z_[i];
  }
  return r;
}

bool PauliString::commutes_with(const PauliString& other) const {
  int s = popcount_and(x_, other.z_) + popcount_and(z_, other.x_);
  return (s % 2) == 0;
}

std::string PauliString::str() const {
  static const char* pre[4] = {"+", "+i", "-", "-i"};
  // Each displayed Y letter absorbs one stored factor of i (Y = i X Z).
  int y_count = 0;
  for (int q = 0; q < n_; ++q)
    if (x_bit(q) && z_bit(q)) ++y_count;
  int shown = ((phase_i_ - y_count) % 4 + 4) % 4;
  std::string s = pre[shown];
  for (int q = 0; q < n_; ++q) s += letter(q);
  return s;
}

namespace gf2 {

Vec make_vec(int bits) { return Vec((bits + 63) / 64, 0); }

bool get_bit(const Vec& v, int i) { return (v[i >> 6] >> (i & 63)) & 1u; }

void set_bit(Vec& v, int i, bool val) {
  if (val)
    v[i >> 6] |= std::uint64_t{1} << (i & 63);
  else
    v[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

void xor_into(Vec& dst, const Vec& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

bool is_zero(const Vec& v) {
  for (auto w : v)
    if (w) return false;
  return true;
}

namespace {
int lowest_set(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) return static_cast<int>(i) * 64 + std::countr_zero(v[i]);
  return -1;
}
}  // namespace

Span::Span(int bits, const std::vector<Vec>& basis)
    : bits_(bits), basis_size_(static_cast<int>(basis.size())) {
  for (int bi = 0; bi < basis_size_; ++bi) {
    Vec row = basis[bi];
    Vec combo = make_vec(basis_size_);
    set_bit(combo, bi, true);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (get_bit(row, pivots_[r])) {
        xor_into(row, rows_[r]);
        xor_into(combo, combos_[r]);
      }
    }
    int piv = lowest_set(row);
    if (piv < 0) continue;  // dependent vector
    // Back-substitute to keep each pivot unique to its row.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (get_bit(rows_[r], piv)) {
        xor_into(rows_[r], row);
        xor_into(combos_[r], combo);
      }
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(piv);
    combos_.push_back(std::move(combo));
  }
}

bool Span::reduce(Vec& v, std::vector<int>* combo_out) const {
  Vec combo = make_vec(basis_size_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (get_bit(v, pivots_[r])) {
      xor_into(v, rows_[r]);
      xor_into(combo, combos_[r]);
    }
  }
  if (!is_zero(v)) return false;
  if (combo_out) {
    combo_out->clear();
    for (int i = 0; i < basis_size_; ++i)
      if (get_bit(combo, i)) combo_out->push_back(i);
  }
  return true;
}

}  // namespace gf2

gf2::Vec pauli_support_vec(const PauliString& p) {
  int n = p.num_qubits();
  gf2::Vec v = gf2::make_vec(2 * n);
  for (int q = 0; q < n; ++q) {
    gf2::set_bit(v, q, p.x_bit(q));
    gf2::set_bit(v, n + q, p.z_bit(q));
  }
  return v;
}

}  // namespace synest

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

#ifndef SYNEST_TENSOR_HPP
#define SYNEST_TENSOR_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace synest {

// Dense tensor, row-major storage. Rank 0 is a scalar with one entry.
// Templated on the scalar so purely real networks avoid complex arithmetic;
// the complex instantiation is the general-purpose type.
template <class S>
class Tensor {
 public:
  Tensor() : shape_(), data_(1, S(0)) {}
  explicit Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    std::size_t n = 1;
    for (int e : shape_) {
      if (e <= 0) throw std::invalid_argument("tensor extent must be positive");
      n *= static_cast<std::size_t>(e);
    }
    data_.assign(n, S(0));
  }
  static Tensor scalar(S v) {
    Tensor t;
    t.data_[0] = v;
    return t;
  }

  int rank() const { return static_cast<int>(shape_.size()); }
  int extent(int i) const { return shape_[i]; }
  const std::vector<int>& shape() const { return shape_; }
  std::size_t size() const { return data_.size(); }
  S* data() { return data_.data(); }
  const S* data() const { return data_.data(); }
  S& operator[](std::size_t i) { return data_[i]; }
  const S& operator[](std::size_t i) const { return data_[i]; }

  std::size_t offset_of(const std::vector<int>& idx) const {
    std::size_t off = 0;
    for (int k = 0; k < rank(); ++k) off = off * shape_[k] + idx[k];
    return off;
  }
  S& at(const std::vector<int>& idx) { return data_[offset_of(idx)]; }
  const S& at(const std::vector<int>& idx) const {
    return data_[offset_of(idx)];
  }

  // Row-major storage makes reshape a relabeling; entry count must match.
  void reshape_inplace(std::vector<int> shape) {
    std::size_t n = 1;
    for (int e : shape) {
      if (e <= 0) throw std::invalid_argument("tensor extent must be positive");
      n *= static_cast<std::size_t>(e);
    }
    if (n != data_.size())
      throw std::invalid_argument("reshape changes entry count");
    shape_ = std::move(shape);
  }
  Tensor reshaped(std::vector<int> shape) const {
    Tensor t = *this;
    t.reshape_inplace(std::move(shape));
    return t;
  }

  void scale(S f) {
    for (auto& v : data_) v *= f;
  }
  double max_abs() const {
    double m = 0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }
  double frobenius_norm() const {
    double s = 0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
  }
  bool all_finite() const {
    for (const auto& v : data_)
      if (!std::isfinite(std::real(v)) || !std::isfinite(std::imag(v)))
        return false;
    return true;
  }

 private:
  std::vector<int> shape_;
  std::vector<S> data_;
};

using DenseTensor = Tensor<std::complex<double>>;
using RealTensor = Tensor<double>;

inline DenseTensor to_complex(const RealTensor& t) {
  DenseTensor out(t.rank() ? t.shape() : std::vector<int>{});
  if (t.rank() == 0) out = DenseTensor::scalar(t.data()[0]);
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = t[i];
  return out;
}

// Result axis k carries source axis axes[k].
template <class S>
Tensor<S> permuted(const Tensor<S>& t, const std::vector<int>& axes) {
  const int r = t.rank();
  if (static_cast<int>(axes.size()) != r)
    throw std::invalid_argument("permutation rank mismatch");
  std::vector<char> seen(r, 0);
  bool identity = true;
  for (int k = 0; k < r; ++k) {
    if (axes[k] < 0 || axes[k] >= r || seen[axes[k]])
      throw std::invalid_argument("invalid axis permutation");
    seen[axes[k]] = 1;
    identity = identity && axes[k] == k;
  }
  if (identity) return t;

  std::vector<std::size_t> sstride(r, 1);
  for (int i = r - 2; i >= 0; --i)
    sstride[i] = sstride[i + 1] * static_cast<std::size_t>(t.extent(i + 1));
  std::vector<int> nshape(r);
  std::vector<std::size_t> dstride(r);
  for (int k = 0; k < r; ++k) {
    nshape[k] = t.extent(axes[k]);
    dstride[k] = sstride[axes[k]];
  }
  Tensor<S> out(nshape);
  std::vector<int> idx(r, 0);
  std::size_t soff = 0;
  const S* src = t.data();
  S* dst = out.data();
  for (std::size_t o = 0; o < out.size(); ++o) {
    dst[o] = src[soff];
    for (int k = r - 1; k >= 0; --k) {
      if (++idx[k] < nshape[k]) {
        soff += dstride[k];
        break;
      }
      idx[k] = 0;
      soff -= dstride[k] * static_cast<std::size_t>(nshape[k] - 1);
    }
  }
  return out;
}

// Contracts a's axis p.first with b's axis p.second for every pair; result
// carries a's unpaired axes (in order) then b's unpaired axes.
template <class S>
Tensor<S> contract_pair(const Tensor<S>& a, const Tensor<S>& b,
                        const std::vector<std::pair<int, int>>& pairs) {
  std::vector<char> ap(a.rank(), 0), bp(b.rank(), 0);
  for (const auto& [ia, ib] : pairs) {
    if (ia < 0 || ia >= a.rank() || ib < 0 || ib >= b.rank())
      throw std::invalid_argument("contraction axis out of range");
    if (ap[ia] || bp[ib])
      throw std::invalid_argument("axis contracted twice");
    if (a.extent(ia) != b.extent(ib))
      throw std::invalid_argument("contracted extents differ");
    ap[ia] = 1;
    bp[ib] = 1;
  }
  std::vector<int> aperm, bperm, out_shape;
  std::size_t M = 1, K = 1, N = 1;
  for (int i = 0; i < a.rank(); ++i)
    if (!ap[i]) {
      aperm.push_back(i);
      out_shape.push_back(a.extent(i));
      M *= a.extent(i);
    }
  for (const auto& pr : pairs) {
    aperm.push_back(pr.first);
    K *= a.extent(pr.first);
  }
  for (const auto& pr : pairs) bperm.push_back(pr.second);
  for (int i = 0; i < b.rank(); ++i)
    if (!bp[i]) {
      bperm.push_back(i);
      out_shape.push_back(b.extent(i));
      N *= b.extent(i);
    }

  Tensor<S> A = permuted(a, aperm);
  Tensor<S> B = permuted(b, bperm);
  Tensor<S> out(out_shape);
  using Mat =
      Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const Mat> ma(A.data(), static_cast<Eigen::Index>(M),
                           static_cast<Eigen::Index>(K));
  Eigen::Map<const Mat> mb(B.data(), static_cast<Eigen::Index>(K),
                           static_cast<Eigen::Index>(N));
  Eigen::Map<Mat> mo(out.data(), static_cast<Eigen::Index>(M),
                     static_cast<Eigen::Index>(N));
  mo.noalias() = ma * mb;
  return out;
}

template <class S>
struct SvdSplit {
  Tensor<S> left;   // isometric columns
  Tensor<S> right;  // singular values folded in
  double discarded_weight = 0;
  int kept = 0;
};

// Splits a rank-2 tensor as left*right keeping at most chi singular values
// (chi <= 0 means no count cap) and always dropping values below
// rel_cutoff * sigma_max. Deterministic up to sign: the largest-magnitude
// entry of each kept left singular vector is made real-positive, lowest
// index winning ties.
template <class S>
SvdSplit<S> split_truncate(const Tensor<S>& t, int chi, double rel_cutoff) {
  if (t.rank() != 2) throw std::invalid_argument("split expects rank-2");
  const int rows = t.extent(0), cols = t.extent(1);
  using Mat =
      Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const Mat> m(t.data(), rows, cols);
  Eigen::BDCSVD<Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>> svd(
      m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("singular value decomposition failed");
  const auto& sigma = svd.singularValues();
  const int full = static_cast<int>(sigma.size());
  int keep = full;
  if (chi >= 1 && chi < keep) keep = chi;
  if (rel_cutoff > 0 && sigma(0) > 0) {
    while (keep > 1 && sigma(keep - 1) < rel_cutoff * sigma(0)) --keep;
  }
  double d2 = 0;
  for (int i = keep; i < full; ++i) d2 += sigma(i) * sigma(i);

  Mat U = svd.matrixU().leftCols(keep);
  Mat Vh = svd.matrixV().leftCols(keep).adjoint();
  for (int j = 0; j < keep; ++j) {
    int arg = 0;
    double best = -1;
    for (int i = 0; i < rows; ++i) {
      double v = std::abs(U(i, j));
      if (v > best) {
        best = v;
        arg = i;
      }
    }
    if (best > 0) {
      S phase = U(arg, j) / S(best);
      U.col(j) *= Eigen::numext::conj(phase);
      Vh.row(j) *= phase;
    }
    Vh.row(j) *= sigma(j);
  }

  SvdSplit<S> out;
  out.kept = keep;
  out.discarded_weight = std::sqrt(d2);
  out.left = Tensor<S>({rows, keep});
  out.right = Tensor<S>({keep, cols});
  using MapM = Eigen::Map<Mat>;
  MapM(out.left.data(), rows, keep) = U;
  MapM(out.right.data(), keep, cols) = Vh;
  return out;
}

// Keeps exactly the chi largest singular values (or all when fewer exist).
inline SvdSplit<std::complex<double>> svd_truncate(const DenseTensor& m,
                                                   int chi) {
  if (chi < 1) throw std::invalid_argument("chi must be at least 1");
  return split_truncate(m, chi, 0.0);
}

template <class S>
struct LqSplit {
  Tensor<S> l;  // rows x k
  Tensor<S> q;  // k x cols, orthonormal rows
};

// t = l * q with q a row-isometry; used to shift gauge without truncation.
template <class S>
LqSplit<S> lq_split(const Tensor<S>& t) {
  if (t.rank() != 2) throw std::invalid_argument("lq expects rank-2");
  const int rows = t.extent(0), cols = t.extent(1);
  const int k = std::min(rows, cols);
  using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  using MatR =
      Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const MatR> m(t.data(), rows, cols);
  Mat mh = m.adjoint();  // cols x rows
  Eigen::HouseholderQR<Mat> qr(mh);
  Mat Q = qr.householderQ() * Mat::Identity(cols, k);
  Mat R = qr.matrixQR().topLeftCorner(k, rows).template triangularView<Eigen::Upper>();
  LqSplit<S> out;
  out.l = Tensor<S>({rows, k});
  out.q = Tensor<S>({k, cols});
  Eigen::Map<MatR>(out.l.data(), rows, k) = R.adjoint();
  Eigen::Map<MatR>(out.q.data(), k, cols) = Q.adjoint();
  return out;
}

}  // namespace synest

#endif  // SYNEST_TENSOR_HPP

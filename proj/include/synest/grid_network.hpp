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

#ifndef SYNEST_GRID_NETWORK_HPP
#define SYNEST_GRID_NETWORK_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "synest/tensor.hpp"

namespace synest {

// Site tensor legs are ordered [up, down, left, right, open...]; bond legs
// at the grid boundary have extent 1; open legs have extent 2 and survive
// the contraction.
template <class S>
struct GridSite {
  Tensor<S> t;
  int open_count() const { return t.rank() - 4; }
};

template <class S>
struct Grid {
  int height = 0;
  int width = 0;
  std::vector<GridSite<S>> sites;  // row-major

  GridSite<S>& site(int r, int c) { return sites[r * width + c]; }
  const GridSite<S>& site(int r, int c) const { return sites[r * width + c]; }

  static Grid make(int h, int w) {
    Grid g;
    g.height = h;
    g.width = w;
    g.sites.resize(static_cast<std::size_t>(h) * w);
    return g;
  }
};

using Grid2DNetwork = Grid<std::complex<double>>;
using RealGrid2DNetwork = Grid<double>;

// Throws when bond extents disagree between neighbours, boundary bonds are
// not extent 1, or an open leg is not extent 2.
template <class S>
void validate_grid(const Grid<S>& g) {
  for (int r = 0; r < g.height; ++r)
    for (int c = 0; c < g.width; ++c) {
      const auto& t = g.site(r, c).t;
      if (t.rank() < 4) throw std::invalid_argument("grid site rank < 4");
      if ((r == 0 && t.extent(0) != 1) ||
          (r == g.height - 1 && t.extent(1) != 1) ||
          (c == 0 && t.extent(2) != 1) ||
          (c == g.width - 1 && t.extent(3) != 1))
        throw std::invalid_argument("boundary bond extent must be 1");
      if (r > 0 && t.extent(0) != g.site(r - 1, c).t.extent(1))
        throw std::invalid_argument("vertical bond extents differ");
      if (c > 0 && t.extent(2) != g.site(r, c - 1).t.extent(3))
        throw std::invalid_argument("horizontal bond extents differ");
      for (int o = 4; o < t.rank(); ++o)
        if (t.extent(o) != 2)
          throw std::invalid_argument("open leg extent must be 2");
    }
}

template <class S>
struct GridResult {
  Tensor<S> value;       // open legs in row-major site order
  double log_scale = 0;  // true result = value * exp(log_scale)
  double discarded_weight = 0;
};

enum class SweepDir { LeftToRight, RightToLeft };

namespace detail {

struct OpenTag {
  int row, col, slot;
  bool operator<(const OpenTag& o) const {
    if (row != o.row) return row < o.row;
    if (col != o.col) return col < o.col;
    return slot < o.slot;
  }
};

template <class S>
struct MpsSite {
  Tensor<S> t;  // [upper bond, phys, open..., lower bond]
  std::vector<OpenTag> tags;
};

// Two-pass compression: gauge sweep from the bottom, truncation sweep from
// the top. Rescales each site to unit max entry, folding magnitudes into
// log_scale. Returns false when a site vanished (whole contraction is 0).
template <class S>
bool compress_mps(std::vector<MpsSite<S>>& mps, int chi, double rel_cutoff,
                  double& log_scale, double& discarded2) {
  const int H = static_cast<int>(mps.size());
  for (int r = H - 1; r >= 1; --r) {
    auto shape = mps[r].t.shape();
    const int a = shape[0];
    const int rest = static_cast<int>(mps[r].t.size()) / a;
    auto lq = lq_split(mps[r].t.reshaped({a, rest}));
    const int k = lq.q.extent(0);
    std::vector<int> qshape = shape;
    qshape[0] = k;
    mps[r].t = lq.q.reshaped(qshape);
    mps[r - 1].t = contract_pair(mps[r - 1].t, lq.l,
                                 {{mps[r - 1].t.rank() - 1, 0}});
  }
  for (int r = 0; r + 1 < H; ++r) {
    auto shape = mps[r].t.shape();
    const int b = shape.back();
    const int rows = static_cast<int>(mps[r].t.size()) / b;
    auto split = split_truncate(mps[r].t.reshaped({rows, b}), chi, rel_cutoff);
    discarded2 += split.discarded_weight * split.discarded_weight;
    std::vector<int> lshape = shape;
    lshape.back() = split.kept;
    mps[r].t = split.left.reshaped(lshape);
    mps[r + 1].t = contract_pair(split.right, mps[r + 1].t, {{1, 0}});
  }
  for (int r = 0; r < H; ++r) {
    double m = mps[r].t.max_abs();
    if (m == 0) return false;
    mps[r].t.scale(S(1.0 / m));
    log_scale += std::log(m);
  }
  return true;
}

}  // namespace detail

// Boundary-MPS contraction, sweeping columns in the given direction and
// truncating virtual bonds to chi after each column. chi <= 0 removes the
// count cap; numerically negligible modes (below 1e-14 relative) are always
// dropped, which reproduces exact contraction to working precision.
template <class S>
GridResult<S> contract_grid(const Grid<S>& g, int chi,
                            SweepDir dir = SweepDir::LeftToRight) {
  validate_grid(g);
  constexpr double kRelCutoff = 1e-14;
  const int H = g.height, W = g.width;

  // Right-to-left is the mirrored left-to-right sweep.
  const Grid<S>* gp = &g;
  Grid<S> mirror;
  std::vector<int> col_of(W);
  for (int c = 0; c < W; ++c) col_of[c] = c;
  if (dir == SweepDir::RightToLeft) {
    mirror = Grid<S>::make(H, W);
    for (int r = 0; r < H; ++r)
      for (int c = 0; c < W; ++c) {
        const auto& src = g.site(r, W - 1 - c).t;
        std::vector<int> perm = {0, 1, 3, 2};
        for (int o = 4; o < src.rank(); ++o) perm.push_back(o);
        mirror.site(r, c).t = permuted(src, perm);
      }
    for (int c = 0; c < W; ++c) col_of[c] = W - 1 - c;
    gp = &mirror;
  }

  std::vector<detail::MpsSite<S>> mps(H);
  for (int r = 0; r < H; ++r) {
    mps[r].t = Tensor<S>({1, 1, 1});
    mps[r].t[0] = S(1);
  }
  double log_scale = 0, disc2 = 0;
  bool vanished = false;

  for (int c = 0; c < W && !vanished; ++c) {
    for (int r = 0; r < H; ++r) {
      const Tensor<S>& G = gp->site(r, c).t;
      const int n_old = static_cast<int>(mps[r].tags.size());
      const int n_new = G.rank() - 4;
      // mps site [a, p, old..., b] x grid [u, d, l, rt, new...] over (p, l)
      Tensor<S> m = contract_pair(mps[r].t, G, {{1, 2}});
      // -> [a, old..., b, u, d, rt, new...]; regroup bonds as (prior, edge)
      // on both ends so neighbouring rows pair up consistently.
      std::vector<int> perm = {0, n_old + 2, n_old + 4};
      for (int i = 0; i < n_old; ++i) perm.push_back(1 + i);
      for (int i = 0; i < n_new; ++i) perm.push_back(n_old + 5 + i);
      perm.push_back(n_old + 1);  // b
      perm.push_back(n_old + 3);  // d
      m = permuted(m, perm);
      auto sh = m.shape();
      std::vector<int> grouped;
      grouped.push_back(sh[0] * sh[1]);
      grouped.push_back(sh[2]);
      for (int i = 0; i < n_old + n_new; ++i) grouped.push_back(2);
      grouped.push_back(sh[sh.size() - 2] * sh.back());
      m.reshape_inplace(grouped);
      // Normalize before any factorization so huge or tiny magnitudes
      // never reach the SVD; the scale lives in log_scale.
      double mag = m.max_abs();
      if (mag == 0) {
        vanished = true;
        break;
      }
      m.scale(S(1.0 / mag));
      log_scale += std::log(mag);
      mps[r].t = std::move(m);
      for (int i = 0; i < n_new; ++i)
        mps[r].tags.push_back({r, col_of[c], i});
    }
    if (!vanished &&
        !detail::compress_mps(mps, chi, kRelCutoff, log_scale, disc2))
      vanished = true;
  }

  std::vector<detail::OpenTag> tags;
  for (int r = 0; r < H; ++r)
    for (const auto& t : mps[r].tags) tags.push_back(t);

  GridResult<S> out;
  out.discarded_weight = std::sqrt(disc2);
  if (vanished) {
    out.value = tags.empty()
                    ? Tensor<S>()
                    : Tensor<S>(std::vector<int>(tags.size(), 2));
    out.log_scale = 0;
    return out;
  }

  // Fold the final chain (all phys extents are 1 at the right boundary).
  Tensor<S> acc = mps[0].t;
  {
    auto sh = acc.shape();
    std::vector<int> ns(sh.begin() + 2, sh.end());
    acc.reshape_inplace(ns);  // [open..., b]
  }
  for (int r = 1; r < H; ++r) {
    auto sh = mps[r].t.shape();
    std::vector<int> ns;
    ns.push_back(sh[0]);
    for (std::size_t i = 2; i < sh.size(); ++i) ns.push_back(sh[i]);
    Tensor<S> site = mps[r].t.reshaped(ns);  // [a, open..., b]
    acc = contract_pair(acc, site, {{acc.rank() - 1, 0}});
  }
  {
    auto sh = acc.shape();
    sh.pop_back();  // trailing extent-1 bond
    acc.reshape_inplace(sh);
  }

  // Opens currently follow (row, absorption order); restore row-major order.
  std::vector<int> order(tags.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return tags[x] < tags[y]; });
  out.value = permuted(acc, order);
  out.log_scale = log_scale;
  return out;
}

}  // namespace synest

#endif  // SYNEST_GRID_NETWORK_HPP

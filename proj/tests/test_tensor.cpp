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

#include <doctest.h>

#include <complex>
#include <map>

#include "synest/grid_network.hpp"
#include "synest/rng.hpp"
#include "synest/tensor.hpp"

using namespace synest;
using cdouble = std::complex<double>;

namespace {

DenseTensor random_tensor(std::vector<int> shape, RngStream& rng) {
  DenseTensor t(std::move(shape));
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = cdouble(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return t;
}

double rel_diff(const DenseTensor& a, const DenseTensor& b) {
  REQUIRE(a.shape() == b.shape());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max(den, std::abs(b[i]));
  }
  return den == 0 ? num : num / den;
}

// Independent reference contraction: fold sites row-major with explicit
// edge bookkeeping, no boundary MPS and no truncation.
template <class S>
Tensor<S> naive_grid(const Grid<S>& g) {
  struct Axis {
    int kind;  // 0 vertical edge below (r,c); 1 horizontal right of (r,c);
               // 2 open; 3 dangling boundary
    int r, c, slot;
  };
  Tensor<S> acc = Tensor<S>::scalar(S(1));
  std::vector<Axis> axes;
  for (int r = 0; r < g.height; ++r)
    for (int c = 0; c < g.width; ++c) {
      const Tensor<S>& t = g.site(r, c).t;
      std::vector<std::pair<int, int>> pairs;
      for (std::size_t k = 0; k < axes.size(); ++k) {
        if (axes[k].kind == 0 && axes[k].r == r - 1 && axes[k].c == c)
          pairs.push_back({static_cast<int>(k), 0});
        if (axes[k].kind == 1 && axes[k].r == r && axes[k].c == c - 1)
          pairs.push_back({static_cast<int>(k), 2});
      }
      Tensor<S> next = contract_pair(acc, t, pairs);
      std::vector<Axis> next_axes;
      for (std::size_t k = 0; k < axes.size(); ++k) {
        bool used = false;
        for (auto& p : pairs) used = used || p.first == static_cast<int>(k);
        if (!used) next_axes.push_back(axes[k]);
      }
      for (int k = 0; k < t.rank(); ++k) {
        bool used = false;
        for (auto& p : pairs) used = used || p.second == k;
        if (used) continue;
        Axis ax;
        if (k == 0)
          ax = {3, r, c, 0};  // unmatched top boundary
        else if (k == 1)
          ax = {0, r, c, 0};
        else if (k == 2)
          ax = {3, r, c, 1};
        else if (k == 3)
          ax = {1, r, c, 0};
        else
          ax = {2, r, c, k - 4};
        next_axes.push_back(ax);
      }
      acc = std::move(next);
      axes = std::move(next_axes);
    }
  // Squeeze the dangling extent-1 boundary axes, order opens row-major.
  std::vector<int> open_idx;
  for (std::size_t k = 0; k < axes.size(); ++k)
    if (axes[k].kind == 2) open_idx.push_back(static_cast<int>(k));
  std::sort(open_idx.begin(), open_idx.end(), [&](int a, int b) {
    auto key = [&](int i) {
      return std::tuple(axes[i].r, axes[i].c, axes[i].slot);
    };
    return key(a) < key(b);
  });
  std::vector<int> perm = open_idx;
  for (std::size_t k = 0; k < axes.size(); ++k)
    if (axes[k].kind != 2) perm.push_back(static_cast<int>(k));
  acc = permuted(acc, perm);
  std::vector<int> shape(acc.shape().begin(),
                         acc.shape().begin() + open_idx.size());
  acc.reshape_inplace(shape);
  return acc;
}

template <class S>
Grid<S> random_grid(int H, int W, int bond, RngStream& rng,
                    std::vector<std::pair<int, int>> open_sites = {}) {
  auto g = Grid<S>::make(H, W);
  for (int r = 0; r < H; ++r)
    for (int c = 0; c < W; ++c) {
      int up = r == 0 ? 1 : bond;
      int down = r == H - 1 ? 1 : bond;
      int left = c == 0 ? 1 : bond;
      int right = c == W - 1 ? 1 : bond;
      std::vector<int> shape = {up, down, left, right};
      for (auto& os : open_sites)
        if (os.first == r && os.second == c) shape.push_back(2);
      Tensor<S> t(shape);
      for (std::size_t i = 0; i < t.size(); ++i) {
        if constexpr (std::is_same_v<S, double>)
          t[i] = rng.uniform(-1, 1);
        else
          t[i] = S(rng.uniform(-1, 1), rng.uniform(-1, 1));
      }
      g.site(r, c).t = std::move(t);
    }
  return g;
}

}  // namespace

TEST_CASE("contract_pair basics") {
  DenseTensor id2({2, 2});
  id2.at({0, 0}) = 1;
  id2.at({1, 1}) = 1;
  auto tr = contract_pair(id2, id2, {{0, 0}, {1, 1}});
  CHECK(tr.rank() == 0);
  CHECK(std::abs(tr[0] - cdouble(2, 0)) < 1e-15);

  RngStream rng(1);
  auto A = random_tensor({2, 2}, rng);
  auto AI = contract_pair(A, id2, {{1, 0}});
  CHECK(rel_diff(AI, A) < 1e-15);

  auto B = random_tensor({3, 3}, rng);
  auto C = random_tensor({3, 3}, rng);
  auto D = random_tensor({3, 3}, rng);
  auto left = contract_pair(contract_pair(B, C, {{1, 0}}), D, {{1, 0}});
  auto right = contract_pair(B, contract_pair(C, D, {{1, 0}}), {{1, 0}});
  CHECK(rel_diff(left, right) < 1e-12);
}

TEST_CASE("contract_pair validates inputs") {
  DenseTensor a({2, 3}), b({4, 2});
  CHECK_THROWS(contract_pair(a, b, {{1, 0}}));      // 3 vs 4
  CHECK_NOTHROW(contract_pair(a, b, {{0, 1}}));
  CHECK_THROWS(contract_pair(a, b, {{0, 1}, {0, 0}}));  // axis reused
  CHECK_THROWS(contract_pair(a, b, {{5, 0}}));
}

TEST_CASE("permuted moves entries where they belong") {
  RngStream rng(2);
  auto t = random_tensor({2, 3, 4}, rng);
  auto p = permuted(t, {2, 0, 1});
  CHECK(p.shape() == std::vector<int>{4, 2, 3});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 4; ++k)
        CHECK(p.at({k, i, j}) == t.at({i, j, k}));
  auto back = permuted(p, {1, 2, 0});
  CHECK(rel_diff(back, t) == 0);
  CHECK_THROWS(permuted(t, {0, 0, 1}));
}

TEST_CASE("svd_truncate matches its contract") {
  RngStream rng(3);
  SUBCASE("rank-1 keeps everything at chi=1") {
    DenseTensor u({4, 1}), v({1, 5});
    for (int i = 0; i < 4; ++i) u.at({i, 0}) = cdouble(rng.uniform(-1, 1), 0.3);
    for (int j = 0; j < 5; ++j) v.at({0, j}) = cdouble(0.2, rng.uniform(-1, 1));
    auto m = contract_pair(u, v, {{1, 0}});
    auto s = svd_truncate(m, 1);
    CHECK(s.discarded_weight == doctest::Approx(0.0).epsilon(1e-12));
    auto rec = contract_pair(s.left, s.right, {{1, 0}});
    CHECK(rel_diff(rec, m) < 1e-12);
  }
  SUBCASE("4x4 identity at chi=2 discards sqrt(2)") {
    DenseTensor id({4, 4});
    for (int i = 0; i < 4; ++i) id.at({i, i}) = 1;
    auto s = svd_truncate(id, 2);
    CHECK(s.kept == 2);
    CHECK(s.discarded_weight == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  }
  SUBCASE("full retention reconstructs") {
    auto m = random_tensor({8, 8}, rng);
    auto s = svd_truncate(m, 8);
    auto rec = contract_pair(s.left, s.right, {{1, 0}});
    CHECK(rel_diff(rec, m) < 1e-12);
  }
  SUBCASE("chi must be positive") {
    auto m = random_tensor({3, 3}, rng);
    CHECK_THROWS(svd_truncate(m, 0));
  }
  SUBCASE("discarded weight is monotone in chi") {
    auto m = random_tensor({6, 6}, rng);
    double prev = 1e300;
    for (int chi = 1; chi <= 6; ++chi) {
      auto s = svd_truncate(m, chi);
      CHECK(s.discarded_weight <= prev + 1e-15);
      prev = s.discarded_weight;
    }
  }
  SUBCASE("deterministic output") {
    auto m = random_tensor({7, 5}, rng);
    auto s1 = svd_truncate(m, 3);
    auto s2 = svd_truncate(m, 3);
    CHECK(rel_diff(s1.left, s2.left) == 0);
    CHECK(rel_diff(s1.right, s2.right) == 0);
  }
  SUBCASE("left factor is an isometry") {
    auto m = random_tensor({6, 4}, rng);
    auto s = svd_truncate(m, 4);
    DenseTensor conj_left = s.left;
    for (std::size_t i = 0; i < conj_left.size(); ++i)
      conj_left[i] = std::conj(conj_left[i]);
    auto gram = contract_pair(conj_left, s.left, {{0, 0}});
    for (int i = 0; i < gram.extent(0); ++i)
      for (int j = 0; j < gram.extent(1); ++j)
        CHECK(std::abs(gram.at({i, j}) - (i == j ? 1.0 : 0.0)) < 1e-12);
  }
}

TEST_CASE("lq_split factorizes with orthonormal rows") {
  RngStream rng(4);
  auto m = random_tensor({3, 6}, rng);
  auto lq = lq_split(m);
  auto rec = contract_pair(lq.l, lq.q, {{1, 0}});
  CHECK(rel_diff(rec, m) < 1e-12);
  DenseTensor qc = lq.q;
  for (std::size_t i = 0; i < qc.size(); ++i) qc[i] = std::conj(qc[i]);
  auto gram = contract_pair(lq.q, qc, {{1, 1}});
  for (int i = 0; i < gram.extent(0); ++i)
    for (int j = 0; j < gram.extent(1); ++j)
      CHECK(std::abs(gram.at({i, j}) - (i == j ? 1.0 : 0.0)) < 1e-12);
}

TEST_CASE("grid of scalar sites multiplies through") {
  auto g = Grid2DNetwork::make(3, 4);
  double expect = 1;
  int k = 1;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c, ++k) {
      DenseTensor t({1, 1, 1, 1});
      t[0] = 0.5 + 0.1 * k;
      expect *= 0.5 + 0.1 * k;
      g.site(r, c).t = t;
    }
  auto res = contract_grid(g, 0);
  CHECK(res.value.rank() == 0);
  double got = std::real(res.value[0]) * std::exp(res.log_scale);
  CHECK(got == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("unlimited chi reproduces the naive contraction") {
  RngStream rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    auto g = random_grid<cdouble>(3, 4, 3, rng);
    auto res = contract_grid(g, 0);
    auto ref = naive_grid(g);
    cdouble got = res.value[0] * std::exp(res.log_scale);
    CHECK(std::abs(got - ref[0]) / std::abs(ref[0]) < 1e-12);
  }
}

TEST_CASE("sweep direction does not change the result") {
  RngStream rng(6);
  for (int trial = 0; trial < 4; ++trial) {
    auto g = random_grid<cdouble>(4, 3, 3, rng);
    auto lr = contract_grid(g, 0, SweepDir::LeftToRight);
    auto rl = contract_grid(g, 0, SweepDir::RightToLeft);
    cdouble a = lr.value[0] * std::exp(lr.log_scale);
    cdouble b = rl.value[0] * std::exp(rl.log_scale);
    CHECK(std::abs(a - b) / std::abs(b) < 1e-10);
  }
}

TEST_CASE("open legs survive in row-major order") {
  RngStream rng(7);
  auto g = random_grid<cdouble>(3, 3, 2, rng, {{1, 0}, {1, 2}});
  auto res = contract_grid(g, 0);
  auto ref = naive_grid(g);
  REQUIRE(res.value.shape() == std::vector<int>{2, 2});
  REQUIRE(ref.shape() == std::vector<int>{2, 2});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      cdouble got = res.value.at({a, b}) * std::exp(res.log_scale);
      CHECK(std::abs(got - ref.at({a, b})) < 1e-10 * ref.max_abs());
    }

  auto rl = contract_grid(g, 0, SweepDir::RightToLeft);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      cdouble got = rl.value.at({a, b}) * std::exp(rl.log_scale);
      CHECK(std::abs(got - ref.at({a, b})) < 1e-10 * ref.max_abs());
    }

  auto g2 = random_grid<cdouble>(2, 3, 2, rng, {{0, 1}, {0, 1}});
  REQUIRE(g2.site(0, 1).t.rank() == 6);
  auto res2 = contract_grid(g2, 0);
  auto ref2 = naive_grid(g2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      cdouble got = res2.value.at({a, b}) * std::exp(res2.log_scale);
      CHECK(std::abs(got - ref2.at({a, b})) < 1e-10 * ref2.max_abs());
    }
}

TEST_CASE("truncation error shrinks as chi grows") {
  RngStream rng(8);
  auto g = random_grid<cdouble>(4, 4, 3, rng);
  auto exact = contract_grid(g, 0);
  cdouble ex = exact.value[0] * std::exp(exact.log_scale);
  double prev_err = 1e300;
  double prev_disc = 1e300;
  for (int chi : {2, 4, 8, 16}) {
    auto res = contract_grid(g, chi);
    cdouble ap = res.value[0] * std::exp(res.log_scale);
    double err = std::abs(ap - ex) / std::abs(ex);
    CHECK(err <= prev_err + 1e-12);
    CHECK(res.discarded_weight <= prev_disc + 1e-12);
    prev_err = err;
    prev_disc = res.discarded_weight;
  }
}

TEST_CASE("log scale tracking avoids overflow") {
  auto g = Grid2DNetwork::make(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      int down = r == 0 ? 2 : 1, up = r == 1 ? 2 : 1;
      int right = c == 0 ? 2 : 1, left = c == 1 ? 2 : 1;
      DenseTensor t({up, down, left, right});
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = 1e160;
      g.site(r, c).t = t;
    }
  auto res = contract_grid(g, 0);
  // Four independent binary edges, sixteen uniform terms.
  double expect_log = std::log(16.0) + 4 * std::log(1e160);
  double got_log = std::log(std::abs(res.value[0])) + res.log_scale;
  CHECK(got_log == doctest::Approx(expect_log).epsilon(1e-12));
  CHECK(res.value.all_finite());
}

TEST_CASE("real and complex grids agree on real input") {
  RngStream rng1(9);
  auto gr = random_grid<double>(3, 3, 3, rng1);
  auto gc = Grid2DNetwork::make(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      gc.site(r, c).t = to_complex(gr.site(r, c).t);
  auto rres = contract_grid(gr, 0);
  auto cres = contract_grid(gc, 0);
  double a = rres.value[0] * std::exp(rres.log_scale);
  cdouble b = cres.value[0] * std::exp(cres.log_scale);
  CHECK(std::abs(a - b) / std::abs(b) < 1e-12);
}

TEST_CASE("grid validation catches mismatches") {
  auto g = Grid2DNetwork::make(1, 2);
  g.site(0, 0).t = DenseTensor({1, 1, 1, 3});
  g.site(0, 1).t = DenseTensor({1, 1, 2, 1});
  CHECK_THROWS(contract_grid(g, 0));
  g.site(0, 1).t = DenseTensor({1, 1, 3, 1});
  CHECK_NOTHROW(contract_grid(g, 0));
  g.site(0, 0).t = DenseTensor({2, 1, 1, 3});  // boundary bond not 1
  CHECK_THROWS(contract_grid(g, 0));
}

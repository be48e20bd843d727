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

#include "synest/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace synest {

namespace {
using Eigen::Matrix2cd;
using cdouble = std::complex<double>;

void require_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::domain_error(std::string(name) + " must lie in [0,1]");
}
}  // namespace

KrausChannel amplitude_damping(double gamma) {
  require_unit(gamma, "gamma");
  KrausChannel ch;
  Matrix2cd k0 = Matrix2cd::Zero(), k1 = Matrix2cd::Zero();
  k0(0, 0) = 1;
  k0(1, 1) = std::sqrt(1 - gamma);
  k1(0, 1) = std::sqrt(gamma);
  ch.kraus = {k0, k1};
  ch.param_names = {"gamma"};
  ch.params = {gamma};
  return ch;
}

KrausChannel phase_damping(double p) {
  require_unit(p, "p");
  KrausChannel ch;
  Matrix2cd k0 = Matrix2cd::Zero(), k1 = Matrix2cd::Zero();
  k0(0, 0) = 1;
  k0(1, 1) = std::sqrt(1 - p);
  k1(1, 1) = std::sqrt(p);
  ch.kraus = {k0, k1};
  ch.param_names = {"p"};
  ch.params = {p};
  return ch;
}

KrausChannel systematic_rotation(double theta) {
  KrausChannel ch;
  Matrix2cd u = Matrix2cd::Zero();
  u(0, 0) = std::exp(cdouble(0, -theta));
  u(1, 1) = std::exp(cdouble(0, theta));
  ch.kraus = {u};
  ch.param_names = {"theta"};
  ch.params = {theta};
  return ch;
}

KrausChannel generalized_amplitude_damping(double gamma, double p) {
  require_unit(gamma, "gamma");
  require_unit(p, "p");
  KrausChannel ch;
  Matrix2cd k0 = Matrix2cd::Zero(), k1 = Matrix2cd::Zero(),
            k2 = Matrix2cd::Zero(), k3 = Matrix2cd::Zero();
  double sp = std::sqrt(p), sq = std::sqrt(1 - p);
  k0(0, 0) = sp;
  k0(1, 1) = sp * std::sqrt(1 - gamma);
  k1(0, 1) = std::sqrt(gamma * p);
  k2(0, 0) = sq * std::sqrt(1 - gamma);
  k2(1, 1) = sq;
  k3(1, 0) = std::sqrt(gamma * (1 - p));
  ch.kraus = {k0, k1, k2, k3};
  ch.param_names = {"gamma", "p"};
  ch.params = {gamma, p};
  return ch;
}

KrausChannel ad_plus_dephase(double gamma, double p) {
  require_unit(gamma, "gamma");
  require_unit(p, "p");
  KrausChannel ad = amplitude_damping(gamma);
  KrausChannel de = phase_damping(p);
  KrausChannel ch;
  for (const auto& d : de.kraus)
    for (const auto& a : ad.kraus) ch.kraus.push_back(d * a);
  ch.param_names = {"gamma", "p"};
  ch.params = {gamma, p};
  return ch;
}

KrausChannel pauli_channel(double px, double py, double pz) {
  require_unit(px, "px");
  require_unit(py, "py");
  require_unit(pz, "pz");
  double pi = 1 - px - py - pz;
  if (pi < -1e-12) throw std::domain_error("px + py + pz must not exceed 1");
  if (pi < 0) pi = 0;
  KrausChannel ch;
  Matrix2cd I = Matrix2cd::Identity();
  Matrix2cd X = Matrix2cd::Zero(), Y = Matrix2cd::Zero(),
            Z = Matrix2cd::Zero();
  X(0, 1) = 1;
  X(1, 0) = 1;
  Y(0, 1) = cdouble(0, -1);
  Y(1, 0) = cdouble(0, 1);
  Z(0, 0) = 1;
  Z(1, 1) = -1;
  ch.kraus = {std::sqrt(pi) * I, std::sqrt(px) * X, std::sqrt(py) * Y,
              std::sqrt(pz) * Z};
  ch.param_names = {"px", "py", "pz"};
  ch.params = {px, py, pz};
  return ch;
}

Matrix2cd apply_channel(const KrausChannel& ch, const Matrix2cd& rho) {
  Matrix2cd out = Matrix2cd::Zero();
  for (const auto& k : ch.kraus) out += k * rho * k.adjoint();
  return out;
}

double cptp_residual(const KrausChannel& ch) {
  Matrix2cd s = Matrix2cd::Zero();
  for (const auto& k : ch.kraus) s += k.adjoint() * k;
  s -= Matrix2cd::Identity();
  return s.cwiseAbs().maxCoeff();
}

DenseTensor to_superoperator(const KrausChannel& ch) {
  DenseTensor s({4, 4});
  for (const auto& k : ch.kraus)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            s.at({2 * i + j, 2 * a + b}) += k(i, a) * std::conj(k(j, b));
  return s;
}

std::array<double, 3> pauli_traces(const KrausChannel& ch,
                                   const Matrix2cd& rho) {
  Matrix2cd e = apply_channel(ch, rho);
  double px = (e(0, 1) + e(1, 0)).real();
  double py = (cdouble(0, 1) * (e(0, 1) - e(1, 0))).real();
  double pz = (e(0, 0) - e(1, 1)).real();
  return {px, py, pz};
}

ChannelTraceTable channel_trace_table(const KrausChannel& ch) {
  ChannelTraceTable t;
  Matrix2cd B[4];
  B[0] = Matrix2cd::Identity();
  B[1] = Matrix2cd::Zero();
  B[1](0, 1) = 1;
  B[1](1, 0) = 1;
  B[2] = Matrix2cd::Zero();
  B[2](0, 0) = 1;
  B[2](1, 1) = -1;
  B[3] = B[1] * B[2];  // XZ
  bool real = true;
  for (int i = 0; i < 4; ++i) {
    Matrix2cd m = apply_channel(ch, B[i]);
    for (int l = 0; l < 4; ++l) {
      cdouble v = (B[l] * m).trace();
      t.v[l][i] = v;
      real = real && std::abs(v.imag()) < 1e-13;
    }
  }
  t.is_real = real;
  return t;
}

}  // namespace synest

// Copyright 2026 The qipsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qipsim/gates.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "qipsim/errors.hpp"

namespace qipsim {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 8> kNames{{
    {GateKind::kHadamard, "h"},
    {GateKind::kPauliX, "x"},
    {GateKind::kRotationY, "ry"},
    {GateKind::kPhaseShift, "p"},
    {GateKind::kQftRotation, "rn"},
    {GateKind::kSwap, "swap"},
    {GateKind::kCnot, "cnot"},
    {GateKind::kToffoli, "toffoli"},
}};

// Permutation matrix sending basis |i> to |perm[i]>.
UnitaryMatrix permutation(std::span<const std::size_t> perm) {
  const std::size_t dim = perm.size();
  std::vector<Complex> m(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) m[perm[i] * dim + i] = 1.0;
  return UnitaryMatrix(dim, std::move(m));
}

}  // namespace

unsigned arity(GateKind kind) {
  switch (kind) {
    case GateKind::kSwap:
    case GateKind::kCnot:
      return 2;
    case GateKind::kToffoli:
      return 3;
    default:
      return 1;
  }
}

std::string_view gate_name(GateKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<GateKind> parse_gate_name(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

void validate(const GateSpec& spec) {
  if (!std::isfinite(spec.angle)) {
    throw InvalidArgument("gate angle must be finite");
  }
  if (spec.kind == GateKind::kQftRotation && spec.order < 1) {
    throw InvalidArgument("R_n order must be >= 1");
  }
}

GateSpec inverse(const GateSpec& spec) {
  GateSpec out = spec;
  switch (spec.kind) {
    case GateKind::kRotationY:
    case GateKind::kPhaseShift:
      out.angle = -spec.angle;
      break;
    case GateKind::kQftRotation:
      out.adjoint = !spec.adjoint;
      break;
    default:
      break;
  }
  return out;
}

UnitaryMatrix matrix_of(const GateSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case GateKind::kHadamard:
      return hadamard();
    case GateKind::kPauliX:
      return pauli_x();
    case GateKind::kRotationY:
      return rotation_y(spec.angle);
    case GateKind::kPhaseShift:
      return phase_shift(spec.angle);
    case GateKind::kQftRotation:
      return spec.adjoint ? qft_rotation(spec.order).adjoint()
                          : qft_rotation(spec.order);
    case GateKind::kSwap:
      return swap();
    case GateKind::kCnot:
      return cnot();
    case GateKind::kToffoli:
      return toffoli();
  }
  throw InvalidArgument("unknown gate kind");
}

UnitaryMatrix hadamard() {
  const double s = 1.0 / std::numbers::sqrt2;
  return UnitaryMatrix(2, {s, s, s, -s});
}

UnitaryMatrix pauli_x() { return UnitaryMatrix(2, {0.0, 1.0, 1.0, 0.0}); }

UnitaryMatrix rotation_y(double theta) {
  if (!std::isfinite(theta)) throw InvalidArgument("rotation angle must be finite");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return UnitaryMatrix(2, {c, -s, s, c});
}

UnitaryMatrix phase_shift(double phi) {
  if (!std::isfinite(phi)) throw InvalidArgument("phase angle must be finite");
  return UnitaryMatrix(2, {1.0, 0.0, 0.0, std::polar(1.0, phi)});
}

UnitaryMatrix qft_rotation(unsigned n) {
  if (n < 1) throw InvalidArgument("R_n order must be >= 1");
  // exp(-2 pi i / 2^n); ldexp keeps the angle exact for every n.
  const double angle = -std::ldexp(2.0 * std::numbers::pi, -static_cast<int>(n));
  Complex phase;
  if (n == 1) {
    phase = -1.0;
  } else if (n == 2) {
    phase = Complex{0.0, -1.0};
  } else {
    phase = std::polar(1.0, angle);
  }
  return UnitaryMatrix(2, {1.0, 0.0, 0.0, phase});
}

UnitaryMatrix cnot() {
  const std::array<std::size_t, 4> perm{0, 1, 3, 2};
  return permutation(perm);
}

UnitaryMatrix toffoli() {
  const std::array<std::size_t, 8> perm{0, 1, 2, 3, 4, 5, 7, 6};
  return permutation(perm);
}

UnitaryMatrix swap() {
  const std::array<std::size_t, 4> perm{0, 2, 1, 3};
  return permutation(perm);
}

}  // namespace qipsim

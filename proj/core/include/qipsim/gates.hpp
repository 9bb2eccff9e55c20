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

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qipsim/state_vector.hpp"

namespace qipsim {

enum class GateKind {
  kHadamard,
  kPauliX,
  kRotationY,    // [[cos t, -sin t], [sin t, cos t]]
  kPhaseShift,   // diag(1, e^{i phi})
  kQftRotation,  // R_n = diag(1, exp(-2 pi i / 2^n))
  kSwap,
  kCnot,     // 4x4, first target is the control line
  kToffoli,  // 8x8, first two targets are the control lines
};

/// A named gate plus its parameters.
///
/// `angle` is used by kRotationY and kPhaseShift, `order` by kQftRotation.
/// `adjoint` marks the conjugate transpose of kQftRotation; the other kinds
/// express their inverse through the angle (or are self-inverse).
struct GateSpec {
  GateKind kind = GateKind::kHadamard;
  double angle = 0.0;
  unsigned order = 0;
  bool adjoint = false;

  static GateSpec h() { return {GateKind::kHadamard}; }
  static GateSpec x() { return {GateKind::kPauliX}; }
  static GateSpec ry(double theta) { return {GateKind::kRotationY, theta}; }
  static GateSpec phase(double phi) { return {GateKind::kPhaseShift, phi}; }
  static GateSpec rn(unsigned n, bool adjoint = false) {
    return {GateKind::kQftRotation, 0.0, n, adjoint};
  }
  static GateSpec swap() { return {GateKind::kSwap}; }
  static GateSpec cnot() { return {GateKind::kCnot}; }
  static GateSpec toffoli() { return {GateKind::kToffoli}; }

  friend bool operator==(const GateSpec&, const GateSpec&) = default;
};

/// Number of target qubits the gate matrix spans.
unsigned arity(GateKind kind);

/// Short lowercase name ("h", "ry", "cnot", ...).
std::string_view gate_name(GateKind kind);
std::optional<GateKind> parse_gate_name(std::string_view name);

/// Throws InvalidArgument for a non-finite angle or a zero R_n order.
void validate(const GateSpec& spec);

/// Spec of the conjugate-transpose gate.
GateSpec inverse(const GateSpec& spec);

/// Matrix of the gate described by `spec`.
UnitaryMatrix matrix_of(const GateSpec& spec);

UnitaryMatrix hadamard();
UnitaryMatrix pauli_x();
UnitaryMatrix rotation_y(double theta);
UnitaryMatrix phase_shift(double phi);
/// diag(1, exp(-2 pi i / 2^n)). Throws InvalidArgument for n < 1.
UnitaryMatrix qft_rotation(unsigned n);
UnitaryMatrix cnot();
UnitaryMatrix toffoli();
UnitaryMatrix swap();

}  // namespace qipsim

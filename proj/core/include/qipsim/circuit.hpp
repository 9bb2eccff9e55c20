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

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qipsim/gates.hpp"
#include "qipsim/state_vector.hpp"

namespace qipsim {

/// One gate application: the matrix of `spec` on `targets`, conditioned on
/// every qubit in `controls` being 1.
struct GateOp {
  GateSpec spec;
  std::vector<Qubit> targets;
  std::vector<Qubit> controls;

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

/// Ordered gate program over a fixed register size. Ops run front to back.
class Circuit {
 public:
  explicit Circuit(unsigned num_qubits);

  unsigned num_qubits() const { return num_qubits_; }
  const std::vector<GateOp>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }

  /// Appends an op after checking arity, index range and disjointness.
  Circuit& add(GateOp op);
  Circuit& add(GateSpec spec, std::vector<Qubit> targets,
               std::vector<Qubit> controls = {}) {
    return add(GateOp{spec, std::move(targets), std::move(controls)});
  }
  /// Appends every op of `other`; register sizes must match.
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  unsigned num_qubits_;
  std::vector<GateOp> ops_;
};

struct ResourceReport {
  unsigned num_qubits = 0;
  /// Keyed by gate name prefixed with one 'c' per control ("h", "cry", "ccx").
  std::map<std::string, std::size_t> gate_count_by_kind;
  std::size_t total_elementary_gates = 0;
  std::size_t circuit_depth = 0;

  std::size_t count(std::string_view key) const;

  friend bool operator==(const ResourceReport&, const ResourceReport&) = default;
};

/// Count key for an op: one 'c' per control followed by the gate name.
std::string resource_key(const GateOp& op);

/// Applies the ops in order. Throws InvalidArgument on a register mismatch.
void run(const Circuit& circuit, StateVector& state,
         const KernelOptions& options = {});

/// Reversed op order with each gate replaced by its conjugate transpose.
Circuit inverse(const Circuit& circuit);

/// Gate counts plus depth from greedy layering: an op opens a new layer iff
/// it shares a qubit with the current one. Every op counts as one gate.
ResourceReport resources(const Circuit& circuit);

/// Gray-code decomposition of Ry(theta) controlled on `controls`, targeting
/// `target`, into 2^k CNOT and 2^k single-qubit Ry ops (k = |controls|).
/// The returned circuit spans `num_qubits` qubits (default: just enough to
/// hold every index).
Circuit decompose_multicontrolled_ry(double theta,
                                     const std::vector<Qubit>& controls,
                                     Qubit target, unsigned num_qubits = 0);

/// Replaces every controlled Ry op in `circuit` by its Gray-code
/// decomposition and leaves all other ops untouched.
Circuit lower_controlled_ry(const Circuit& circuit);

/// Copies `circuit` onto a larger register, sending qubit q to mapping[q].
Circuit remap(const Circuit& circuit, unsigned num_qubits,
              const std::vector<Qubit>& mapping);

/// Line-oriented text form:
///
///     # qubits=<n>
///     <GATE> [param] targets=<i,j,..> controls=<i,j,..>
///
/// GATE is the uppercase gate name. RY and P carry their angle in radians
/// (17 significant digits), RN carries its order, and RNDG marks the adjoint
/// R_n. Blank lines and other '#' lines are ignored by the parser.
std::string to_text(const Circuit& circuit);

/// Inverse of to_text. Throws DataError naming the offending line.
Circuit parse_circuit(std::string_view text);

}  // namespace qipsim

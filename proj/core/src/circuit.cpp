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

#include "qipsim/circuit.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "qipsim/errors.hpp"

namespace qipsim {

Circuit::Circuit(unsigned num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw InvalidArgument("circuit qubit count must be in [1, " +
                          std::to_string(kMaxQubits) + "], got " +
                          std::to_string(num_qubits));
  }
}

Circuit& Circuit::add(GateOp op) {
  validate(op.spec);
  if (op.targets.size() != arity(op.spec.kind)) {
    throw InvalidArgument(std::string(gate_name(op.spec.kind)) + " takes " +
                          std::to_string(arity(op.spec.kind)) +
                          " targets, got " + std::to_string(op.targets.size()));
  }
  std::vector<bool> seen(num_qubits_, false);
  for (const auto* list : {&op.targets, &op.controls}) {
    for (Qubit q : *list) {
      if (q >= num_qubits_) {
        throw InvalidArgument("qubit " + std::to_string(q) +
                              " out of range for " +
                              std::to_string(num_qubits_) + "-qubit circuit");
      }
      if (seen[q]) {
        throw InvalidArgument("qubit " + std::to_string(q) +
                              " used twice in one op");
      }
      seen[q] = true;
    }
  }
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw InvalidArgument("cannot append a " +
                          std::to_string(other.num_qubits_) +
                          "-qubit circuit to a " + std::to_string(num_qubits_) +
                          "-qubit circuit");
  }
  ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
  return *this;
}

std::size_t ResourceReport::count(std::string_view key) const {
  auto it = gate_count_by_kind.find(std::string(key));
  return it == gate_count_by_kind.end() ? 0 : it->second;
}

std::string resource_key(const GateOp& op) {
  return std::string(op.controls.size(), 'c') +
         std::string(gate_name(op.spec.kind));
}

void run(const Circuit& circuit, StateVector& state,
         const KernelOptions& options) {
  if (state.num_qubits() != circuit.num_qubits()) {
    throw InvalidArgument("circuit has " + std::to_string(circuit.num_qubits()) +
                          " qubits but the state has " +
                          std::to_string(state.num_qubits()));
  }
  for (const GateOp& op : circuit.ops()) {
    apply_gate(state, matrix_of(op.spec), op.targets, op.controls, options);
  }
}

Circuit inverse(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  const auto& ops = circuit.ops();
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    out.add(GateOp{inverse(it->spec), it->targets, it->controls});
  }
  return out;
}

ResourceReport resources(const Circuit& circuit) {
  ResourceReport report;
  if (circuit.empty()) return report;
  report.num_qubits = circuit.num_qubits();
  std::vector<bool> layer(circuit.num_qubits(), false);
  for (const GateOp& op : circuit.ops()) {
    ++report.gate_count_by_kind[resource_key(op)];
    ++report.total_elementary_gates;

    bool clash = report.circuit_depth == 0;
    for (const auto* list : {&op.targets, &op.controls}) {
      for (Qubit q : *list) clash = clash || layer[q];
    }
    if (clash) {
      std::fill(layer.begin(), layer.end(), false);
      ++report.circuit_depth;
    }
    for (const auto* list : {&op.targets, &op.controls}) {
      for (Qubit q : *list) layer[q] = true;
    }
  }
  return report;
}

Circuit decompose_multicontrolled_ry(double theta,
                                     const std::vector<Qubit>& controls,
                                     Qubit target, unsigned num_qubits) {
  if (controls.empty()) {
    throw InvalidArgument("decomposition needs at least one control");
  }
  if (controls.size() > 20) throw InvalidArgument("too many controls");
  std::vector<Qubit> all = controls;
  all.push_back(target);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InvalidArgument("controls and target must be distinct");
  }
  if (num_qubits == 0) num_qubits = all.back() + 1;

  // Uniformly controlled rotation with angle theta on the all-ones control
  // pattern and 0 elsewhere. Walking a cyclic Gray code, step i rotates by
  // beta_i and then flips the target with the control whose code bit changes
  // next. A control pattern x sees the net angle
  // sum_i (-1)^{popcount(x & gray(i))} beta_i, which is theta for x = 1..1
  // and 0 otherwise when beta_i = theta * (-1)^{popcount(gray(i))} / 2^k.
  const unsigned k = static_cast<unsigned>(controls.size());
  const std::size_t steps = std::size_t{1} << k;
  const double scale = std::ldexp(theta, -static_cast<int>(k));
  Circuit out(num_qubits);
  for (std::size_t i = 0; i < steps; ++i) {
    const std::size_t gray = i ^ (i >> 1);
    const std::size_t next = (i + 1) % steps;
    const std::size_t next_gray = next ^ (next >> 1);
    const unsigned flipped = static_cast<unsigned>(std::countr_zero(gray ^ next_gray));
    const double beta = (std::popcount(gray) % 2 == 0) ? scale : -scale;
    out.add(GateSpec::ry(beta), {target});
    out.add(GateSpec::cnot(), {controls[k - 1 - flipped], target});
  }
  return out;
}

Circuit lower_controlled_ry(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  for (const GateOp& op : circuit.ops()) {
    if (op.spec.kind == GateKind::kRotationY && !op.controls.empty()) {
      out.append(decompose_multicontrolled_ry(op.spec.angle, op.controls,
                                              op.targets.front(),
                                              circuit.num_qubits()));
    } else {
      out.add(op);
    }
  }
  return out;
}

Circuit remap(const Circuit& circuit, unsigned num_qubits,
              const std::vector<Qubit>& mapping) {
  if (mapping.size() != circuit.num_qubits()) {
    throw InvalidArgument("qubit mapping must cover every circuit qubit");
  }
  Circuit out(num_qubits);
  for (const GateOp& op : circuit.ops()) {
    GateOp moved = op;
    for (Qubit& q : moved.targets) q = mapping[q];
    for (Qubit& q : moved.controls) q = mapping[q];
    out.add(std::move(moved));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string join(const std::vector<Qubit>& qs) {
  std::string out;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(qs[i]);
  }
  return out;
}

std::vector<Qubit> parse_list(std::string_view text, std::size_t line) {
  std::vector<Qubit> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    Qubit q = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), q);
    if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty()) {
      throw DataError("line " + std::to_string(line) + ": bad qubit index '" +
                      std::string(item) + "'");
    }
    out.push_back(q);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string to_text(const Circuit& circuit) {
  std::ostringstream os;
  os << "# qubits=" << circuit.num_qubits() << '\n';
  char buf[64];
  for (const GateOp& op : circuit.ops()) {
    std::string name = upper(gate_name(op.spec.kind));
    switch (op.spec.kind) {
      case GateKind::kRotationY:
      case GateKind::kPhaseShift:
        std::snprintf(buf, sizeof buf, "%.17g", op.spec.angle);
        os << name << ' ' << buf;
        break;
      case GateKind::kQftRotation:
        os << name << (op.spec.adjoint ? "DG " : " ") << op.spec.order;
        break;
      default:
        os << name;
    }
    os << " targets=" << join(op.targets) << " controls=" << join(op.controls)
       << '\n';
  }
  return os.str();
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<Circuit> circuit;
  auto fail = [&](const std::string& msg) -> DataError {
    return DataError("circuit line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.front() == '#') {
      const auto pos = line.find("qubits=");
      if (!circuit && pos != std::string::npos) {
        unsigned n = 0;
        const char* begin = line.data() + pos + 7;
        const char* end = line.data() + line.size();
        while (end > begin && (end[-1] == '\r' || end[-1] == ' ')) --end;
        const auto [ptr, ec] = std::from_chars(begin, end, n);
        if (ec != std::errc{} || ptr != end) throw fail("bad qubit count");
        circuit.emplace(n);
      }
      continue;
    }
    if (!circuit) throw fail("op before '# qubits=<n>' header");

    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);

    std::string name = lower(tokens[0]);
    bool adjoint = false;
    if (name == "rndg") {
      name = "rn";
      adjoint = true;
    }
    const auto kind = parse_gate_name(name);
    if (!kind) throw fail("unknown gate '" + tokens[0] + "'");

    GateSpec spec{*kind};
    spec.adjoint = adjoint;
    std::size_t next = 1;
    const bool has_param = *kind == GateKind::kRotationY ||
                           *kind == GateKind::kPhaseShift ||
                           *kind == GateKind::kQftRotation;
    if (has_param) {
      if (tokens.size() < 2) throw fail("missing gate parameter");
      try {
        std::size_t used = 0;
        if (*kind == GateKind::kQftRotation) {
          const unsigned long order = std::stoul(tokens[1], &used);
          spec.order = static_cast<unsigned>(order);
        } else {
          spec.angle = std::stod(tokens[1], &used);
        }
        if (used != tokens[1].size()) throw fail("bad parameter '" + tokens[1] + "'");
      } catch (const std::logic_error&) {
        throw fail("bad parameter '" + tokens[1] + "'");
      }
      next = 2;
    }
    GateOp op{spec, {}, {}};
    bool saw_targets = false;
    for (; next < tokens.size(); ++next) {
      const std::string& tok = tokens[next];
      if (tok.starts_with("targets=")) {
        op.targets = parse_list(std::string_view(tok).substr(8), lineno);
        saw_targets = true;
      } else if (tok.starts_with("controls=")) {
        op.controls = parse_list(std::string_view(tok).substr(9), lineno);
      } else {
        throw fail("unexpected token '" + tok + "'");
      }
    }
    if (!saw_targets) throw fail("missing targets=");
    try {
      circuit->add(std::move(op));
    } catch (const InvalidArgument& e) {
      throw fail(e.what());
    }
  }
  if (!circuit) throw DataError("circuit text has no '# qubits=<n>' header");
  return *std::move(circuit);
}

}  // namespace qipsim

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

#include "qipsim/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "qipsim/errors.hpp"

namespace qipsim {

namespace {

bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Spreads the bits of `compact` over the positions not listed in
// `sorted_holes` (ascending bit positions), leaving zeros in the holes.
BasisIndex insert_zero_bits(BasisIndex compact,
                            std::span<const unsigned> sorted_holes) {
  BasisIndex out = compact;
  for (unsigned pos : sorted_holes) {
    const BasisIndex low = out & ((BasisIndex{1} << pos) - 1);
    out = ((out >> pos) << (pos + 1)) | low;
  }
  return out;
}

void validate_indices(unsigned num_qubits, std::span<const Qubit> targets,
                      std::span<const Qubit> controls) {
  std::vector<bool> seen(num_qubits, false);
  auto check = [&](Qubit q, const char* role) {
    if (q >= num_qubits) {
      throw InvalidArgument(std::string(role) + " qubit " + std::to_string(q) +
                            " out of range for " + std::to_string(num_qubits) +
                            "-qubit register");
    }
    if (seen[q]) {
      throw InvalidArgument("qubit " + std::to_string(q) +
                            " listed more than once among targets/controls");
    }
    seen[q] = true;
  };
  for (Qubit q : targets) check(q, "target");
  for (Qubit q : controls) check(q, "control");
}

}  // namespace

// ---------------------------------------------------------------------------
// UnitaryMatrix

UnitaryMatrix::UnitaryMatrix(Trusted, std::size_t dimension,
                             std::vector<Complex> entries)
    : dimension_(dimension),
      num_qubits_(static_cast<unsigned>(std::countr_zero(dimension))),
      entries_(std::move(entries)) {}

UnitaryMatrix::UnitaryMatrix(std::size_t dimension,
                             std::vector<Complex> entries)
    : UnitaryMatrix(Trusted{}, dimension, std::move(entries)) {
  if (dimension < 2 || !std::has_single_bit(dimension)) {
    throw InvalidArgument("gate dimension must be a power of two >= 2, got " +
                          std::to_string(dimension));
  }
  if (entries_.size() != dimension * dimension) {
    throw InvalidArgument("gate of dimension " + std::to_string(dimension) +
                          " needs " + std::to_string(dimension * dimension) +
                          " entries, got " + std::to_string(entries_.size()));
  }
  if (!std::all_of(entries_.begin(), entries_.end(), is_finite)) {
    throw NotUnitary("gate matrix has non-finite entries");
  }
  const double err = unitarity_error();
  if (err > kUnitarityTolerance) {
    throw NotUnitary("gate matrix deviates from unitarity by " +
                     std::to_string(err));
  }
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  std::vector<Complex> out(entries_.size());
  for (std::size_t r = 0; r < dimension_; ++r) {
    for (std::size_t c = 0; c < dimension_; ++c) {
      out[c * dimension_ + r] = std::conj(entries_[r * dimension_ + c]);
    }
  }
  return UnitaryMatrix(Trusted{}, dimension_, std::move(out));
}

double UnitaryMatrix::unitarity_error() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dimension_; ++i) {
    for (std::size_t j = 0; j < dimension_; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < dimension_; ++k) {
        acc += std::conj((*this)(k, i)) * (*this)(k, j);
      }
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector StateVector::zero(unsigned num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw InvalidArgument("qubit count must be in [1, " +
                          std::to_string(kMaxQubits) + "], got " +
                          std::to_string(num_qubits));
  }
  std::vector<Complex> amps(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  amps[0] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(unsigned num_qubits,
                                         std::vector<Complex> amplitudes,
                                         double norm_tolerance) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw InvalidArgument("qubit count must be in [1, " +
                          std::to_string(kMaxQubits) + "], got " +
                          std::to_string(num_qubits));
  }
  if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
    throw InvalidArgument("expected " +
                          std::to_string(std::size_t{1} << num_qubits) +
                          " amplitudes, got " +
                          std::to_string(amplitudes.size()));
  }
  if (!std::all_of(amplitudes.begin(), amplitudes.end(), is_finite)) {
    throw InvalidArgument("amplitudes must be finite");
  }
  StateVector s(num_qubits, std::move(amplitudes));
  if (std::abs(s.norm() - 1.0) > norm_tolerance) {
    throw InvalidArgument("amplitudes are not normalized (norm " +
                          std::to_string(s.norm()) + ")");
  }
  return s;
}

double StateVector::norm_squared() const {
  double acc = 0.0;
  for (const Complex& a : amplitudes_) acc += std::norm(a);
  return acc;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

StateVector new_zero_state(unsigned num_qubits) {
  return StateVector::zero(num_qubits);
}

// ---------------------------------------------------------------------------
// Gate kernel

void apply_gate(StateVector& state, const UnitaryMatrix& gate,
                std::span<const Qubit> targets, std::span<const Qubit> controls,
                const KernelOptions& options) {
  const unsigned n = state.num_qubits();
  if (targets.empty()) throw InvalidArgument("gate needs at least one target");
  validate_indices(n, targets, controls);
  if (gate.num_qubits() != targets.size()) {
    throw InvalidArgument("gate acts on " + std::to_string(gate.num_qubits()) +
                          " qubits but " + std::to_string(targets.size()) +
                          " targets were given");
  }

  const std::size_t k = targets.size();
  const std::size_t dim = gate.dimension();

  std::vector<BasisIndex> offsets(dim, 0);
  for (std::size_t local = 0; local < dim; ++local) {
    for (std::size_t j = 0; j < k; ++j) {
      if ((local >> (k - 1 - j)) & 1U) offsets[local] |= state.bit_mask(targets[j]);
    }
  }
  BasisIndex control_mask = 0;
  std::vector<unsigned> holes;
  holes.reserve(k + controls.size());
  for (Qubit q : targets) holes.push_back(n - 1 - q);
  for (Qubit q : controls) {
    holes.push_back(n - 1 - q);
    control_mask |= state.bit_mask(q);
  }
  std::sort(holes.begin(), holes.end());

  const std::size_t groups = std::size_t{1} << (n - holes.size());
  std::span<Complex> amps = state.amplitudes();
  const std::span<const Complex> u = gate.entries();

  auto run_range = [&](std::size_t begin, std::size_t end) {
    if (dim == 2) {
      const Complex u00 = u[0], u01 = u[1], u10 = u[2], u11 = u[3];
      const BasisIndex off = offsets[1];
      for (std::size_t g = begin; g < end; ++g) {
        const BasisIndex base = insert_zero_bits(g, holes) | control_mask;
        const Complex a0 = amps[base];
        const Complex a1 = amps[base + off];
        amps[base] = u00 * a0 + u01 * a1;
        amps[base + off] = u10 * a0 + u11 * a1;
      }
      return;
    }
    std::vector<Complex> in(dim), out(dim);
    for (std::size_t g = begin; g < end; ++g) {
      const BasisIndex base = insert_zero_bits(g, holes) | control_mask;
      for (std::size_t l = 0; l < dim; ++l) in[l] = amps[base + offsets[l]];
      for (std::size_t r = 0; r < dim; ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < dim; ++c) acc += u[r * dim + c] * in[c];
        out[r] = acc;
      }
      for (std::size_t l = 0; l < dim; ++l) amps[base + offsets[l]] = out[l];
    }
  };

  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1 || groups < options.parallel_threshold) {
    run_range(0, groups);
    return;
  }
  // Groups touch disjoint amplitude sets, so blocks never race.
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  const std::size_t chunk = (groups + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = std::min(groups, t * chunk);
    const std::size_t end = std::min(groups, begin + chunk);
    if (begin == end) break;
    workers.emplace_back(run_range, begin, end);
  }
}

// ---------------------------------------------------------------------------
// Measurement

std::string basis_label(BasisIndex value, unsigned bits) {
  std::string out(bits, '0');
  for (unsigned i = 0; i < bits; ++i) {
    if ((value >> (bits - 1 - i)) & 1U) out[i] = '1';
  }
  return out;
}

void MeasurementRecord::validate(double tolerance) const {
  if (labels.empty()) throw DataError("measurement record is empty");
  if (probabilities.size() != labels.size()) {
    throw DataError("label and probability counts differ");
  }
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0 && p <= 1.0 + tolerance)) {
      throw DataError("probability outside [0, 1]: " + std::to_string(p));
    }
    total += p;
  }
  if (std::abs(total - 1.0) > tolerance) {
    throw DataError("probabilities sum to " + std::to_string(total));
  }
  if (counts) {
    if (counts->size() != labels.size()) {
      throw DataError("label and count lengths differ");
    }
    if (!shots || *shots == 0) throw DataError("sampled record without shots");
    const std::uint64_t sum =
        std::accumulate(counts->begin(), counts->end(), std::uint64_t{0});
    if (sum != *shots) {
      throw DataError("counts sum to " + std::to_string(sum) + ", expected " +
                      std::to_string(*shots));
    }
  }
}

namespace {

MeasurementRecord exact_record(std::vector<double> probs, unsigned bits) {
  MeasurementRecord rec;
  rec.labels.reserve(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    rec.labels.push_back(basis_label(i, bits));
  }
  rec.probabilities = std::move(probs);
  return rec;
}

}  // namespace

MeasurementRecord probabilities(const StateVector& state) {
  std::vector<double> probs(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) probs[i] = std::norm(state[i]);
  return exact_record(std::move(probs), state.num_qubits());
}

MeasurementRecord measure_subset(const StateVector& state,
                                 std::span<const Qubit> qubits) {
  if (qubits.empty()) throw InvalidArgument("marginal needs at least one qubit");
  validate_indices(state.num_qubits(), qubits, {});
  const unsigned m = static_cast<unsigned>(qubits.size());
  std::vector<double> probs(std::size_t{1} << m, 0.0);
  for (BasisIndex i = 0; i < state.size(); ++i) {
    BasisIndex label = 0;
    for (Qubit q : qubits) {
      label = (label << 1) | ((i & state.bit_mask(q)) ? 1U : 0U);
    }
    probs[label] += std::norm(state[i]);
  }
  return exact_record(std::move(probs), m);
}

std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities,
                                         std::uint64_t shots,
                                         std::uint64_t seed) {
  if (shots == 0) throw InvalidArgument("shots must be >= 1");
  if (probabilities.empty()) throw InvalidArgument("empty distribution");
  std::vector<double> cdf(probabilities.size());
  std::partial_sum(probabilities.begin(), probabilities.end(), cdf.begin());
  const double total = cdf.back();
  if (!(total > 0.0)) throw InvalidArgument("distribution has zero mass");

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> counts(probabilities.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double x = u * total;
    std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(cdf.begin(), cdf.end(), x) - cdf.begin());
    // x < total, so idx only overflows through rounding in u * total.
    if (idx == cdf.size()) {
      idx = cdf.size() - 1;
      while (idx > 0 && probabilities[idx] <= 0.0) --idx;
    }
    ++counts[idx];
  }
  return counts;
}

MeasurementRecord sample(const StateVector& state, std::uint64_t shots,
                         std::uint64_t seed) {
  MeasurementRecord rec = probabilities(state);
  std::vector<std::uint64_t> counts = sample_counts(rec.probabilities, shots, seed);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    rec.probabilities[i] =
        static_cast<double>(counts[i]) / static_cast<double>(shots);
  }
  rec.counts = std::move(counts);
  rec.shots = shots;
  rec.seed = seed;
  return rec;
}

}  // namespace qipsim

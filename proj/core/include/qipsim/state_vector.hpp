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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qipsim {

using Complex = std::complex<double>;
using Qubit = unsigned;
using BasisIndex = std::uint64_t;

/// Largest register new_zero_state accepts (2^28 amplitudes = 4 GiB).
inline constexpr unsigned kMaxQubits = 28;

/// Tolerance used to validate U^dagger U = I when a UnitaryMatrix is built.
inline constexpr double kUnitarityTolerance = 1e-12;

/// Square 2^k x 2^k complex matrix acting on k qubits, stored row-major.
///
/// Unitarity is validated once at construction; kernels trust it afterwards.
/// The local basis index of a k-qubit gate uses the same MSB-first ordering
/// as the register: the first target qubit is the most significant bit.
class UnitaryMatrix {
 public:
  /// Throws InvalidArgument if `dimension` is not a power of two >= 2 or the
  /// entry count is wrong, NotUnitary if the matrix fails the unitarity check.
  UnitaryMatrix(std::size_t dimension, std::vector<Complex> entries);

  std::size_t dimension() const { return dimension_; }
  unsigned num_qubits() const { return num_qubits_; }

  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dimension_ + col];
  }
  std::span<const Complex> entries() const { return entries_; }

  /// Conjugate transpose.
  UnitaryMatrix adjoint() const;

  /// Largest entrywise deviation of U^dagger U from the identity.
  double unitarity_error() const;

  friend bool operator==(const UnitaryMatrix&, const UnitaryMatrix&) = default;

 private:
  struct Trusted {};
  UnitaryMatrix(Trusted, std::size_t dimension, std::vector<Complex> entries);

  std::size_t dimension_ = 0;
  unsigned num_qubits_ = 0;
  std::vector<Complex> entries_;
};

/// Dense amplitude vector of an n-qubit register.
///
/// Qubit 0 is the most significant bit of the basis index, so basis state
/// |q0 q1 ... q_{n-1}> has index sum_j q_j * 2^(n-1-j).
class StateVector {
 public:
  /// |0...0> on `num_qubits` qubits. Throws InvalidArgument outside
  /// [1, kMaxQubits].
  static StateVector zero(unsigned num_qubits);

  /// Wraps explicit amplitudes. The length must be 2^num_qubits, every entry
  /// finite, and the norm 1 within `norm_tolerance`.
  static StateVector from_amplitudes(unsigned num_qubits,
                                     std::vector<Complex> amplitudes,
                                     double norm_tolerance = 1e-10);

  unsigned num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }

  const Complex& operator[](BasisIndex i) const { return amplitudes_[i]; }
  Complex& operator[](BasisIndex i) { return amplitudes_[i]; }

  /// Mask of `qubit` inside a basis index.
  BasisIndex bit_mask(Qubit qubit) const {
    return BasisIndex{1} << (num_qubits_ - 1 - qubit);
  }

  /// Sum of squared magnitudes.
  double norm_squared() const;
  double norm() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  StateVector(unsigned num_qubits, std::vector<Complex> amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

  unsigned num_qubits_ = 0;
  std::vector<Complex> amplitudes_;
};

/// Exact distribution or shot histogram over basis labels.
///
/// Labels are MSB-first bit strings and are listed in ascending numeric order.
/// For a sampled record, `probabilities` holds empirical frequencies.
struct MeasurementRecord {
  std::vector<std::string> labels;
  std::vector<double> probabilities;
  std::optional<std::vector<std::uint64_t>> counts;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;

  std::size_t size() const { return labels.size(); }
  bool sampled() const { return counts.has_value(); }

  /// Throws DataError when the record breaks its invariants (lengths,
  /// probability range and sum within `tolerance`, counts summing to shots).
  void validate(double tolerance = 1e-10) const;

  friend bool operator==(const MeasurementRecord&,
                         const MeasurementRecord&) = default;
};

/// MSB-first, zero-padded binary rendering of `value` on `bits` bits.
std::string basis_label(BasisIndex value, unsigned bits);

/// Execution knobs for apply_gate. Results are bit-identical for every
/// setting; only wall time changes.
struct KernelOptions {
  unsigned threads = 1;
  /// Amplitude groups per call below which the kernel stays single-threaded.
  std::size_t parallel_threshold = std::size_t{1} << 14;
};

StateVector new_zero_state(unsigned num_qubits);

/// Applies `gate` to `targets`, conditioned on every qubit in `controls`
/// being 1. The gate dimension must be 2^|targets|; targets and controls must
/// be disjoint and in range.
void apply_gate(StateVector& state, const UnitaryMatrix& gate,
                std::span<const Qubit> targets,
                std::span<const Qubit> controls = {},
                const KernelOptions& options = {});

/// Exact |amplitude|^2 table over all 2^n basis states.
MeasurementRecord probabilities(const StateVector& state);

/// Marginal distribution over `qubits`; the first listed qubit is the most
/// significant bit of the marginal label.
MeasurementRecord measure_subset(const StateVector& state,
                                 std::span<const Qubit> qubits);

/// Draws `shots` i.i.d. outcomes by inverse-CDF lookup. The generator is
/// std::mt19937_64 seeded with `seed`; each draw takes the top 53 bits of one
/// 64-bit output as a uniform double in [0, 1).
MeasurementRecord sample(const StateVector& state, std::uint64_t shots,
                         std::uint64_t seed);

/// Same sampling procedure over an arbitrary probability table; exposed so
/// marginals can be sampled with identical mechanics.
std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities,
                                         std::uint64_t shots,
                                         std::uint64_t seed);

}  // namespace qipsim

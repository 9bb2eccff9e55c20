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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qipsim/circuit.hpp"
#include "qipsim/state_vector.hpp"

namespace qipsim {

/// Integer-intensity grid, row-major, every pixel in [0, max_value].
struct ClassicalImage {
  unsigned width = 0;
  unsigned height = 0;
  std::uint32_t max_value = 255;
  std::vector<std::uint32_t> pixels;

  std::uint32_t at(unsigned row, unsigned col) const {
    return pixels[static_cast<std::size_t>(row) * width + col];
  }

  /// Throws DataError on a size mismatch, zero extent, zero max_value or an
  /// out-of-range pixel.
  void validate() const;

  friend bool operator==(const ClassicalImage&, const ClassicalImage&) = default;
};

/// Side exponent n of a square 2^n x 2^n image with n >= 1. Throws
/// InvalidArgument for anything else.
unsigned square_exponent(const ClassicalImage& image);

/// Per-pixel angles in [0, pi/2] for a 2^n x 2^n image, row-major.
struct AngleImage {
  unsigned n = 0;
  std::vector<double> angles;

  std::size_t num_pixels() const { return angles.size(); }
  /// Throws InvalidArgument if n < 1, the length is not 4^n, or an angle is
  /// outside [0, pi/2].
  void validate() const;
};

// FRQI layout: qubit 0 is the color qubit, qubits 1..2n hold the position
// index i = row * 2^n + col (qubit 1 most significant). The basis index of
// (color c, position i) is c * 4^n + i.
//
// Amplitude convention: (sin theta_i) on color 0 and (cos theta_i) on color 1,
// each scaled by 2^-n.
inline constexpr Qubit kFrqiColorQubit = 0;

/// Which color basis state carries sin(theta). Fixtures pin this to 0.
inline constexpr unsigned kFrqiSinColor = 0;

struct FrqiState {
  StateVector state;
  unsigned n = 0;

  std::size_t num_pixels() const { return std::size_t{1} << (2 * n); }
  BasisIndex index(unsigned color, std::size_t position) const {
    return (static_cast<BasisIndex>(color) << (2 * n)) | position;
  }
};

/// Position qubits of an FRQI register, most significant first.
std::vector<Qubit> frqi_position_qubits(unsigned n);

/// theta_i = (pi/2) * pixel_i / max_value.
AngleImage to_angles(const ClassicalImage& image);

/// Nearest integer intensity for each angle on a [0, max_value] scale.
ClassicalImage from_angles(const AngleImage& angles, std::uint32_t max_value);

/// Preparation circuit: Hadamards on the position qubits, then for every
/// position a Ry on the color qubit controlled by all position qubits, with
/// X conjugation on the position bits that are 0.
Circuit frqi_circuit(const AngleImage& angles);

/// Runs frqi_circuit on |0...0> and returns the state with its circuit.
std::pair<FrqiState, Circuit> frqi_prepare(const AngleImage& angles,
                                           const KernelOptions& options = {});

/// Direct amplitude construction of the FRQI state, without a circuit.
StateVector frqi_reference_state(const AngleImage& angles);

/// Wraps a state after checking the register holds 2n+1 qubits.
FrqiState as_frqi(StateVector state);

/// Recovers each angle as atan2(|sin amplitude|, |cos amplitude|). Magnitudes
/// make the result independent of a global phase. Throws MalformedState when
/// a position carries (almost) no probability.
AngleImage frqi_decode_exact(const FrqiState& frqi);

struct SampledAngles {
  /// std::nullopt for positions that received no shots.
  std::vector<std::optional<double>> angles;
  MeasurementRecord record;

  bool complete() const;
  /// Throws MalformedState if any position is unestimated.
  AngleImage to_angle_image(unsigned n) const;
};

/// Samples the full register and estimates each angle from the conditional
/// color frequencies at its position.
SampledAngles frqi_decode_sampled(const FrqiState& frqi, std::uint64_t shots,
                                  std::uint64_t seed);

/// Two-gate color-qubit circuit Ry(pi) then X on a (2n+1)-qubit register.
/// It maps theta_i to pi/2 - theta_i up to a global phase of -1.
Circuit frqi_invert_circuit(unsigned n);

/// Intensity complement on the state: decode(invert(s)) = pi/2 - theta.
FrqiState frqi_invert(const FrqiState& frqi);

// NEQR layout: qubits 0..q-1 hold the intensity (qubit 0 most significant),
// qubits q..q+2n-1 hold the position index. Basis index = f * 4^n + i.
struct NeqrState {
  StateVector state;
  unsigned n = 0;
  unsigned q = 0;

  std::size_t num_pixels() const { return std::size_t{1} << (2 * n); }
};

std::vector<Qubit> neqr_position_qubits(unsigned n, unsigned q);

/// Hadamards on the position qubits, then for every position a multi-
/// controlled X on each intensity qubit whose bit of f(X,Y) is 1.
Circuit neqr_circuit(const ClassicalImage& image, unsigned q);

/// Throws InvalidArgument if a pixel does not fit in q bits.
std::pair<NeqrState, Circuit> neqr_prepare(const ClassicalImage& image,
                                           unsigned q,
                                           const KernelOptions& options = {});

NeqrState as_neqr(StateVector state, unsigned q);

/// Exact recovery. `max_value` defaults to 2^q - 1. Throws MalformedState
/// when a position has zero or more than one populated intensity.
ClassicalImage neqr_decode(const NeqrState& neqr,
                           std::optional<std::uint32_t> max_value = {});

}  // namespace qipsim

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

#include <span>
#include <vector>

#include "qipsim/circuit.hpp"

namespace qipsim {

/// Exponent sign of a discrete Fourier transform:
/// out_k = N^{-1/2} sum_j exp(sign * 2 pi i j k / N) in_j.
enum class FourierSign : int { kNegative = -1, kPositive = +1 };

/// Default transform sign (positive exponent).
inline constexpr FourierSign kDefaultFourierSign = FourierSign::kPositive;

/// Parses +1/-1 style integers. Throws InvalidArgument otherwise.
FourierSign fourier_sign_from_int(int sign);

struct QftOptions {
  FourierSign sign = kDefaultFourierSign;
  /// Append the swap layer that restores natural output order. Without it
  /// the output amplitudes come out bit-reversed.
  bool reverse_output = true;
};

/// Textbook QFT on qubits 0..m-1: per wire a Hadamard followed by controlled
/// rotations from every lower wire, then floor(m/2) swaps.
///
/// The controlled rotations are R_n = diag(1, exp(-2 pi i / 2^n)) for the
/// negative sign and their adjoints for the positive sign, so the circuit
/// realizes dft_oracle(., sign). Throws InvalidArgument for m < 1.
Circuit qft_circuit(unsigned m, const QftOptions& options = {});

/// Direct O(N^2) evaluation of the unitary DFT. Throws InvalidArgument on an
/// empty input.
std::vector<Complex> dft_oracle(std::span<const Complex> amplitudes,
                                FourierSign sign = kDefaultFourierSign);

}  // namespace qipsim

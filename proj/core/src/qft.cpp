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

#include "qipsim/qft.hpp"

#include <cmath>
#include <numbers>

#include "qipsim/errors.hpp"

namespace qipsim {

FourierSign fourier_sign_from_int(int sign) {
  if (sign == 1) return FourierSign::kPositive;
  if (sign == -1) return FourierSign::kNegative;
  throw InvalidArgument("Fourier sign must be +1 or -1, got " +
                        std::to_string(sign));
}

Circuit qft_circuit(unsigned m, const QftOptions& options) {
  if (m < 1) throw InvalidArgument("QFT needs at least one qubit");
  const bool adjoint = options.sign == FourierSign::kPositive;
  Circuit c(m);
  for (Qubit wire = 0; wire < m; ++wire) {
    c.add(GateSpec::h(), {wire});
    for (Qubit lower = wire + 1; lower < m; ++lower) {
      c.add(GateSpec::rn(lower - wire + 1, adjoint), {wire}, {lower});
    }
  }
  if (options.reverse_output) {
    for (Qubit q = 0; q < m / 2; ++q) c.add(GateSpec::swap(), {q, m - 1 - q});
  }
  return c;
}

std::vector<Complex> dft_oracle(std::span<const Complex> amplitudes,
                                FourierSign sign) {
  const std::size_t n = amplitudes.size();
  if (n == 0) throw InvalidArgument("DFT of an empty vector");
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  const double base = static_cast<int>(sign) * 2.0 * std::numbers::pi /
                      static_cast<double>(n);
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      // Reduce j*k mod n first so the phase argument stays small and exact.
      const std::size_t jk = (j * k) % n;
      acc += std::polar(1.0, base * static_cast<double>(jk)) * amplitudes[j];
    }
    out[k] = acc * norm;
  }
  return out;
}

}  // namespace qipsim

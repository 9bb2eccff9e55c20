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

#include <gtest/gtest.h>

#include <cmath>

#include "qipsim/errors.hpp"
#include "qipsim/qft.hpp"
#include "support/oracles.hpp"

namespace qipsim {
namespace {

using testing::max_abs_diff;
using testing::random_state;

std::vector<Complex> run_qft(const StateVector& input, const QftOptions& opts) {
  StateVector s = input;
  run(qft_circuit(input.num_qubits(), opts), s);
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

TEST(Qft, SingleQubitIsHadamard) {
  for (FourierSign sign : {FourierSign::kNegative, FourierSign::kPositive}) {
    const Circuit c = qft_circuit(1, {sign, true});
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.ops()[0].spec, GateSpec::h());
  }
}

TEST(Qft, TwoQubitsOnZeroIsUniform) {
  const auto out = run_qft(new_zero_state(2), {});
  for (const Complex& a : out) {
    EXPECT_NEAR(a.real(), 0.5, 1e-15);
    EXPECT_NEAR(a.imag(), 0.0, 1e-15);
  }
}

TEST(Qft, CircuitMatchesDftOracle) {
  std::mt19937_64 rng(10);
  for (FourierSign sign : {FourierSign::kNegative, FourierSign::kPositive}) {
    for (unsigned m = 1; m <= 8; ++m) {
      for (int trial = 0; trial < 3; ++trial) {
        const StateVector in = random_state(m, rng);
        const auto expected = dft_oracle(in.amplitudes(), sign);
        EXPECT_LT(max_abs_diff(run_qft(in, {sign, true}), expected), 1e-10)
            << "m=" << m << " sign=" << static_cast<int>(sign);
      }
    }
  }
}

TEST(Qft, BasisStatesMatchOracle) {
  for (unsigned m = 1; m <= 5; ++m) {
    const std::size_t dim = std::size_t{1} << m;
    for (std::size_t k = 0; k < dim; ++k) {
      std::vector<Complex> amps(dim, 0.0);
      amps[k] = 1.0;
      const StateVector in = StateVector::from_amplitudes(m, amps);
      EXPECT_LT(max_abs_diff(run_qft(in, {}), dft_oracle(amps)), 1e-10);
    }
  }
}

TEST(DftOracle, AgreesWithDenseMatrix) {
  std::mt19937_64 rng(11);
  for (int sign : {-1, +1}) {
    for (std::size_t dim : {1u, 2u, 3u, 8u, 12u, 64u}) {
      const auto v = testing::random_amplitudes(dim, rng);
      const auto got = dft_oracle(v, fourier_sign_from_int(sign));
      testing::DenseVec dv(static_cast<Eigen::Index>(dim));
      for (std::size_t i = 0; i < dim; ++i) dv(static_cast<Eigen::Index>(i)) = v[i];
      const auto want = testing::dft_by_matrix(dv, sign);
      for (std::size_t i = 0; i < dim; ++i) {
        EXPECT_LT(std::abs(got[i] - want(static_cast<Eigen::Index>(i))), 1e-12);
      }
    }
  }
}

TEST(DftOracle, DeltaAndUniformAreDual) {
  const std::size_t dim = 16;
  std::vector<Complex> delta(dim, 0.0);
  delta[0] = 1.0;
  const auto spread = dft_oracle(delta);
  for (const Complex& a : spread) EXPECT_LT(std::abs(a - 0.25), 1e-15);
  const auto back = dft_oracle(spread);
  EXPECT_LT(std::abs(back[0] - 1.0), 1e-14);
  for (std::size_t i = 1; i < dim; ++i) EXPECT_LT(std::abs(back[i]), 1e-14);
}

TEST(DftOracle, PreservesNorm) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = testing::random_amplitudes(32, rng);
    double n = 0.0;
    for (const Complex& a : dft_oracle(v, FourierSign::kNegative)) n += std::norm(a);
    EXPECT_NEAR(n, 1.0, 1e-12);
  }
}

TEST(Qft, OppositeSignIsConjugateTransform) {
  // F_-(v) = conj(F_+(conj v)).
  std::mt19937_64 rng(13);
  for (unsigned m = 1; m <= 6; ++m) {
    const StateVector in = random_state(m, rng);
    std::vector<Complex> conj_in(in.amplitudes().begin(), in.amplitudes().end());
    for (auto& a : conj_in) a = std::conj(a);
    auto pos = run_qft(StateVector::from_amplitudes(m, conj_in), {FourierSign::kPositive, true});
    for (auto& a : pos) a = std::conj(a);
    EXPECT_LT(max_abs_diff(run_qft(in, {FourierSign::kNegative, true}), pos), 1e-10);
  }
}

TEST(Qft, OppositeSignsCancel) {
  std::mt19937_64 rng(14);
  for (unsigned m = 1; m <= 7; ++m) {
    StateVector s = random_state(m, rng);
    const StateVector before = s;
    run(qft_circuit(m, {FourierSign::kPositive, true}), s);
    run(qft_circuit(m, {FourierSign::kNegative, true}), s);
    EXPECT_LT(max_abs_diff(s.amplitudes(), before.amplitudes()), 1e-10);
  }
}

TEST(Qft, WithoutSwapsOutputIsBitReversed) {
  std::mt19937_64 rng(15);
  for (unsigned m = 1; m <= 6; ++m) {
    const StateVector in = random_state(m, rng);
    const auto with = run_qft(in, {FourierSign::kPositive, true});
    const auto without = run_qft(in, {FourierSign::kPositive, false});
    const std::size_t dim = std::size_t{1} << m;
    for (std::size_t k = 0; k < dim; ++k) {
      std::size_t rev = 0;
      for (unsigned b = 0; b < m; ++b) rev |= ((k >> b) & 1U) << (m - 1 - b);
      EXPECT_LT(std::abs(without[rev] - with[k]), 1e-12);
    }
    EXPECT_EQ(resources(qft_circuit(m, {FourierSign::kPositive, false})).count("swap"), 0u);
  }
}

TEST(Qft, RejectsBadArguments) {
  EXPECT_THROW(qft_circuit(0), InvalidArgument);
  EXPECT_THROW(dft_oracle(std::span<const Complex>{}), InvalidArgument);
  EXPECT_THROW(fourier_sign_from_int(0), InvalidArgument);
  EXPECT_THROW(fourier_sign_from_int(2), InvalidArgument);
}

}  // namespace
}  // namespace qipsim

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
#include <numbers>

#include "qipsim/errors.hpp"
#include "qipsim/gates.hpp"
#include "qipsim/image_codecs.hpp"
#include "qipsim/state_vector.hpp"
#include "support/oracles.hpp"

namespace qipsim {
namespace {

using testing::dense_controlled;
using testing::max_abs_diff;
using testing::pick_qubits;
using testing::random_state;
using testing::random_unitary;
using testing::to_dense;

TEST(NewZeroState, SingleQubit) {
  const StateVector s = new_zero_state(1);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], Complex(1.0, 0.0));
  EXPECT_EQ(s[1], Complex(0.0, 0.0));
}

TEST(NewZeroState, ThreeQubits) {
  const StateVector s = new_zero_state(3);
  ASSERT_EQ(s.size(), 8u);
  EXPECT_EQ(s[0], Complex(1.0, 0.0));
  for (BasisIndex i = 1; i < 8; ++i) EXPECT_EQ(s[i], Complex(0.0, 0.0));
}

TEST(NewZeroState, UnitNorm) { EXPECT_EQ(new_zero_state(5).norm(), 1.0); }

TEST(NewZeroState, RejectsOutOfRangeCounts) {
  EXPECT_THROW(new_zero_state(0), InvalidArgument);
  EXPECT_THROW(new_zero_state(kMaxQubits + 1), InvalidArgument);
  EXPECT_GE(kMaxQubits, 24u);
}

TEST(StateVector, FromAmplitudesValidates) {
  EXPECT_THROW(StateVector::from_amplitudes(1, {1.0}), InvalidArgument);
  EXPECT_THROW(StateVector::from_amplitudes(1, {1.0, 1.0}), InvalidArgument);
  EXPECT_THROW(StateVector::from_amplitudes(1, {std::nan(""), 0.0}), InvalidArgument);
  EXPECT_NO_THROW(StateVector::from_amplitudes(1, {0.6, Complex(0.0, 0.8)}));
}

TEST(UnitaryMatrix, RejectsNonUnitary) {
  EXPECT_THROW(UnitaryMatrix(2, {1.0, 1.0, 0.0, 1.0}), NotUnitary);
  EXPECT_THROW(UnitaryMatrix(3, std::vector<Complex>(9, 0.0)), InvalidArgument);
  EXPECT_THROW(UnitaryMatrix(2, {1.0, 0.0, 0.0}), InvalidArgument);
  // Just outside the 1e-12 construction tolerance.
  EXPECT_THROW(UnitaryMatrix(2, {1.0 + 1e-11, 0.0, 0.0, 1.0}), NotUnitary);
}

TEST(ApplyGate, CnotFlipsTargetWhenControlSet) {
  // |10>: qubit 0 (control) is 1, qubit 1 (target) is 0.
  StateVector s = StateVector::from_amplitudes(2, {0.0, 0.0, 1.0, 0.0});
  const std::vector<Qubit> t{1}, c{0};
  apply_gate(s, pauli_x(), t, c);
  EXPECT_EQ(s[0b11], Complex(1.0, 0.0));
  EXPECT_EQ(s[0b10], Complex(0.0, 0.0));
}

TEST(ApplyGate, CnotTwiceRestoresState) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    StateVector s = random_state(4, rng);
    const StateVector before = s;
    const auto q = pick_qubits(4, 2, rng);
    apply_gate(s, cnot(), q);
    apply_gate(s, cnot(), q);
    EXPECT_LT(max_abs_diff(s.amplitudes(), before.amplitudes()), 1e-12);
  }
}

TEST(ApplyGate, ConditionalPhaseShift) {
  const double phi = std::numbers::pi / 3;
  const std::vector<Qubit> t{1}, c{0};
  StateVector s11 = StateVector::from_amplitudes(2, {0.0, 0.0, 0.0, 1.0});
  apply_gate(s11, phase_shift(phi), t, c);
  EXPECT_LT(std::abs(s11[3] - std::polar(1.0, phi)), 1e-15);

  StateVector s10 = StateVector::from_amplitudes(2, {0.0, 0.0, 1.0, 0.0});
  apply_gate(s10, phase_shift(phi), t, c);
  EXPECT_EQ(s10[2], Complex(1.0, 0.0));
}

TEST(ApplyGate, RejectsBadIndices) {
  StateVector s = new_zero_state(3);
  const std::vector<Qubit> t0{0}, t3{3}, t01{0, 1};
  const std::vector<Qubit> c0{0};
  EXPECT_THROW(apply_gate(s, hadamard(), t0, c0), InvalidArgument);
  EXPECT_THROW(apply_gate(s, hadamard(), t3), InvalidArgument);
  EXPECT_THROW(apply_gate(s, hadamard(), t01), InvalidArgument);
  EXPECT_THROW(apply_gate(s, cnot(), t0), InvalidArgument);
  const std::vector<Qubit> dup{1, 1};
  EXPECT_THROW(apply_gate(s, cnot(), dup), InvalidArgument);
}

// Every random case is checked against the explicit 2^n x 2^n operator.
TEST(ApplyGate, MatchesDenseOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 6);
    const unsigned k = 1 + static_cast<unsigned>(rng() % std::min(3u, n));
    const unsigned c = static_cast<unsigned>(rng() % (n - k + 1));
    const auto picked = pick_qubits(n, k + c, rng);
    const std::vector<Qubit> targets(picked.begin(), picked.begin() + k);
    const std::vector<Qubit> controls(picked.begin() + k, picked.end());
    const UnitaryMatrix u = random_unitary(k, rng);
    StateVector s = random_state(n, rng);
    const auto expected =
        (dense_controlled(n, to_dense(u), targets, controls) * to_dense(s)).eval();
    apply_gate(s, u, targets, controls);
    EXPECT_LT(max_abs_diff(s, expected), 1e-10) << "n=" << n << " k=" << k;
  }
}

TEST(ApplyGate, PreservesNorm) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 8);
    StateVector s = random_state(n, rng);
    const auto q = pick_qubits(n, 2, rng);
    apply_gate(s, random_unitary(1, rng), std::vector<Qubit>{q[0]},
               std::vector<Qubit>{q[1]});
    apply_gate(s, random_unitary(2, rng), q);
    EXPECT_LT(std::abs(s.norm() - 1.0), 1e-10);
  }
}

TEST(ApplyGate, IsLinear) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 4;
    const auto a = testing::random_amplitudes(16, rng);
    const auto b = testing::random_amplitudes(16, rng);
    const Complex alpha{0.6, 0.3}, beta{-0.2, 0.7};
    std::vector<Complex> mix(16);
    for (std::size_t i = 0; i < 16; ++i) mix[i] = alpha * a[i] + beta * b[i];
    double nm = 0.0;
    for (const auto& z : mix) nm += std::norm(z);
    nm = std::sqrt(nm);
    for (auto& z : mix) z /= nm;

    const UnitaryMatrix u = random_unitary(2, rng);
    const auto q = pick_qubits(n, 3, rng);
    const std::vector<Qubit> t{q[0], q[1]}, c{q[2]};
    StateVector sa = StateVector::from_amplitudes(n, a);
    StateVector sb = StateVector::from_amplitudes(n, b);
    StateVector sm = StateVector::from_amplitudes(n, mix);
    apply_gate(sa, u, t, c);
    apply_gate(sb, u, t, c);
    apply_gate(sm, u, t, c);
    for (std::size_t i = 0; i < 16; ++i) {
      EXPECT_LT(std::abs(sm[i] * nm - (alpha * sa[i] + beta * sb[i])), 1e-10);
    }
  }
}

TEST(ApplyGate, LeavesUncontrolledAmplitudesBitIdentical) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 6;
    StateVector s = random_state(n, rng);
    const StateVector before = s;
    const auto q = pick_qubits(n, 3, rng);
    const std::vector<Qubit> t{q[0]}, c{q[1], q[2]};
    apply_gate(s, random_unitary(1, rng), t, c);
    const BasisIndex mask = s.bit_mask(q[1]) | s.bit_mask(q[2]);
    for (BasisIndex i = 0; i < s.size(); ++i) {
      if ((i & mask) != mask) {
        EXPECT_EQ(s[i], before[i]);
      }
    }
  }
}

TEST(ApplyGate, SelfInverseGates) {
  std::mt19937_64 rng(3);
  const std::vector<std::pair<UnitaryMatrix, unsigned>> gates{
      {pauli_x(), 1}, {hadamard(), 1}, {cnot(), 2}, {toffoli(), 3}, {swap(), 2}};
  for (const auto& [g, k] : gates) {
    StateVector s = random_state(5, rng);
    const StateVector before = s;
    const auto q = pick_qubits(5, k, rng);
    apply_gate(s, g, q);
    apply_gate(s, g, q);
    EXPECT_LT(max_abs_diff(s.amplitudes(), before.amplitudes()), 1e-12);
  }
}

TEST(ApplyGate, ThreadingIsBitIdentical) {
  std::mt19937_64 rng(1234);
  const StateVector start = random_state(16, rng);
  const UnitaryMatrix u1 = random_unitary(1, rng);
  const UnitaryMatrix u2 = random_unitary(2, rng);
  auto run_with = [&](unsigned threads, std::size_t threshold) {
    StateVector s = start;
    const KernelOptions opts{threads, threshold};
    apply_gate(s, u1, std::vector<Qubit>{3}, std::vector<Qubit>{9}, opts);
    apply_gate(s, u2, std::vector<Qubit>{15, 0}, {}, opts);
    apply_gate(s, u1, std::vector<Qubit>{7}, {}, opts);
    return s;
  };
  const StateVector serial = run_with(1, 0);
  for (unsigned threads : {2u, 3u, 4u, 7u}) {
    for (std::size_t threshold : {std::size_t{0}, std::size_t{1} << 10}) {
      EXPECT_EQ(run_with(threads, threshold), serial) << threads;
    }
  }
}

TEST(Probabilities, BasisAndHadamard) {
  const MeasurementRecord zero = probabilities(new_zero_state(1));
  EXPECT_EQ(zero.labels, (std::vector<std::string>{"0", "1"}));
  EXPECT_EQ(zero.probabilities, (std::vector<double>{1.0, 0.0}));
  EXPECT_FALSE(zero.sampled());

  StateVector s = new_zero_state(1);
  apply_gate(s, hadamard(), std::vector<Qubit>{0});
  const MeasurementRecord h = probabilities(s);
  EXPECT_NEAR(h.probabilities[0], 0.5, 1e-15);
  EXPECT_NEAR(h.probabilities[1], 0.5, 1e-15);
}

TEST(Probabilities, UniformImageIsUniformOverPositions) {
  // Constant angle: every position carries weight 1/4 split as sin^2/cos^2.
  const double t = 0.3;
  const AngleImage img{1, {t, t, t, t}};
  const auto [frqi, circuit] = frqi_prepare(img);
  const MeasurementRecord rec = probabilities(frqi.state);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(rec.probabilities[i], std::sin(t) * std::sin(t) / 4, 1e-12);
    EXPECT_NEAR(rec.probabilities[4 + i], std::cos(t) * std::cos(t) / 4, 1e-12);
  }
}

TEST(Sample, DeterministicState) {
  const MeasurementRecord rec = sample(new_zero_state(1), 100, 987654321);
  EXPECT_EQ(*rec.counts, (std::vector<std::uint64_t>{100, 0}));
  EXPECT_EQ(*rec.shots, 100u);
  EXPECT_EQ(*rec.seed, 987654321u);
}

TEST(Sample, HadamardFrequencies) {
  StateVector s = new_zero_state(1);
  apply_gate(s, hadamard(), std::vector<Qubit>{0});
  const MeasurementRecord rec = sample(s, 100000, 42);
  const MeasurementRecord exact = probabilities(s);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_NEAR(rec.probabilities[i], exact.probabilities[i], 0.01);
  }
  rec.validate();
}

TEST(Sample, SameSeedSameCounts) {
  std::mt19937_64 rng(8);
  const StateVector s = random_state(5, rng);
  EXPECT_EQ(sample(s, 5000, 77), sample(s, 5000, 77));
  EXPECT_NE(*sample(s, 5000, 77).counts, *sample(s, 5000, 78).counts);
}

TEST(Sample, ZeroProbabilityOutcomesNeverDrawn) {
  const StateVector s = StateVector::from_amplitudes(2, {0.0, 0.6, 0.0, 0.8});
  const MeasurementRecord rec = sample(s, 20000, 5);
  EXPECT_EQ((*rec.counts)[0], 0u);
  EXPECT_EQ((*rec.counts)[2], 0u);
}

// Re-derives the documented draw procedure (std::mt19937_64, top 53 bits,
// inverse CDF) by hand for a uniform table.
TEST(Sample, PinnedGeneratorOutput) {
  std::mt19937_64 rng(42);
  const std::vector<double> probs{0.25, 0.25, 0.25, 0.25};
  std::vector<std::uint64_t> expected(4, 0);
  for (int i = 0; i < 16; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    ++expected[static_cast<std::size_t>(u * 4.0)];
  }
  EXPECT_EQ(sample_counts(probs, 16, 42), expected);
}

TEST(Sample, RejectsZeroShots) {
  EXPECT_THROW(sample(new_zero_state(1), 0, 1), InvalidArgument);
}

TEST(MeasureSubset, SingleQubitFollowsMsbConvention) {
  // |10>: qubit 0 is 1, qubit 1 is 0.
  const StateVector s = StateVector::from_amplitudes(2, {0.0, 0.0, 1.0, 0.0});
  EXPECT_EQ(measure_subset(s, std::vector<Qubit>{0}).probabilities,
            (std::vector<double>{0.0, 1.0}));
  EXPECT_EQ(measure_subset(s, std::vector<Qubit>{1}).probabilities,
            (std::vector<double>{1.0, 0.0}));
}

TEST(MeasureSubset, AllQubitsEqualsProbabilities) {
  std::mt19937_64 rng(13);
  const StateVector s = random_state(4, rng);
  const std::vector<Qubit> all{0, 1, 2, 3};
  EXPECT_EQ(measure_subset(s, all), probabilities(s));
}

TEST(MeasureSubset, OrderDefinesLabelBits) {
  std::mt19937_64 rng(14);
  const StateVector s = random_state(3, rng);
  const auto fwd = measure_subset(s, std::vector<Qubit>{0, 2});
  const auto rev = measure_subset(s, std::vector<Qubit>{2, 0});
  EXPECT_DOUBLE_EQ(fwd.probabilities[0b01], rev.probabilities[0b10]);
  EXPECT_DOUBLE_EQ(fwd.probabilities[0b10], rev.probabilities[0b01]);
}

TEST(MeasureSubset, FrqiPositionMarginalTwoWays) {
  const AngleImage img = to_angles(ClassicalImage{2, 2, 5, {5, 1, 2, 3}});
  const auto [frqi, circuit] = frqi_prepare(img);
  const MeasurementRecord marginal = measure_subset(frqi.state, frqi_position_qubits(1));
  // Oracle: sum the full table over the color bit by hand.
  const MeasurementRecord full = probabilities(frqi.state);
  double total = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double by_hand = full.probabilities[i] + full.probabilities[4 + i];
    EXPECT_NEAR(marginal.probabilities[i], by_hand, 1e-12);
    EXPECT_NEAR(marginal.probabilities[i], 0.25, 1e-12);
    total += marginal.probabilities[i];
  }
  EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(MeasureSubset, RejectsBadIndexSets) {
  const StateVector s = new_zero_state(2);
  EXPECT_THROW(measure_subset(s, {}), InvalidArgument);
  EXPECT_THROW(measure_subset(s, std::vector<Qubit>{0, 0}), InvalidArgument);
  EXPECT_THROW(measure_subset(s, std::vector<Qubit>{2}), InvalidArgument);
}

TEST(MeasurementRecord, ValidateCatchesBrokenRecords) {
  MeasurementRecord rec{{"0", "1"}, {0.5, 0.6}, {}, {}, {}};
  EXPECT_THROW(rec.validate(), DataError);
  rec.probabilities = {0.5, 0.5};
  rec.counts = std::vector<std::uint64_t>{1, 2};
  rec.shots = 4;
  EXPECT_THROW(rec.validate(), DataError);
  rec.shots = 3;
  EXPECT_NO_THROW(rec.validate());
}

}  // namespace
}  // namespace qipsim

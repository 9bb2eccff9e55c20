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

#include "qipsim/image_codecs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "qipsim/errors.hpp"

namespace qipsim {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
// Position probability below this marks a non-FRQI / non-NEQR state.
constexpr double kEmptyWeight = 1e-12;

// Appends X gates on the position qubits whose bit of `position` is 0.
void flip_zero_bits(Circuit& c, const std::vector<Qubit>& pos_qubits,
                    std::size_t position) {
  const std::size_t bits = pos_qubits.size();
  for (std::size_t b = 0; b < bits; ++b) {
    if (((position >> (bits - 1 - b)) & 1U) == 0) {
      c.add(GateSpec::x(), {pos_qubits[b]});
    }
  }
}

}  // namespace

void ClassicalImage::validate() const {
  if (width == 0 || height == 0) throw DataError("image has zero extent");
  if (max_value == 0) throw DataError("image max_value must be positive");
  if (pixels.size() != static_cast<std::size_t>(width) * height) {
    throw DataError("image has " + std::to_string(pixels.size()) +
                    " pixels, expected " + std::to_string(width) + "x" +
                    std::to_string(height));
  }
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    if (pixels[i] > max_value) {
      throw DataError("pixel " + std::to_string(i) + " = " +
                      std::to_string(pixels[i]) + " exceeds max_value " +
                      std::to_string(max_value));
    }
  }
}

unsigned square_exponent(const ClassicalImage& image) {
  if (image.width != image.height || !std::has_single_bit(image.width) ||
      image.width < 2) {
    throw InvalidArgument("image must be 2^n x 2^n with n >= 1, got " +
                          std::to_string(image.width) + "x" +
                          std::to_string(image.height));
  }
  return static_cast<unsigned>(std::countr_zero(image.width));
}

void AngleImage::validate() const {
  if (n < 1) throw InvalidArgument("angle image needs n >= 1");
  if (2 * n + 1 > kMaxQubits) throw InvalidArgument("angle image too large");
  if (angles.size() != (std::size_t{1} << (2 * n))) {
    throw InvalidArgument("angle image with n=" + std::to_string(n) +
                          " needs " + std::to_string(std::size_t{1} << (2 * n)) +
                          " angles, got " + std::to_string(angles.size()));
  }
  for (double t : angles) {
    if (!(t >= 0.0 && t <= kHalfPi)) {
      throw InvalidArgument("angle " + std::to_string(t) +
                            " outside [0, pi/2]");
    }
  }
}

std::vector<Qubit> frqi_position_qubits(unsigned n) {
  std::vector<Qubit> out(2 * n);
  for (unsigned b = 0; b < 2 * n; ++b) out[b] = 1 + b;
  return out;
}

AngleImage to_angles(const ClassicalImage& image) {
  image.validate();
  AngleImage out;
  out.n = square_exponent(image);
  out.angles.reserve(image.pixels.size());
  const double max = static_cast<double>(image.max_value);
  for (std::uint32_t v : image.pixels) {
    out.angles.push_back(kHalfPi * (static_cast<double>(v) / max));
  }
  return out;
}

ClassicalImage from_angles(const AngleImage& angles, std::uint32_t max_value) {
  angles.validate();
  if (max_value == 0) throw InvalidArgument("max_value must be positive");
  ClassicalImage img;
  img.width = img.height = 1U << angles.n;
  img.max_value = max_value;
  img.pixels.reserve(angles.num_pixels());
  for (double t : angles.angles) {
    const double v = std::round(t / kHalfPi * max_value);
    img.pixels.push_back(
        static_cast<std::uint32_t>(std::clamp(v, 0.0, double(max_value))));
  }
  return img;
}

Circuit frqi_circuit(const AngleImage& angles) {
  angles.validate();
  const unsigned n = angles.n;
  const std::vector<Qubit> pos = frqi_position_qubits(n);
  Circuit c(2 * n + 1);
  for (Qubit q : pos) c.add(GateSpec::h(), {q});
  for (std::size_t i = 0; i < angles.num_pixels(); ++i) {
    // Ry(phi)|0> = cos(phi)|0> + sin(phi)|1>; phi = pi/2 - theta puts
    // sin(theta) on color 0 and cos(theta) on color 1.
    const double phi = kHalfPi - angles.angles[i];
    flip_zero_bits(c, pos, i);
    c.add(GateSpec::ry(phi), {kFrqiColorQubit}, pos);
    flip_zero_bits(c, pos, i);
  }
  return c;
}

std::pair<FrqiState, Circuit> frqi_prepare(const AngleImage& angles,
                                           const KernelOptions& options) {
  Circuit c = frqi_circuit(angles);
  StateVector s = StateVector::zero(c.num_qubits());
  run(c, s, options);
  return {FrqiState{std::move(s), angles.n}, std::move(c)};
}

StateVector frqi_reference_state(const AngleImage& angles) {
  angles.validate();
  const unsigned n = angles.n;
  const double scale = std::ldexp(1.0, -static_cast<int>(n));
  const std::size_t pixels = angles.num_pixels();
  std::vector<Complex> amps(2 * pixels, 0.0);
  for (std::size_t i = 0; i < pixels; ++i) {
    const double t = angles.angles[i];
    amps[kFrqiSinColor * pixels + i] = scale * std::sin(t);
    amps[(1 - kFrqiSinColor) * pixels + i] = scale * std::cos(t);
  }
  return StateVector::from_amplitudes(2 * n + 1, std::move(amps));
}

FrqiState as_frqi(StateVector state) {
  const unsigned qubits = state.num_qubits();
  if (qubits < 3 || qubits % 2 == 0) {
    throw MalformedState("FRQI registers have 2n+1 >= 3 qubits, got " +
                         std::to_string(qubits));
  }
  const unsigned n = (qubits - 1) / 2;
  return FrqiState{std::move(state), n};
}

AngleImage frqi_decode_exact(const FrqiState& frqi) {
  AngleImage out;
  out.n = frqi.n;
  out.angles.reserve(frqi.num_pixels());
  for (std::size_t i = 0; i < frqi.num_pixels(); ++i) {
    const double s = std::abs(frqi.state[frqi.index(kFrqiSinColor, i)]);
    const double c = std::abs(frqi.state[frqi.index(1 - kFrqiSinColor, i)]);
    if (s * s + c * c < kEmptyWeight) {
      throw MalformedState("position " + std::to_string(i) +
                           " carries no probability; not an FRQI state");
    }
    out.angles.push_back(std::atan2(s, c));
  }
  return out;
}

bool SampledAngles::complete() const {
  return std::all_of(angles.begin(), angles.end(),
                     [](const auto& a) { return a.has_value(); });
}

AngleImage SampledAngles::to_angle_image(unsigned n) const {
  AngleImage out;
  out.n = n;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (!angles[i]) {
      throw MalformedState("position " + std::to_string(i) +
                           " received no shots; angle not estimated");
    }
    out.angles.push_back(*angles[i]);
  }
  return out;
}

SampledAngles frqi_decode_sampled(const FrqiState& frqi, std::uint64_t shots,
                                  std::uint64_t seed) {
  SampledAngles out;
  out.record = sample(frqi.state, shots, seed);
  const auto& counts = *out.record.counts;
  out.angles.resize(frqi.num_pixels());
  for (std::size_t i = 0; i < frqi.num_pixels(); ++i) {
    const auto s = static_cast<double>(counts[frqi.index(kFrqiSinColor, i)]);
    const auto c = static_cast<double>(counts[frqi.index(1 - kFrqiSinColor, i)]);
    if (s + c > 0.0) out.angles[i] = std::atan2(std::sqrt(s), std::sqrt(c));
  }
  return out;
}

Circuit frqi_invert_circuit(unsigned n) {
  Circuit c(2 * n + 1);
  c.add(GateSpec::ry(std::numbers::pi), {kFrqiColorQubit});
  c.add(GateSpec::x(), {kFrqiColorQubit});
  return c;
}

FrqiState frqi_invert(const FrqiState& frqi) {
  FrqiState out = frqi;
  run(frqi_invert_circuit(frqi.n), out.state);
  return out;
}

std::vector<Qubit> neqr_position_qubits(unsigned n, unsigned q) {
  std::vector<Qubit> out(2 * n);
  for (unsigned b = 0; b < 2 * n; ++b) out[b] = q + b;
  return out;
}

Circuit neqr_circuit(const ClassicalImage& image, unsigned q) {
  image.validate();
  const unsigned n = square_exponent(image);
  if (q < 1 || q > 32) throw InvalidArgument("NEQR bit width must be in [1, 32]");
  if (2 * n + q > kMaxQubits) throw InvalidArgument("NEQR register too large");
  for (std::uint32_t v : image.pixels) {
    if (q < 32 && v >= (std::uint64_t{1} << q)) {
      throw InvalidArgument("pixel value " + std::to_string(v) +
                            " does not fit in " + std::to_string(q) + " bits");
    }
  }
  const std::vector<Qubit> pos = neqr_position_qubits(n, q);
  Circuit c(2 * n + q);
  for (Qubit p : pos) c.add(GateSpec::h(), {p});
  for (std::size_t i = 0; i < image.pixels.size(); ++i) {
    const std::uint32_t v = image.pixels[i];
    if (v == 0) continue;
    flip_zero_bits(c, pos, i);
    for (unsigned b = 0; b < q; ++b) {
      if ((v >> (q - 1 - b)) & 1U) c.add(GateSpec::x(), {b}, pos);
    }
    flip_zero_bits(c, pos, i);
  }
  return c;
}

std::pair<NeqrState, Circuit> neqr_prepare(const ClassicalImage& image,
                                           unsigned q,
                                           const KernelOptions& options) {
  Circuit c = neqr_circuit(image, q);
  StateVector s = StateVector::zero(c.num_qubits());
  run(c, s, options);
  const unsigned n = square_exponent(image);
  return {NeqrState{std::move(s), n, q}, std::move(c)};
}

NeqrState as_neqr(StateVector state, unsigned q) {
  const unsigned qubits = state.num_qubits();
  if (q < 1 || qubits < q + 2 || (qubits - q) % 2 != 0) {
    throw MalformedState("NEQR registers have 2n+q qubits with n >= 1; got " +
                         std::to_string(qubits) + " qubits for q=" +
                         std::to_string(q));
  }
  return NeqrState{std::move(state), (qubits - q) / 2, q};
}

ClassicalImage neqr_decode(const NeqrState& neqr,
                           std::optional<std::uint32_t> max_value) {
  if (neqr.n < 1) throw MalformedState("NEQR image needs n >= 1");
  const std::size_t pixels = neqr.num_pixels();
  const std::size_t levels = std::size_t{1} << neqr.q;
  ClassicalImage img;
  img.width = img.height = 1U << neqr.n;
  img.max_value = max_value.value_or(static_cast<std::uint32_t>(levels - 1));
  img.pixels.resize(pixels);
  for (std::size_t i = 0; i < pixels; ++i) {
    std::optional<std::size_t> found;
    for (std::size_t f = 0; f < levels; ++f) {
      if (std::norm(neqr.state[f * pixels + i]) < kEmptyWeight) continue;
      if (found) {
        throw MalformedState("position " + std::to_string(i) +
                             " holds intensities " + std::to_string(*found) +
                             " and " + std::to_string(f) +
                             " in superposition");
      }
      found = f;
    }
    if (!found) {
      throw MalformedState("position " + std::to_string(i) +
                           " carries no probability; not an NEQR state");
    }
    img.pixels[i] = static_cast<std::uint32_t>(*found);
  }
  img.validate();
  return img;
}

}  // namespace qipsim

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

#include "cli.hpp"

#include <bit>
#include <cstdlib>
#include <iostream>
#include <numeric>

#include "CLI11.hpp"
#include "qipsim/errors.hpp"
#include "qipsim/io.hpp"
#include "qipsim/qft.hpp"

namespace qipsim::cli {

namespace {

// Usage problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kConventionHelp =
    "Bit order: qubit 0 is the most significant bit of every basis label.\n"
    "FRQI: qubit 0 is the color qubit, qubits 1..2n the position "
    "(row * 2^n + col);\n  amplitude = 2^-n sin(theta) on color 0, "
    "2^-n cos(theta) on color 1,\n  theta = (pi/2) * pixel / max_value.\n"
    "NEQR: qubits 0..q-1 hold the intensity, qubits q..q+2n-1 the position.\n"
    "Seed: --seed, else $QIPSIM_SEED, else 1234.";

unsigned default_bits(std::uint32_t max_value) {
  return std::max(1U, static_cast<unsigned>(std::bit_width(max_value)));
}

io::Format output_format(const RunConfig& cfg, io::Format fallback) {
  if (!cfg.format.empty()) return io::parse_format(cfg.format);
  if (!cfg.output_path.empty()) {
    if (auto f = io::format_from_extension(cfg.output_path)) return *f;
  }
  return fallback;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output_path.empty()) {
    out << text;
  } else {
    io::write_file(cfg.output_path, text);
  }
}

bool looks_like_state_dump(const std::string& path) {
  if (io::format_from_extension(path) != io::Format::kJson) return false;
  const std::string text = io::read_file(path);
  return text.find("\"qipsim-state\"") != std::string::npos;
}

ClassicalImage load_image(const RunConfig& cfg) {
  io::Format fmt;
  if (!cfg.in_format.empty()) {
    fmt = io::parse_format(cfg.in_format);
  } else if (auto f = io::format_from_extension(cfg.input_path)) {
    fmt = *f;
  } else {
    throw DataError("cannot tell the image format of '" + cfg.input_path +
                    "'; pass --in-format");
  }
  return io::read_image(cfg.input_path, fmt, cfg.max_value);
}

io::StateDump encode_image(const RunConfig& cfg, const ClassicalImage& img) {
  const KernelOptions opts{cfg.threads};
  if (cfg.model == "frqi") {
    auto [frqi, circuit] = frqi_prepare(to_angles(img), opts);
    if (cfg.decompose) {
      StateVector s = StateVector::zero(circuit.num_qubits());
      run(lower_controlled_ry(circuit), s, opts);
      frqi.state = std::move(s);
    }
    return io::make_dump(frqi, img.max_value);
  }
  const unsigned q = cfg.bits.value_or(default_bits(img.max_value));
  auto [neqr, circuit] = neqr_prepare(img, q, opts);
  return io::make_dump(neqr, img.max_value);
}

// A state dump as-is, or an image encoded with --model.
io::StateDump load_state(const RunConfig& cfg) {
  if (looks_like_state_dump(cfg.input_path)) {
    return io::read_state_dump(cfg.input_path);
  }
  return encode_image(cfg, load_image(cfg));
}

std::vector<Qubit> register_qubits(const RunConfig& cfg,
                                   const io::StateDump& dump) {
  if (!cfg.qubits.empty()) return cfg.qubits;
  const unsigned total = dump.state.num_qubits();
  std::vector<Qubit> all(total);
  std::iota(all.begin(), all.end(), 0U);
  if (cfg.reg.empty() || cfg.reg == "all") return all;
  switch (dump.model) {
    case io::StateModel::kFrqi:
      if (cfg.reg == "position") return frqi_position_qubits(dump.n);
      if (cfg.reg == "color") return {kFrqiColorQubit};
      break;
    case io::StateModel::kNeqr:
      if (cfg.reg == "position") return neqr_position_qubits(dump.n, dump.q);
      if (cfg.reg == "intensity") {
        std::vector<Qubit> q(dump.q);
        std::iota(q.begin(), q.end(), 0U);
        return q;
      }
      break;
    case io::StateModel::kRaw:
      break;
  }
  throw DataError("register '" + cfg.reg + "' is not defined for a " +
                  std::string(io::model_name(dump.model)) + " state");
}

MeasurementRecord measure(const RunConfig& cfg, const StateVector& state,
                          const std::vector<Qubit>& qubits) {
  const bool whole = qubits.size() == state.num_qubits() &&
                     std::is_sorted(qubits.begin(), qubits.end());
  MeasurementRecord rec = whole ? probabilities(state) : measure_subset(state, qubits);
  if (!cfg.shots) return rec;
  std::vector<std::uint64_t> counts =
      sample_counts(rec.probabilities, *cfg.shots, cfg.seed);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    rec.probabilities[i] =
        static_cast<double>(counts[i]) / static_cast<double>(*cfg.shots);
  }
  rec.counts = std::move(counts);
  rec.shots = cfg.shots;
  rec.seed = cfg.seed;
  return rec;
}

void emit_distribution(const RunConfig& cfg, const MeasurementRecord& rec,
                       std::ostream& out) {
  const io::Format fmt = output_format(cfg, io::Format::kJson);
  if (fmt == io::Format::kPgm) throw UsageError("distributions are json or csv");
  if (cfg.histogram) out << io::render_histogram(rec);
  if (cfg.histogram && cfg.output_path.empty()) return;
  emit(cfg, io::distribution_to_string(rec, fmt), out);
}

int cmd_encode(const RunConfig& cfg, std::ostream& out) {
  const ClassicalImage img = load_image(cfg);
  const io::StateDump dump = encode_image(cfg, img);
  if (!cfg.circuit_out.empty()) {
    Circuit c = cfg.model == "frqi"
                    ? frqi_circuit(to_angles(img))
                    : neqr_circuit(img, dump.q);
    if (cfg.decompose) c = lower_controlled_ry(c);
    io::write_file(cfg.circuit_out, to_text(c));
  }
  emit(cfg, io::state_dump_to_json(dump), out);
  return kExitOk;
}

int cmd_invert(const RunConfig& cfg, std::ostream& out) {
  io::StateDump dump = load_state(cfg);
  if (dump.model != io::StateModel::kFrqi) {
    throw DataError("invert needs an FRQI state, got " +
                    std::string(io::model_name(dump.model)));
  }
  FrqiState inverted = frqi_invert(FrqiState{dump.state, dump.n});
  dump.state = std::move(inverted.state);
  emit(cfg, io::state_dump_to_json(dump), out);
  return kExitOk;
}

int cmd_decode(const RunConfig& cfg, std::ostream& out) {
  const io::StateDump dump = load_state(cfg);
  const io::Format fmt = output_format(cfg, io::Format::kPgm);
  ClassicalImage img;
  switch (dump.model) {
    case io::StateModel::kFrqi: {
      const FrqiState frqi{dump.state, dump.n};
      AngleImage angles;
      if (cfg.shots) {
        const SampledAngles est = frqi_decode_sampled(frqi, *cfg.shots, cfg.seed);
        angles = est.to_angle_image(dump.n);
      } else {
        angles = frqi_decode_exact(frqi);
      }
      img = from_angles(angles, dump.max_value);
      break;
    }
    case io::StateModel::kNeqr:
      img = neqr_decode(NeqrState{dump.state, dump.n, dump.q}, dump.max_value);
      break;
    case io::StateModel::kRaw:
      throw DataError("cannot decode a raw state into an image");
  }
  emit(cfg, io::image_to_string(img, fmt), out);
  return kExitOk;
}

int cmd_measure(const RunConfig& cfg, std::ostream& out) {
  const io::StateDump dump = load_state(cfg);
  emit_distribution(cfg, measure(cfg, dump.state, register_qubits(cfg, dump)), out);
  return kExitOk;
}

int cmd_qft(const RunConfig& cfg, std::ostream& out) {
  io::StateDump dump = load_state(cfg);
  // Images transform their position register unless told otherwise.
  RunConfig transform_cfg = cfg;
  if (transform_cfg.reg.empty() && dump.model != io::StateModel::kRaw) {
    transform_cfg.reg = "position";
  }
  const std::vector<Qubit> wires = register_qubits(transform_cfg, dump);

  QftOptions opts;
  opts.sign = fourier_sign_from_int(cfg.sign);
  opts.reverse_output = !cfg.no_swap;
  const Circuit qft = remap(qft_circuit(static_cast<unsigned>(wires.size()), opts),
                            dump.state.num_qubits(), wires);
  run(qft, dump.state, KernelOptions{cfg.threads});
  dump.model = io::StateModel::kRaw;

  if (!cfg.state_out.empty()) {
    io::write_state_dump(dump, cfg.state_out);
  }
  std::vector<Qubit> all(dump.state.num_qubits());
  std::iota(all.begin(), all.end(), 0U);
  emit_distribution(cfg, measure(cfg, dump.state, all), out);
  return kExitOk;
}

int cmd_resources(const RunConfig& cfg, std::ostream& out) {
  Circuit c(1);
  if (cfg.qft_qubits) {
    QftOptions opts;
    opts.sign = fourier_sign_from_int(cfg.sign);
    opts.reverse_output = !cfg.no_swap;
    c = qft_circuit(*cfg.qft_qubits, opts);
  } else {
    if (cfg.input_path.empty()) throw UsageError("resources needs --in or --qft");
    const ClassicalImage img = load_image(cfg);
    if (cfg.model == "frqi") {
      c = frqi_circuit(to_angles(img));
    } else {
      c = neqr_circuit(img, cfg.bits.value_or(default_bits(img.max_value)));
    }
  }
  if (cfg.decompose) c = lower_controlled_ry(c);
  if (!cfg.circuit_out.empty()) io::write_file(cfg.circuit_out, to_text(c));
  emit(cfg, io::resources_to_json(resources(c)), out);
  return kExitOk;
}

std::optional<std::uint64_t> seed_from_env() {
  const char* value = std::getenv(kSeedEnvVar);
  if (value == nullptr || *value == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(value, &end, 10);
  if (*end != '\0') {
    throw UsageError(std::string(kSeedEnvVar) + " must be an unsigned integer");
  }
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Quantum image processing simulator (FRQI / NEQR / QFT)", "qipsim"};
  app.footer(kConventionHelp);
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed_flag;
  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--in", cfg.input_path,
                               "Input image (.pgm/.csv/.json) or state dump (.json)");
    if (needs_input) in->required();
    sub->add_option("--out", cfg.output_path, "Output path (default: stdout)");
    sub->add_option("--model", cfg.model, "Image encoding")
        ->check(CLI::IsMember({"frqi", "neqr"}));
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"pgm", "csv", "json"}));
    sub->add_option("--in-format", cfg.in_format, "Input image format")
        ->check(CLI::IsMember({"pgm", "csv", "json"}));
    sub->add_option("--max", cfg.max_value, "Max intensity of CSV images (default 255)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--bits", cfg.bits, "NEQR intensity bits (default: fit max value)")
        ->check(CLI::Range(1U, 16U));
    sub->add_option("--seed", seed_flag, "Sampling seed");
    sub->add_option("--threads", cfg.threads, "Kernel threads")->check(CLI::Range(1U, 256U));
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--shots", cfg.shots, "Sample this many shots instead of exact "
                                          "probabilities")
        ->check(CLI::PositiveNumber);
  };
  auto add_register = [&](CLI::App* sub) {
    sub->add_option("--register", cfg.reg, "Qubit register: all, position, color, "
                                           "intensity")
        ->check(CLI::IsMember({"all", "position", "color", "intensity"}));
    sub->add_option("--qubits", cfg.qubits, "Explicit qubit list (overrides --register)")
        ->delimiter(',');
    sub->add_flag("--histogram", cfg.histogram, "Print an ASCII histogram");
  };

  auto* encode = app.add_subcommand("encode", "Encode an image into a state dump");
  add_common(encode, true);
  encode->add_flag("--decompose", cfg.decompose,
                   "Prepare through the CNOT + Ry decomposed circuit");
  encode->add_option("--circuit-out", cfg.circuit_out, "Write the preparation circuit");

  auto* decode = app.add_subcommand("decode", "Recover an image from a state");
  add_common(decode, true);
  add_sampling(decode);

  auto* measure_cmd = app.add_subcommand("measure", "Measurement distribution of a state");
  add_common(measure_cmd, true);
  add_sampling(measure_cmd);
  add_register(measure_cmd);

  auto* qft = app.add_subcommand("qft", "Apply the QFT and report the distribution");
  add_common(qft, true);
  add_sampling(qft);
  add_register(qft);
  qft->add_option("--sign", cfg.sign, "Exponent sign of the transform (+1 or -1)")
      ->check(CLI::IsMember({-1, 1}));
  qft->add_flag("--no-swap", cfg.no_swap, "Leave the output bit-reversed");
  qft->add_option("--state-out", cfg.state_out, "Also write the transformed state");

  auto* invert = app.add_subcommand("invert", "Complement the intensities of an FRQI state");
  add_common(invert, true);

  auto* res = app.add_subcommand("resources", "Gate counts and depth of a circuit");
  add_common(res, false);
  res->add_option("--qft", cfg.qft_qubits, "Report the QFT circuit on this many qubits")
      ->check(CLI::Range(1U, kMaxQubits));
  res->add_option("--sign", cfg.sign, "QFT sign (+1 or -1)")->check(CLI::IsMember({-1, 1}));
  res->add_flag("--no-swap", cfg.no_swap, "Omit the QFT swap layer");
  res->add_flag("--decompose", cfg.decompose, "Lower controlled Ry to CNOT + Ry");
  res->add_option("--circuit-out", cfg.circuit_out, "Write the circuit text");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (seed_flag) {
      cfg.seed = *seed_flag;
    } else if (auto env = seed_from_env()) {
      cfg.seed = *env;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "encode") return cmd_encode(cfg, out);
    if (cfg.command == "decode") return cmd_decode(cfg, out);
    if (cfg.command == "measure") return cmd_measure(cfg, out);
    if (cfg.command == "qft") return cmd_qft(cfg, out);
    if (cfg.command == "invert") return cmd_invert(cfg, out);
    if (cfg.command == "resources") return cmd_resources(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qipsim::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitData;
  }
  err << "error: unknown command\n";
  return kExitUsage;
}

}  // namespace qipsim::cli

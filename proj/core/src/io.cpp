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

#include "qipsim/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qipsim/errors.hpp"

namespace qipsim::io {

using nlohmann::ordered_json;

namespace {

std::string where(std::size_t line, std::size_t col) {
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t col;
};

// Whitespace-separated tokens with 1-based positions; '#' starts a comment
// running to end of line.
std::vector<Token> tokenize_pgm(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else {
      const std::size_t start = i, start_col = col;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '#') {
        ++i;
        ++col;
      }
      out.push_back({text.substr(start, i - start), line, start_col});
    }
  }
  return out;
}

std::uint32_t parse_uint(std::string_view tok, const std::string& at,
                         const char* what) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw DataError(at + ": expected " + what + ", got '" + std::string(tok) + "'");
  }
  return v;
}

void check_square(const ClassicalImage& img) {
  try {
    square_exponent(img);
  } catch (const InvalidArgument& e) {
    throw DataError(e.what());
  }
}

std::string format_probability(double p) {
  ordered_json j = round_to_12_digits(p);
  return j.dump();
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "pgm") return Format::kPgm;
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw InvalidArgument("unknown format '" + std::string(name) +
                        "' (expected pgm, csv or json)");
}

std::string_view format_name(Format format) {
  switch (format) {
    case Format::kPgm:
      return "pgm";
    case Format::kCsv:
      return "csv";
    case Format::kJson:
      return "json";
  }
  return "?";
}

std::optional<Format> format_from_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".pgm") return Format::kPgm;
  if (ext == ".csv") return Format::kCsv;
  if (ext == ".json") return Format::kJson;
  return std::nullopt;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw DataError("write to '" + path.string() + "' failed");
}

// ---------------------------------------------------------------------------
// Images

ClassicalImage parse_pgm(std::string_view text) {
  const std::vector<Token> toks = tokenize_pgm(text);
  if (toks.empty()) throw DataError("empty PGM file");
  if (toks[0].text != "P2") {
    throw DataError(where(toks[0].line, toks[0].col) +
                    ": expected plain PGM magic 'P2', got '" +
                    std::string(toks[0].text) + "'");
  }
  if (toks.size() < 4) throw DataError("PGM header truncated");
  ClassicalImage img;
  img.width = parse_uint(toks[1].text, where(toks[1].line, toks[1].col), "width");
  img.height = parse_uint(toks[2].text, where(toks[2].line, toks[2].col), "height");
  img.max_value = parse_uint(toks[3].text, where(toks[3].line, toks[3].col), "maxval");
  if (img.width == 0 || img.height == 0) throw DataError("PGM has zero extent");
  if (img.max_value == 0 || img.max_value > 65535) {
    throw DataError(where(toks[3].line, toks[3].col) +
                    ": maxval must be in [1, 65535]");
  }
  const std::size_t expected = std::size_t{img.width} * img.height;
  if (toks.size() - 4 != expected) {
    throw DataError("PGM declares " + std::to_string(expected) +
                    " pixels but holds " + std::to_string(toks.size() - 4));
  }
  img.pixels.reserve(expected);
  for (std::size_t i = 4; i < toks.size(); ++i) {
    const std::string at = where(toks[i].line, toks[i].col);
    const std::uint32_t v = parse_uint(toks[i].text, at, "pixel value");
    if (v > img.max_value) {
      throw DataError(at + ": pixel " + std::to_string(v) + " exceeds maxval " +
                      std::to_string(img.max_value));
    }
    img.pixels.push_back(v);
  }
  check_square(img);
  return img;
}

ClassicalImage parse_csv_image(std::string_view text, std::uint32_t max_value) {
  ClassicalImage img;
  img.max_value = max_value;
  if (max_value == 0) throw DataError("CSV max value must be positive");
  std::size_t line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(start, end - start);
    ++line;
    start = end + 1;
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    if (row.find_first_not_of(" \t") == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    unsigned cols = 0;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = row.find(',', pos);
      std::string_view cell = row.substr(pos, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - pos);
      std::size_t lead = cell.find_first_not_of(" \t");
      const std::size_t col = pos + 1 + (lead == std::string_view::npos ? 0 : lead);
      if (lead == std::string_view::npos) {
        throw DataError(where(line, col) + ": empty cell");
      }
      cell.remove_prefix(lead);
      cell = cell.substr(0, cell.find_last_not_of(" \t") + 1);
      const std::uint32_t v = parse_uint(cell, where(line, col), "integer");
      if (v > max_value) {
        throw DataError(where(line, col) + ": pixel " + std::to_string(v) +
                        " exceeds max value " + std::to_string(max_value));
      }
      img.pixels.push_back(v);
      ++cols;
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (img.height == 0) {
      img.width = cols;
    } else if (cols != img.width) {
      throw DataError("line " + std::to_string(line) + ": row has " +
                      std::to_string(cols) + " values, expected " +
                      std::to_string(img.width));
    }
    ++img.height;
    if (end == text.size()) break;
  }
  if (img.height == 0) throw DataError("empty CSV image");
  check_square(img);
  return img;
}

ClassicalImage parse_json_image(std::string_view text) {
  ClassicalImage img;
  try {
    const auto j = ordered_json::parse(text);
    img.width = j.at("width").get<unsigned>();
    img.height = j.at("height").get<unsigned>();
    img.max_value = j.at("max_value").get<std::uint32_t>();
    for (const auto& row : j.at("pixels")) {
      if (row.size() != img.width) throw DataError("JSON image row length mismatch");
      for (const auto& v : row) img.pixels.push_back(v.get<std::uint32_t>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("bad JSON image: ") + e.what());
  }
  img.validate();
  check_square(img);
  return img;
}

ClassicalImage read_image(const std::filesystem::path& path, Format format,
                          std::optional<std::uint32_t> csv_max_value) {
  const std::string text = read_file(path);
  try {
    switch (format) {
      case Format::kPgm:
        return parse_pgm(text);
      case Format::kCsv:
        return parse_csv_image(text, csv_max_value.value_or(kDefaultCsvMaxValue));
      case Format::kJson:
        return parse_json_image(text);
    }
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  throw DataError("unknown image format");
}

std::string image_to_string(const ClassicalImage& image, Format format) {
  image.validate();
  std::ostringstream os;
  switch (format) {
    case Format::kPgm:
      os << "P2\n" << image.width << ' ' << image.height << '\n'
         << image.max_value << '\n';
      for (unsigned r = 0; r < image.height; ++r) {
        for (unsigned c = 0; c < image.width; ++c) {
          os << (c ? " " : "") << image.at(r, c);
        }
        os << '\n';
      }
      break;
    case Format::kCsv:
      for (unsigned r = 0; r < image.height; ++r) {
        for (unsigned c = 0; c < image.width; ++c) {
          os << (c ? "," : "") << image.at(r, c);
        }
        os << '\n';
      }
      break;
    case Format::kJson: {
      ordered_json j;
      j["width"] = image.width;
      j["height"] = image.height;
      j["max_value"] = image.max_value;
      ordered_json rows = ordered_json::array();
      for (unsigned r = 0; r < image.height; ++r) {
        ordered_json row = ordered_json::array();
        for (unsigned c = 0; c < image.width; ++c) row.push_back(image.at(r, c));
        rows.push_back(std::move(row));
      }
      j["pixels"] = std::move(rows);
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

void write_image(const ClassicalImage& image, const std::filesystem::path& path,
                 Format format) {
  write_file(path, image_to_string(image, format));
}

// ---------------------------------------------------------------------------
// Distributions

double round_to_12_digits(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

std::string distribution_to_string(const MeasurementRecord& record,
                                   Format format) {
  record.validate(1e-9);
  if (format == Format::kJson) {
    ordered_json j;
    j["labels"] = record.labels;
    ordered_json probs = ordered_json::array();
    for (double p : record.probabilities) probs.push_back(round_to_12_digits(p));
    j["probabilities"] = std::move(probs);
    if (record.counts) j["counts"] = *record.counts;
    if (record.shots) j["shots"] = *record.shots;
    if (record.seed) j["seed"] = *record.seed;
    return j.dump(2) + "\n";
  }
  if (format == Format::kCsv) {
    std::string out = "label,probability,count\n";
    for (std::size_t i = 0; i < record.size(); ++i) {
      out += record.labels[i];
      out += ',';
      out += format_probability(record.probabilities[i]);
      out += ',';
      if (record.counts) out += std::to_string((*record.counts)[i]);
      out += '\n';
    }
    return out;
  }
  throw InvalidArgument("distributions are written as json or csv");
}

void write_distribution(const MeasurementRecord& record,
                        const std::filesystem::path& path, Format format) {
  write_file(path, distribution_to_string(record, format));
}

MeasurementRecord parse_distribution_json(std::string_view text) {
  MeasurementRecord rec;
  try {
    const auto j = ordered_json::parse(text);
    rec.labels = j.at("labels").get<std::vector<std::string>>();
    rec.probabilities = j.at("probabilities").get<std::vector<double>>();
    if (j.contains("counts")) {
      rec.counts = j.at("counts").get<std::vector<std::uint64_t>>();
    }
    if (j.contains("shots")) rec.shots = j.at("shots").get<std::uint64_t>();
    if (j.contains("seed")) rec.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("bad distribution JSON: ") + e.what());
  }
  rec.validate(1e-9);
  return rec;
}

MeasurementRecord read_distribution(const std::filesystem::path& path) {
  return parse_distribution_json(read_file(path));
}

std::string render_histogram(const MeasurementRecord& record) {
  std::size_t label_width = 0;
  for (const auto& l : record.labels) label_width = std::max(label_width, l.size());
  std::string out;
  char pct[32];
  for (std::size_t i = 0; i < record.size(); ++i) {
    const double p = std::clamp(record.probabilities[i], 0.0, 1.0);
    const auto filled = static_cast<std::size_t>(
        std::llround(p * static_cast<double>(kHistogramWidth)));
    std::snprintf(pct, sizeof pct, "%5.1f%%", 100.0 * p);
    out += "|" + record.labels[i] + ">";
    out.append(label_width - record.labels[i].size(), ' ');
    out += " |";
    out.append(filled, '#');
    out.append(kHistogramWidth - filled, ' ');
    out += "| ";
    out += pct;
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// State dumps

std::string_view model_name(StateModel model) {
  switch (model) {
    case StateModel::kFrqi:
      return "frqi";
    case StateModel::kNeqr:
      return "neqr";
    case StateModel::kRaw:
      return "raw";
  }
  return "?";
}

StateModel parse_model(std::string_view name) {
  if (name == "frqi") return StateModel::kFrqi;
  if (name == "neqr") return StateModel::kNeqr;
  if (name == "raw") return StateModel::kRaw;
  throw InvalidArgument("unknown model '" + std::string(name) +
                        "' (expected frqi or neqr)");
}

StateDump make_dump(const FrqiState& frqi, std::uint32_t max_value) {
  return StateDump{StateModel::kFrqi, frqi.n, 0, max_value, frqi.state};
}

StateDump make_dump(const NeqrState& neqr, std::uint32_t max_value) {
  return StateDump{StateModel::kNeqr, neqr.n, neqr.q, max_value, neqr.state};
}

std::string state_dump_to_json(const StateDump& dump) {
  ordered_json j;
  j["format"] = "qipsim-state";
  j["num_qubits"] = dump.state.num_qubits();
  j["model"] = std::string(model_name(dump.model));
  ordered_json layout;
  layout["bit_order"] = "qubit 0 is the most significant bit of the basis index";
  switch (dump.model) {
    case StateModel::kFrqi:
      j["n"] = dump.n;
      j["max_value"] = dump.max_value;
      layout["color_qubit"] = kFrqiColorQubit;
      layout["position_qubits"] = frqi_position_qubits(dump.n);
      j["layout"] = std::move(layout);
      j["convention"] =
          "amplitude(color=0, pos=i) = 2^-n sin(theta_i), "
          "amplitude(color=1, pos=i) = 2^-n cos(theta_i), "
          "theta_i = (pi/2) * pixel_i / max_value, pos = row * 2^n + col";
      break;
    case StateModel::kNeqr: {
      j["n"] = dump.n;
      j["q"] = dump.q;
      j["max_value"] = dump.max_value;
      std::vector<Qubit> intensity(dump.q);
      for (unsigned b = 0; b < dump.q; ++b) intensity[b] = b;
      layout["intensity_qubits"] = intensity;
      layout["position_qubits"] = neqr_position_qubits(dump.n, dump.q);
      j["layout"] = std::move(layout);
      j["convention"] =
          "amplitude 2^-n on |f(row,col)>|pos>, pos = row * 2^n + col";
      break;
    }
    case StateModel::kRaw:
      j["layout"] = std::move(layout);
      j["convention"] = "raw amplitudes";
      break;
  }
  ordered_json amps = ordered_json::array();
  for (const Complex& a : dump.state.amplitudes()) {
    amps.push_back(ordered_json::array({a.real(), a.imag()}));
  }
  j["amplitudes"] = std::move(amps);
  return j.dump(2) + "\n";
}

StateDump parse_state_dump(std::string_view text) {
  try {
    const auto j = ordered_json::parse(text);
    if (j.value("format", "") != "qipsim-state") {
      throw DataError("not a qipsim state dump (missing \"format\": \"qipsim-state\")");
    }
    const auto qubits = j.at("num_qubits").get<unsigned>();
    std::vector<Complex> amps;
    for (const auto& pair : j.at("amplitudes")) {
      if (pair.size() != 2) throw DataError("amplitude entries must be [re, im]");
      amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    StateDump dump;
    dump.model = parse_model(j.at("model").get<std::string>());
    dump.n = j.value("n", 0U);
    dump.q = j.value("q", 0U);
    dump.max_value = j.value("max_value", 0U);
    dump.state = StateVector::from_amplitudes(qubits, std::move(amps), 1e-9);
    if (dump.model == StateModel::kFrqi && qubits != 2 * dump.n + 1) {
      throw DataError("FRQI dump with n=" + std::to_string(dump.n) + " must have " +
                      std::to_string(2 * dump.n + 1) + " qubits");
    }
    if (dump.model == StateModel::kNeqr && qubits != 2 * dump.n + dump.q) {
      throw DataError("NEQR dump qubit count does not match 2n+q");
    }
    return dump;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("bad state JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw DataError(std::string("bad state JSON: ") + e.what());
  }
}

void write_state_dump(const StateDump& dump, const std::filesystem::path& path) {
  write_file(path, state_dump_to_json(dump));
}

StateDump read_state_dump(const std::filesystem::path& path) {
  try {
    return parse_state_dump(read_file(path));
  } catch (const DataError& e) {
    const std::string msg = e.what();
    if (msg.find(path.string()) != std::string::npos) throw;
    throw DataError(path.string() + ": " + msg);
  }
}

std::string resources_to_json(const ResourceReport& report) {
  ordered_json j;
  j["num_qubits"] = report.num_qubits;
  ordered_json counts = ordered_json::object();
  for (const auto& [k, v] : report.gate_count_by_kind) counts[k] = v;
  j["gate_count_by_kind"] = std::move(counts);
  j["total_elementary_gates"] = report.total_elementary_gates;
  j["circuit_depth"] = report.circuit_depth;
  return j.dump(2) + "\n";
}

}  // namespace qipsim::io

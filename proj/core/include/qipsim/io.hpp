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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "qipsim/circuit.hpp"
#include "qipsim/image_codecs.hpp"
#include "qipsim/state_vector.hpp"

namespace qipsim::io {

enum class Format { kPgm, kCsv, kJson };

/// "pgm" | "csv" | "json". Throws InvalidArgument otherwise.
Format parse_format(std::string_view name);
std::string_view format_name(Format format);
/// Format implied by the file extension, if recognized.
std::optional<Format> format_from_extension(const std::filesystem::path& path);

/// Default max_value for CSV images read without an explicit ceiling.
inline constexpr std::uint32_t kDefaultCsvMaxValue = 255;

/// Plain ASCII PGM ("P2"). Comments run from '#' to end of line. Errors name
/// the line and column of the offending token.
ClassicalImage parse_pgm(std::string_view text);

/// Comma-separated integer rows, one image row per line.
ClassicalImage parse_csv_image(std::string_view text,
                               std::uint32_t max_value = kDefaultCsvMaxValue);

/// JSON {"width", "height", "max_value", "pixels": [[...], ...]}.
ClassicalImage parse_json_image(std::string_view text);

/// Reads and validates an image. `csv_max_value` only applies to CSV input.
/// Throws DataError on a missing file, parse failure or bad pixel range.
ClassicalImage read_image(const std::filesystem::path& path, Format format,
                          std::optional<std::uint32_t> csv_max_value = {});

std::string image_to_string(const ClassicalImage& image, Format format);
void write_image(const ClassicalImage& image, const std::filesystem::path& path,
                 Format format);

/// Rounds to 12 significant decimal digits, the precision distributions are
/// written with.
double round_to_12_digits(double value);

/// JSON {labels, probabilities, counts?, shots?, seed?} with probabilities at
/// 12 significant digits, or CSV "label,probability,count" lines.
std::string distribution_to_string(const MeasurementRecord& record,
                                   Format format);
void write_distribution(const MeasurementRecord& record,
                        const std::filesystem::path& path, Format format);
MeasurementRecord parse_distribution_json(std::string_view text);
MeasurementRecord read_distribution(const std::filesystem::path& path);

/// One row per label: the label, a 50-character bar proportional to the
/// probability, and the percentage with one decimal.
std::string render_histogram(const MeasurementRecord& record);

inline constexpr std::size_t kHistogramWidth = 50;

/// Which encoding a state dump carries.
enum class StateModel { kFrqi, kNeqr, kRaw };
std::string_view model_name(StateModel model);
StateModel parse_model(std::string_view name);

/// Amplitude dump: a header pinning layout and conventions, plus the
/// amplitudes as [re, im] pairs indexed by basis state.
struct StateDump {
  StateModel model = StateModel::kRaw;
  unsigned n = 0;                 // image side exponent (frqi, neqr)
  unsigned q = 0;                 // intensity bits (neqr)
  std::uint32_t max_value = 0;    // source image ceiling (frqi, neqr)
  StateVector state = StateVector::zero(1);
};

StateDump make_dump(const FrqiState& frqi, std::uint32_t max_value);
StateDump make_dump(const NeqrState& neqr, std::uint32_t max_value);

std::string state_dump_to_json(const StateDump& dump);
StateDump parse_state_dump(std::string_view text);
void write_state_dump(const StateDump& dump, const std::filesystem::path& path);
StateDump read_state_dump(const std::filesystem::path& path);

std::string resources_to_json(const ResourceReport& report);

/// Reads a whole file. Throws DataError naming the path on failure.
std::string read_file(const std::filesystem::path& path);
/// Writes a whole file. Throws DataError naming the path on failure.
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace qipsim::io

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hypercode/codes.hpp"
#include "hypercode/compare.hpp"
#include "hypercode/complex.hpp"
#include "hypercode/homology.hpp"
#include "hypercode/hyperstructure.hpp"
#include "hypercode/synth.hpp"
#include "hypercode/topology.hpp"

namespace hypercode::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kLogSchema = "log/1";
inline constexpr const char* kHyperstructureSchema = "hyperstructure/1";
inline constexpr const char* kComplexSchema = "complex/1";
inline constexpr const char* kBarcodeSchema = "barcode-csv/1";
inline constexpr const char* kReportSchema = "comparison/1";
inline constexpr const char* kSynthSchema = "synth-spec/1";

/// `{n, bins: [{index, active: [...]}, ...]}`
Json to_json(const OccurrenceLog& log);
OccurrenceLog log_from_json(const Json& j);

/// `{n, config, levels: [[{id, constituents, count, bins}, ...], ...]}`
Json to_json(const Hyperstructure& h);
Hyperstructure hyperstructure_from_json(const Json& j);

Json to_json(const BuildConfig& c);
BuildConfig build_config_from_json(const Json& j);

/// `{vertices: [label, ...], maximal: [[idx, ...], ...]}`
Json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);

Json to_json(const Correspondence& c);
Json to_json(const ComparisonReport& r);

/// `{n, patterns: [{name, members}], schedule: [{bin, patterns}], noise_rate, seed}`
SynthSpec synth_spec_from_json(const Json& j);
Json to_json(const SynthSpec& s);

/// Header `level,dim,birth,death`; rows ordered by (level, dim, birth, death);
/// infinite deaths written as `inf`.
std::string barcode_csv(const std::vector<LevelBarcode>& bars);
std::vector<LevelBarcode> barcodes_from_csv(const std::string& text);

/// Shortest round-trip decimal, `inf` for infinity.
std::string format_real(double v);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace hypercode::io

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "prodcurves/collapse.hpp"
#include "prodcurves/gallery.hpp"
#include "prodcurves/treeembed.hpp"

namespace prodcurves::io {

using nlohmann::json;

inline constexpr std::string_view complex_format = "prodcurves-complex/1";
inline constexpr std::string_view simplicial_format = "prodcurves-simplicial/1";
inline constexpr std::string_view poset_format = "prodcurves-poset/1";
inline constexpr std::string_view witness_format = "prodcurves-collapse-witness/1";
inline constexpr std::string_view embedding_format = "prodcurves-embedding/1";
inline constexpr std::string_view report_format = "prodcurves-report/1";

inline constexpr std::string_view tool_version = "1.0.0";

json to_json(const Graph& g);  // as a one-factor complex
json to_json(const ProductSubcomplex& m);
json to_json(const SimplicialComplex& k);
json to_json(const FacePoset& x);
json to_json(const Payload& p);

// Dispatches on "format"; throws SchemaViolation on malformed documents.
Payload payload_from_json(const json& j);

json witness_to_json(std::span<const CollapseStep> steps);
std::vector<CollapseStep> witness_from_json(const json& j);

// Factors in the complex schema plus "map": source cell label -> target cell id tuples.
json embedding_to_json(const CellwiseMap& h);
CellwiseMap embedding_from_json(const json& j);

// Sorted keys, two-space indent, trailing newline.
std::string canonical(const json& j);
std::uint64_t fnv1a(std::string_view bytes);
// FNV-1a of the canonical text, as 16 hex digits.
std::string digest(const json& j);

json read_json(const std::filesystem::path& path);
// Writes via a sibling temporary file and a rename.
void write_atomic(const std::filesystem::path& path, std::string_view content);

// PRODCURVES_SEED when set and numeric, otherwise `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

struct Mesh {
  std::string off;
  std::vector<std::string> warnings;
};

// Schematic OFF for a 2-complex; throws NotExportable.
Mesh export_off(const Payload& p);

}  // namespace prodcurves::io

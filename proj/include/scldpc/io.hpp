#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "scldpc/lifting.hpp"
#include "scldpc/matrix.hpp"
#include "scldpc/protograph.hpp"
#include "scldpc/simulate.hpp"

namespace scldpc {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Plain-text matrix format: a `gamma_c=<n> gamma_l=<n>` header line followed
// by one row per line (0/1 for protographs, 0/1/X for partitions). Blank
// lines and `#` comments are ignored.
std::string format_protograph(const Protograph& b);
Protograph parse_protograph(const std::string& text);
std::string format_partition(const PartitionMatrix& p);
PartitionMatrix parse_partition(const std::string& text);

nlohmann::json protograph_to_json(const Protograph& b);
Protograph protograph_from_json(const nlohmann::json& j);
nlohmann::json partition_to_json(const PartitionMatrix& p);
PartitionMatrix partition_from_json(const nlohmann::json& j);

// MacKay alist serialization of a sparse binary matrix (padded degree lists).
std::string to_alist(const SparseBinaryMatrix& h);
SparseBinaryMatrix parse_alist(const std::string& text);

// Geometry sidecar for a lifted code; together with the alist it restores a
// LiftedCode exactly.
nlohmann::json code_geometry_json(const LiftedCode& code);
LiftedCode lifted_code_from_parts(const SparseBinaryMatrix& h, const nlohmann::json& geometry);

uint64_t fnv1a64(const std::string& data);

// Reproducibility manifest: tool info, command, seed, parameters; its hash is
// embedded in CSV outputs.
nlohmann::json make_manifest(const std::string& command, uint64_t seed,
                             const nlohmann::json& params);
std::string manifest_hash_hex(const nlohmann::json& manifest);

std::string ber_csv(const std::vector<BerPoint>& points, const std::string& mode,
                    const std::string& code_id, const std::string& manifest_hash);

}  // namespace scldpc

#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "gpw/structure.hpp"

namespace gpw {

/// GPS-JSON:
///   { "n": <int>, "gamma": [<label>...],
///     "ops": { "<label>": [[row 0], [row 1], ...], ... },
///     "leq": [[a, b], ...] }
/// "leq" lists pairs a <= b. Reflexive pairs may be omitted; the loader
/// takes the reflexive-transitive closure and rejects it if antisymmetry
/// fails. Throws InputError on any malformed field.
RawStructure parse_gps(const nlohmann::json& doc);

/// parse_gps followed by Structure::from_raw.
Structure load_gps(const nlohmann::json& doc);
Structure load_gps_text(const std::string& text);
/// Throws InputError when the file cannot be read or parsed.
Structure load_gps_file(const std::string& path);

/// Canonical form: labels in Γ order, "leq" as the sorted strict pairs.
nlohmann::json to_gps_json(const Structure& s);

/// Sorted keys, no whitespace.
std::string canonical_dump(const nlohmann::json& doc);

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

/// Folds `bytes` into a running FNV-1a 64 state.
std::uint64_t fnv1a64_update(std::uint64_t state, const std::string& bytes);

/// 16 lowercase hex digits.
std::string hex64(std::uint64_t v);

/// FNV-1a 64 of a string, as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::string& bytes);

/// "fnv1a64:" + hash of the canonical GPS-JSON text.
std::string structure_digest(const Structure& s);

}  // namespace gpw

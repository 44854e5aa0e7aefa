#pragma once

#include <string>

#include "json.hpp"

#include "armlab/finite_ring.hpp"
#include "armlab/monoid.hpp"
#include "armlab/property_lab.hpp"
#include "armlab/search.hpp"
#include "armlab/theorem_suite.hpp"

namespace armlab {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const StructureReport& r);
nlohmann::json to_json(const MonoidReport& r);
nlohmann::json to_json(const InstanceResult& r);
nlohmann::json to_json(const TheoremReport& r);
nlohmann::json to_json(const SearchResult& r);

// FNV-1a of the raw input text, as a fixed-width hex string.
std::string input_digest(const std::string& text);

// The versioned top-level report object. Keys are sorted (nlohmann keeps
// objects in key order), so identical inputs serialize byte-identically.
nlohmann::json make_envelope(const std::string& command,
                             const std::string& input,
                             nlohmann::json results);

// Re-checks every witness-bearing verdict found in an envelope against the
// given catalog. Returns the number verified; failures are appended to
// `problems`, witnesses whose structures are not in the catalog to `skipped`.
int verify_envelope(const nlohmann::json& envelope, const Catalog& cat,
                    std::vector<std::string>& problems,
                    std::vector<std::string>& skipped);

}  // namespace armlab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "armlab/catalog.hpp"
#include "armlab/property_lab.hpp"

namespace armlab {

// One hypothesis instance of a suite entry: which structures were plugged in
// and what happened.
struct InstanceResult {
  std::string instance;  // e.g. "R = T2_Z2, M = C3"
  std::string outcome;   // "pass" | "fail" | "vacuous" | "skipped"
  std::string detail;
  std::optional<Witness> witness;
};

struct TheoremReport {
  std::string id;
  std::string claim;   // one-line statement under test
  std::string bounds;  // description of the bounds/budget used
  std::vector<InstanceResult> instances;
  int passed = 0;
  int failed = 0;
  int vacuous = 0;
  int skipped = 0;
  bool ok = true;       // no failed instance
  bool probe = false;   // outcome is informational and does not gate the suite
  bool anomaly = false; // the literal claim is contradicted at desk scale
  std::string note;
};

// Fixed execution order of the verification suite.
const std::vector<std::string>& suite_entry_ids();

// Runs a single entry. Throws ValidationError for an unknown id.
TheoremReport run_suite(const std::string& id, const Catalog& cat,
                        const ArmBounds& bounds = {}, int workers = 1);

// All entries in order. The suite as a whole fails if any non-probe entry has
// a failed instance.
std::vector<TheoremReport> run_full_suite(const Catalog& cat,
                                          const ArmBounds& bounds = {},
                                          int workers = 1);

}  // namespace armlab

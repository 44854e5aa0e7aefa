#pragma once

#include <string>
#include <vector>

#include "armlab/catalog.hpp"
#include "armlab/property_lab.hpp"

namespace armlab {

// A structure matching the target expression, with the verdicts (and their
// witnesses) that establish the match.
struct SearchFinding {
  std::string ring;
  int size = 0;
  std::vector<Verdict> verdicts;
};

struct SearchResult {
  std::string target;
  std::vector<SearchFinding> findings;
  std::vector<std::string> skipped;  // structures with an undecidable atom
  bool partial = false;              // a budget cut the family short
  std::string note;
};

// Evaluates a boolean predicate expression over each ring produced by the
// family description, in deterministic order, and returns the matches.
//
// Expression atoms: commutative, reduced, central_reduced, abelian,
// two_primal, right_pp, baer, and plain_armendariz(M[, d]) /
// central_armendariz(M[, d]) / nil_armendariz(M[, d]) where M names a catalog
// monoid and d overrides the degree bound over the naturals. Operators:
// not/!/~, and/&, or/| and parentheses.
//
// Family entries (comma separated): catalog ring names, or
// subrings_of(NAME) which enumerates the distinct subrngs of NAME generated
// by one or two elements (capped at max_structures; the result is flagged
// partial when the cap cuts the sweep short).
SearchResult counterexample_search(const std::string& target,
                                   const std::string& family,
                                   const Catalog& cat,
                                   const ArmBounds& bounds = {},
                                   int workers = 1, int max_structures = 512);

}  // namespace armlab

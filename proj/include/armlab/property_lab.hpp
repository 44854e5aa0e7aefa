#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "armlab/finite_ring.hpp"
#include "armlab/monoid.hpp"
#include "armlab/monoid_ring.hpp"

namespace armlab {

enum class Status { Holds, Fails, HoldsUpToBound, BudgetExhausted };
std::string to_string(Status s);

// Reproducible counterexample to an Armendariz-style condition: alpha*beta = 0
// (or all coefficients of alpha*beta nilpotent for the nil variant) while the
// coefficient product a_i * b_j violates the target membership.
struct Witness {
  MrElem alpha, beta;
  int i = 0, j = 0;  // 0-based indices into the canonical term lists
  int product = 0;   // a_i * b_j
  std::optional<int> partner;  // r with product*r != r*product (central kind)
};

struct Verdict {
  Status status = Status::Holds;
  std::string property;  // e.g. "central_armendariz", "right_pp"
  std::string ring;
  std::string monoid;  // empty for classical predicates
  std::string bound;   // description of the exhausted domain
  std::string detail;  // human-readable extras (classical witnesses etc.)
  std::optional<Witness> witness;
};

enum class ClassicalProp { Reduced, CentralReduced, Abelian, TwoPrimal, RightPP, Baer };
std::string to_string(ClassicalProp p);

// Decisive Holds/Fails for any validated finite ring. TwoPrimal, RightPP and
// Baer require an identity and throw ValidationError on a rng.
Verdict check_classical(const FiniteRing& R, ClassicalProp prop);

enum class ArmKind { Plain, Central, Nil };
std::string to_string(ArmKind k);

struct ArmBounds {
  int degree = 3;        // naturals: supports inside {0..degree}
  int support_m = 3;     // naturals: max nonzero terms of alpha
  int support_n = 3;     // naturals: max nonzero terms of beta
  int ring_cap = 16;
  std::uint64_t node_budget = std::uint64_t(500) * 1000 * 1000;
};

// Bounded/exhaustive decision of the (plain | central | nil) Armendariz
// condition for R over M. Finite M: every support is all of M (zero
// coefficients realize the smaller supports) and the verdict is decisive.
// Naturals: supports within {0..degree} under the support caps, verdict
// HoldsUpToBound at best. The witness, when present, is the lexicographically
// first over (alpha tuple, beta tuple, i, j); identical for every worker count.
Verdict check_armendariz(const FiniteRing& R, const Monoid& M, ArmKind kind,
                         const ArmBounds& bounds = {}, int workers = 1);

// Independent re-check of a Fails witness through mr_mul and the membership
// scans; shares no state with the search path.
bool recheck_witness(const Witness& w, ArmKind kind);

// The optimized annihilating-pair scan, exposed for oracle agreement tests:
// calls fn(alpha, beta) for every pair over the full domain (all of finite M)
// with alpha*beta = 0, in (alpha tuple, beta tuple) lexicographic order.
void scan_zero_pairs(const FiniteRing& R, const Monoid& M,
                     const std::vector<MonoidElem>& domain,
                     const std::function<void(const MrElem&, const MrElem&)>& fn);

}  // namespace armlab

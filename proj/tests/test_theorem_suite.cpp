#include <algorithm>

#include "armlab/catalog.hpp"
#include "armlab/errors.hpp"
#include "armlab/theorem_suite.hpp"
#include "doctest.h"

using namespace armlab;

namespace {

const Catalog& cat() {
  static Catalog c = default_catalog();
  return c;
}

}  // namespace

TEST_CASE("unknown entry id is rejected") {
  CHECK_THROWS_AS(run_suite("thm_9_9", cat()), ValidationError);
}

TEST_CASE("entry list is fixed and complete") {
  const auto& ids = suite_entry_ids();
  CHECK(ids.size() == 12);
  CHECK(ids.front() == "remark_2_2");
  CHECK(ids.back() == "thm_2_18_19");
  CHECK(std::count(ids.begin(), ids.end(), "prop_2_17_probe") == 1);
}

TEST_CASE("basic-cases entry passes on the whole catalog") {
  TheoremReport r = run_suite("remark_2_2", cat());
  CHECK(r.ok);
  CHECK(r.failed == 0);
  CHECK(r.passed > 0);
  CHECK_FALSE(r.anomaly);
}

TEST_CASE("commutative-or-cancellative entry fails the checker everywhere") {
  TheoremReport r = run_suite("thm_2_4", cat());
  CHECK(r.ok);
  // 4 noncommutative rings x 2 non-cancellative monoids x (witness + checker)
  CHECK(r.passed == 16);
  for (const InstanceResult& i : r.instances)
    if (i.instance.rfind("checker:", 0) == 0) CHECK(i.witness.has_value());
}

TEST_CASE("equivalence entry covers every unital ring") {
  TheoremReport r = run_suite("prop_2_5", cat());
  CHECK(r.ok);
  CHECK(r.skipped == 1);  // the rng has no corner decomposition
  // witness instances appear for each non-abelian ring and monoid
  int witnesses = 0;
  for (const InstanceResult& i : r.instances)
    if (i.instance.rfind("witness:", 0) == 0) ++witnesses;
  CHECK(witnesses == 3 * 6);  // T2_Z2, T2_Z3, M2_Z2 over six monoids
}

TEST_CASE("p.p. implication and ideal lifting entries have no failures") {
  CHECK(run_suite("thm_2_8", cat()).ok);
  CHECK(run_suite("thm_2_10", cat()).ok);
}

TEST_CASE("split-example entry verifies all four statements") {
  TheoremReport r = run_suite("ex_2_13", cat());
  CHECK(r.ok);
  CHECK(r.passed == 4);
}

TEST_CASE("cyclic-group entry produces validated witnesses") {
  TheoremReport r = run_suite("lem_2_14", cat());
  CHECK(r.ok);
  // 4 noncommutative rings x n in {2,3,4} x (witness + checker)
  CHECK(r.passed == 24);
}

TEST_CASE("submonoid and monoid-ideal entries pass") {
  CHECK(run_suite("lem_2_15", cat()).ok);
  CHECK(run_suite("prop_2_16", cat()).ok);
}

TEST_CASE("torsion-free probe flags the anomaly without failing") {
  TheoremReport r = run_suite("prop_2_17_probe", cat());
  CHECK(r.ok);
  CHECK(r.probe);
  CHECK(r.anomaly);
}

TEST_CASE("trailing-idempotent entry passes at the size-8 sweep") {
  TheoremReport r = run_suite("thm_2_18_19", cat());
  CHECK(r.ok);
  CHECK(r.skipped > 0);  // the 16- and 32-element rings sit outside the sweep
}

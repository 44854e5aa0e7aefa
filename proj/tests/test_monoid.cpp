#include "armlab/errors.hpp"
#include "armlab/monoid.hpp"
#include "doctest.h"

using namespace armlab;

TEST_CASE("construction") {
  Monoid c1 = Monoid::cyclic(1);
  CHECK(c1.size() == 1);
  CHECK(c1.op(0, 0) == 0);

  Monoid c3 = Monoid::cyclic(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(c3.op(a, b) == MonoidElem((a + b) % 3));

  Monoid n1 = Monoid::null_adjoined(1);
  CHECK(n1.size() == 2);
  CHECK(n1.op(1, 1) == 1);  // z*z = z
  CHECK(n1.op(0, 1) == 1);
  CHECK(n1.op(1, 0) == 1);

  CHECK_THROWS_AS(
      Monoid::from_table("noassoc", {{0, 1, 2}, {1, 2, 0}, {2, 2, 2}}),
      ValidationError);  // (g*g)*g != g*(g*g)
  CHECK_THROWS_AS(Monoid::from_table("noid", {{1, 1}, {1, 1}}), ValidationError);
}

TEST_CASE("cancellativity, both implementations agree") {
  for (int n = 1; n <= 6; ++n) {
    Monoid m = Monoid::cyclic(n);
    MonoidReport rep = monoid_scan(m);
    CHECK(rep.cancellative);
    CHECK(rep.cancellative == cancellative_by_permutations(m));
  }
  for (int k = 1; k <= 2; ++k) {
    Monoid m = Monoid::null_adjoined(k);
    MonoidReport rep = monoid_scan(m);
    CHECK_FALSE(rep.cancellative);
    CHECK_FALSE(cancellative_by_permutations(m));
    REQUIRE(rep.cancellative_witness.has_value());
    auto [w_m, w_g, w_h] = *rep.cancellative_witness;
    CHECK(w_g != w_h);
    if (rep.cancellative_witness_side == "left")
      CHECK(m.op(w_m, w_g) == m.op(w_m, w_h));
    else
      CHECK(m.op(w_g, w_m) == m.op(w_h, w_m));
  }
}

TEST_CASE("unique product fails for nontrivial finite groups") {
  for (int n = 2; n <= 6; ++n) {
    MonoidReport rep = monoid_scan(Monoid::cyclic(n));
    CHECK_FALSE(rep.unique_product);
    REQUIRE(rep.up_witness.has_value());
    // re-count factorizations of the witness pair
    Monoid m = Monoid::cyclic(n);
    auto& [A, B] = *rep.up_witness;
    std::vector<int> cnt(n, 0);
    for (MonoidElem a : A)
      for (MonoidElem b : B) ++cnt[m.op(a, b)];
    for (int c : cnt) CHECK(c != 1);
  }
  // C2 in particular: A = B = {e, g} gives two factorizations of everything
  MonoidReport c2 = monoid_scan(Monoid::cyclic(2));
  CHECK_FALSE(c2.unique_product);
}

TEST_CASE("torsion in finite groups") {
  for (int n = 2; n <= 5; ++n) {
    MonoidReport rep = monoid_scan(Monoid::cyclic(n));
    CHECK(rep.is_group);
    CHECK(rep.torsion.size() == static_cast<size_t>(n - 1));
    CHECK_FALSE(rep.torsion_free);
  }
}

TEST_CASE("strict total orders on finite monoids") {
  CHECK(monoid_scan(Monoid::cyclic(1)).strict_total_order_exists);
  CHECK(strict_total_order_by_search(Monoid::cyclic(1)));
  for (int n = 2; n <= 4; ++n) {
    Monoid m = Monoid::cyclic(n);
    CHECK_FALSE(monoid_scan(m).strict_total_order_exists);
    CHECK_FALSE(strict_total_order_by_search(m));
  }
  for (int k = 1; k <= 2; ++k) {
    Monoid m = Monoid::null_adjoined(k);
    CHECK_FALSE(monoid_scan(m).strict_total_order_exists);
    CHECK_FALSE(strict_total_order_by_search(m));
  }
}

TEST_CASE("the naturals are axiomatic") {
  Monoid nat = Monoid::nat_add();
  CHECK(nat.is_nat());
  CHECK(nat.op(2, 3) == 5);
  MonoidReport rep = monoid_scan(nat);
  CHECK(rep.axiomatic);
  CHECK(rep.cancellative);
  CHECK(rep.unique_product);
  CHECK(rep.torsion_free);
  CHECK(rep.strict_total_order_exists);
}

TEST_CASE("submonoid restriction") {
  Monoid c4 = Monoid::cyclic(4);
  Monoid sub = Monoid::submonoid(c4, {0, 2}, "C4_even");
  CHECK(sub.size() == 2);
  CHECK(sub.op(1, 1) == 0);  // g^2 * g^2 = e
  CHECK_THROWS_AS(Monoid::submonoid(c4, {0, 1}, "bad"), ValidationError);
}

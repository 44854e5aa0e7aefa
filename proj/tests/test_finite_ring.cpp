#include <algorithm>
#include <set>

#include "armlab/catalog.hpp"
#include "armlab/errors.hpp"
#include "armlab/finite_ring.hpp"
#include "armlab/ring_spec.hpp"
#include "doctest.h"

using namespace armlab;

namespace {

// Independent 2x2 upper-triangular arithmetic over Z2, used to cross-check the
// table constructor. Entries (a, b, d) for the matrix (a b; 0 d).
struct UT2Z2 {
  int a, b, d;
  friend UT2Z2 operator*(UT2Z2 x, UT2Z2 y) {
    return {x.a * y.a % 2, (x.a * y.b + x.b * y.d) % 2, x.d * y.d % 2};
  }
  friend UT2Z2 operator+(UT2Z2 x, UT2Z2 y) {
    return {(x.a + y.a) % 2, (x.b + y.b) % 2, (x.d + y.d) % 2};
  }
};

// Index encoding of the constructor: big-endian over (a, b, d).
int enc(UT2Z2 m) { return m.a * 4 + m.b * 2 + m.d; }
UT2Z2 dec(int i) { return {i / 4, (i / 2) % 2, i % 2}; }

}  // namespace

TEST_CASE("zn basics") {
  FiniteRing z4 = construct_ring(RingSpec::zn(4));
  CHECK(z4.size() == 4);
  CHECK(z4.mul(2, 2) == 0);
  CHECK(z4.nilpotents() == std::vector<int>{0, 2});
  StructureReport rep = ring_scan(z4);
  CHECK(*rep.jacobson_radical == std::vector<int>{0, 2});

  FiniteRing z6 = construct_ring(RingSpec::zn(6));
  CHECK(ring_scan(z6).idempotents == std::vector<int>{0, 1, 3, 4});
  CHECK(static_cast<int>(z6.center().size()) == 6);
  CHECK(z6.commutative());
}

TEST_CASE("quaternions over Z2") {
  FiniteRing h = construct_ring(RingSpec::quaternion(RingSpec::zn(2)));
  CHECK(h.size() == 16);
  // coefficients big-endian (1, i, j, k)
  const int one_i = 0b1100, one_j = 0b1010, one_ijk = 0b1111;
  CHECK(h.mul(one_i, one_j) == one_ijk);
  CHECK(h.mul(one_i, one_j) != h.zero());
  CHECK(h.commutative());  // ij = k = -k = ji in characteristic 2
  CHECK(h.mul(one_i, one_i) == h.zero());  // (1+i)^2 = 0: not reduced
}

TEST_CASE("upper triangular matrices vs matrix oracle") {
  FiniteRing t = construct_ring(RingSpec::upper_triangular(RingSpec::zn(2), 2));
  REQUIRE(t.size() == 8);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      CHECK(t.mul(x, y) == enc(dec(x) * dec(y)));
      CHECK(t.add(x, y) == enc(dec(x) + dec(y)));
    }
  const int E12 = enc({0, 1, 0}), E22 = enc({0, 0, 1}), I = enc({1, 0, 1});
  CHECK(t.mul(E12, E12) == t.zero());
  CHECK(t.mul(E12, E22) == E12);
  CHECK(t.mul(E22, E12) == t.zero());
  CHECK_FALSE(t.commutative());
  CHECK(t.center() == std::vector<int>{t.zero(), I});
  StructureReport rep = ring_scan(t);
  CHECK(*rep.jacobson_radical == std::vector<int>{t.zero(), E12});
}

TEST_CASE("congruence subring of M2(Z4) has 32 elements") {
  const FiniteRing& r = default_catalog().ring("Cong2_Z4");
  CHECK(r.size() == 32);  // a in Z4, d in {a, a+2}, b, c in {0, 2}
  CHECK(r.has_one());
  CHECK(r.commutative());  // the mod-4 analogue collapses to a commutative ring
}

TEST_CASE("right annihilators") {
  FiniteRing z6 = construct_ring(RingSpec::zn(6));
  CHECK(right_annihilator(z6, {0}).size() == 6);
  CHECK(right_annihilator(z6, {2}) == std::vector<int>{0, 3});
  CHECK_THROWS_AS(right_annihilator(z6, {}), ValidationError);

  FiniteRing t = construct_ring(RingSpec::upper_triangular(RingSpec::zn(2), 2));
  const int E12 = 2;
  std::vector<int> ann = right_annihilator(t, {E12});
  CHECK(ann.size() == 4);
  for (int x : ann) CHECK(dec(x).d == 0);  // zero (2,2) entry

  // intersection of singleton annihilators agrees with the set form
  std::vector<int> both = right_annihilator(t, {E12, 4});
  std::vector<int> a1 = right_annihilator(t, {E12});
  std::vector<int> a2 = right_annihilator(t, {4});
  std::vector<int> meet;
  std::set_intersection(a1.begin(), a1.end(), a2.begin(), a2.end(),
                        std::back_inserter(meet));
  CHECK(both == meet);
}

TEST_CASE("ideal enumeration") {
  FiniteRing z6 = construct_ring(RingSpec::zn(6));
  auto ideals = enumerate_ideals(z6);
  REQUIRE(ideals.size() == 4);
  CHECK(ideals[0] == std::vector<int>{0});
  CHECK(ideals[1] == std::vector<int>{0, 3});
  CHECK(ideals[2] == std::vector<int>{0, 2, 4});
  CHECK(ideals[3].size() == 6);

  FiniteRing z5 = construct_ring(RingSpec::zn(5));
  CHECK(enumerate_ideals(z5).size() == 2);  // fields are simple

  // every returned set is independently closed under R-multiplication
  FiniteRing t = construct_ring(RingSpec::upper_triangular(RingSpec::zn(2), 2));
  for (const auto& I : enumerate_ideals(t)) {
    std::set<int> s(I.begin(), I.end());
    for (int x : I)
      for (int r = 0; r < t.size(); ++r) {
        CHECK(s.count(t.mul(r, x)));
        CHECK(s.count(t.mul(x, r)));
      }
  }
  // the upper row (a b; 0 0) is among them
  auto tideals = enumerate_ideals(t);
  std::vector<int> row = {0, 2, 4, 6};
  CHECK(std::find(tideals.begin(), tideals.end(), row) != tideals.end());
}

TEST_CASE("quotient and corner") {
  FiniteRing z6 = construct_ring(RingSpec::zn(6));
  FiniteRing c = construct_ring(RingSpec::corner(RingSpec::zn(6), 4));
  CHECK(c.size() == 3);  // 4*Z6 = {0, 2, 4}
  CHECK(c.has_one());
  CHECK(c.elem_name(*c.one()) == "4");

  CHECK_THROWS_AS(construct_ring(RingSpec::corner(RingSpec::zn(6), 2)),
                  ValidationError);  // 2 is not idempotent
  CHECK_THROWS_AS(construct_ring(RingSpec::quotient(RingSpec::zn(6), {1})),
                  ValidationError);  // {0,1} is not an ideal

  FiniteRing q = construct_ring(RingSpec::quotient(RingSpec::zn(6), {0, 2, 4}));
  CHECK(q.size() == 2);

  // J(R) consists of nilpotents in a finite ring
  FiniteRing z8 = construct_ring(RingSpec::zn(8));
  StructureReport rep8 = ring_scan(z8);
  for (int x : *rep8.jacobson_radical) CHECK(z8.is_nilpotent(x));
}

TEST_CASE("axiom violations are reported with the failing law") {
  // 2-element "ring" with a broken multiplication table
  std::vector<std::uint16_t> add = {0, 1, 1, 0};
  std::vector<std::uint16_t> bad_mul = {0, 1, 0, 1};  // not right-distributive
  CHECK_THROWS_AS(FiniteRing("bad", 2, add, bad_mul, std::nullopt),
                  ValidationError);
}

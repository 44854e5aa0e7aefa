#include "armlab/catalog.hpp"

#include "armlab/errors.hpp"
#include "armlab/ring_spec.hpp"

namespace armlab {

void Catalog::add_ring(std::shared_ptr<FiniteRing> r) {
  if (has_ring(r->name()) || has_monoid(r->name()))
    throw ValidationError("catalog: duplicate name " + r->name());
  rings_.push_back(std::move(r));
}

void Catalog::add_monoid(std::shared_ptr<Monoid> m) {
  if (has_ring(m->name()) || has_monoid(m->name()))
    throw ValidationError("catalog: duplicate name " + m->name());
  monoids_.push_back(std::move(m));
}

const FiniteRing& Catalog::ring(const std::string& name) const {
  for (const auto& r : rings_)
    if (r->name() == name) return *r;
  throw ValidationError("catalog: unknown ring " + name);
}

const Monoid& Catalog::monoid(const std::string& name) const {
  for (const auto& m : monoids_)
    if (m->name() == name) return *m;
  throw ValidationError("catalog: unknown monoid " + name);
}

bool Catalog::has_ring(const std::string& name) const {
  for (const auto& r : rings_)
    if (r->name() == name) return true;
  return false;
}

bool Catalog::has_monoid(const std::string& name) const {
  for (const auto& m : monoids_)
    if (m->name() == name) return true;
  return false;
}

std::vector<const Monoid*> Catalog::finite_monoids_ge2() const {
  std::vector<const Monoid*> out;
  for (const auto& m : monoids_)
    if (!m->is_nat() && m->size() >= 2) out.push_back(m.get());
  return out;
}

Catalog default_catalog() {
  Catalog cat;
  auto put = [&](RingSpec spec, const std::string& name) {
    spec.name = name;
    cat.add_ring(std::make_shared<FiniteRing>(construct_ring(spec)));
  };
  put(RingSpec::zn(2), "Z2");
  put(RingSpec::zn(3), "Z3");
  put(RingSpec::zn(4), "Z4");
  put(RingSpec::zn(6), "Z6");
  put(RingSpec::zn(8), "Z8");
  put(RingSpec::product(RingSpec::zn(2), RingSpec::zn(2)), "Z2xZ2");
  put(RingSpec::upper_triangular(RingSpec::zn(2), 2), "T2_Z2");
  put(RingSpec::upper_triangular(RingSpec::zn(3), 2), "T2_Z3");
  put(RingSpec::matrix(RingSpec::zn(2), 2), "M2_Z2");
  put(RingSpec::quaternion(RingSpec::zn(2)), "H_Z2");
  // 2x2 matrices over Z4 with a = d and b = c = 0 (mod 2); entries are encoded
  // big-endian row-major in M2(Z4).
  cat.add_ring(std::make_shared<FiniteRing>(construct_ring(RingSpec::subring_pred(
      RingSpec::matrix(RingSpec::zn(4), 2),
      [](const FiniteRing&, int idx) {
        int d = idx % 4, c = (idx / 4) % 4, b = (idx / 16) % 4, a = idx / 64;
        return a % 2 == d % 2 && b % 2 == 0 && c % 2 == 0;
      },
      "Cong2_Z4"))));
  // Upper-row rng of T2(Z2): matrices (a b; 0 0); generated by E11 and E12.
  put(RingSpec::subring(RingSpec::upper_triangular(RingSpec::zn(2), 2), {4, 2}),
      "Row_Z2");

  cat.add_monoid(std::make_shared<Monoid>(
      Monoid::from_table("trivial", {{0}}, {"e"})));
  for (int n = 2; n <= 5; ++n)
    cat.add_monoid(std::make_shared<Monoid>(Monoid::cyclic(n)));
  cat.add_monoid(std::make_shared<Monoid>(Monoid::null_adjoined(1)));
  cat.add_monoid(std::make_shared<Monoid>(Monoid::null_adjoined(2)));
  cat.add_monoid(std::make_shared<Monoid>(Monoid::nat_add()));
  return cat;
}

}  // namespace armlab

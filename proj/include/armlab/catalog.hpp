#pragma once

#include <memory>
#include <string>
#include <vector>

#include "armlab/finite_ring.hpp"
#include "armlab/monoid.hpp"

namespace armlab {

// Named structures every checker and suite entry draws from. All members are
// validated at load; names are unique.
class Catalog {
 public:
  void add_ring(std::shared_ptr<FiniteRing> r);
  void add_monoid(std::shared_ptr<Monoid> m);

  const FiniteRing& ring(const std::string& name) const;
  const Monoid& monoid(const std::string& name) const;
  bool has_ring(const std::string& name) const;
  bool has_monoid(const std::string& name) const;

  const std::vector<std::shared_ptr<FiniteRing>>& rings() const { return rings_; }
  const std::vector<std::shared_ptr<Monoid>>& monoids() const { return monoids_; }

  // Finite monoids with at least two elements.
  std::vector<const Monoid*> finite_monoids_ge2() const;

 private:
  std::vector<std::shared_ptr<FiniteRing>> rings_;
  std::vector<std::shared_ptr<Monoid>> monoids_;
};

// Z2..Z8, Z2xZ2, T2/M2 matrix rings, quaternions over Z2, the 32-element
// congruence subring of M2(Z4), and the 4-element upper-row rng of T2(Z2);
// monoids: trivial, C2..C5, N1, N2, nat.
Catalog default_catalog();

}  // namespace armlab

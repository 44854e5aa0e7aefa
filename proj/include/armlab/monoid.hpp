#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace armlab {

using MonoidElem = std::uint64_t;

// Either a finite monoid given by a Cayley table, or the symbolic additive
// monoid of the naturals with its standard order. Immutable.
class Monoid {
 public:
  static Monoid cyclic(int n);
  static Monoid null_adjoined(int k);
  static Monoid nat_add();
  // Explicit table; the identity is located and associativity validated.
  static Monoid from_table(std::string name,
                           std::vector<std::vector<int>> table,
                           std::vector<std::string> elem_names = {});
  // Restriction of a finite monoid to a submonoid (indices must contain the
  // identity and be closed under the operation).
  static Monoid submonoid(const Monoid& parent, std::vector<int> elems,
                          std::string name);
  // Copy under a different display name (configs alias constructions).
  static Monoid with_name(Monoid m, std::string name);

  const std::string& name() const { return name_; }
  bool is_nat() const { return nat_; }
  int size() const { return size_; }  // 0 for the naturals
  MonoidElem identity() const { return nat_ ? 0 : identity_; }
  MonoidElem op(MonoidElem a, MonoidElem b) const {
    return nat_ ? a + b : table_[static_cast<size_t>(a) * size_ + b];
  }
  std::string elem_name(MonoidElem g) const;

 private:
  Monoid() = default;
  std::string name_;
  bool nat_ = false;
  int size_ = 0;
  MonoidElem identity_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::string> elem_names_;
};

struct MonoidReport {
  std::string monoid;
  int size = 0;        // 0 for the naturals
  bool axiomatic = false;  // true when the flags below are by definition (naturals)
  bool cancellative = false;
  // side "left"/"right", witness (m, g, h) with mg = mh or gm = hm, g != h
  std::optional<std::array<MonoidElem, 3>> cancellative_witness;
  std::string cancellative_witness_side;
  bool unique_product = false;
  std::optional<std::pair<std::vector<MonoidElem>, std::vector<MonoidElem>>>
      up_witness;  // subsets A, B with no uniquely factored product
  bool is_group = false;
  std::vector<MonoidElem> torsion;  // non-identity elements of finite order
  bool torsion_free = false;
  bool strict_total_order_exists = false;
};

// Exhaustive scan of a finite monoid, or the axiomatic answers for the
// naturals. The u.p. subset sweep is limited to size <= up_budget.
MonoidReport monoid_scan(const Monoid& M, int up_budget = 12);

// Cross-check path: cancellativity via the rows-and-columns-are-permutations
// criterion.
bool cancellative_by_permutations(const Monoid& M);

// Cross-check path for tiny monoids: search all total orders for one that is
// strictly compatible with the operation.
bool strict_total_order_by_search(const Monoid& M);

}  // namespace armlab

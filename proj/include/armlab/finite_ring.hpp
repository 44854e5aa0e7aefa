#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace armlab {

// A finite ring (or rng: `one` may be absent) given by full Cayley tables on
// the carrier {0, ..., size-1}. Immutable after construction; construction
// validates every axiom (abelian group under +, associative *, two-sided
// distributivity, identity law when `one` is present).
class FiniteRing {
 public:
  FiniteRing(std::string name, int size, std::vector<std::uint16_t> add_table,
             std::vector<std::uint16_t> mul_table, std::optional<int> one,
             std::vector<std::string> elem_names = {});

  const std::string& name() const { return name_; }
  int size() const { return n_; }
  int zero() const { return zero_; }
  std::optional<int> one() const { return one_; }
  bool has_one() const { return one_.has_value(); }

  int add(int a, int b) const { return add_[static_cast<size_t>(a) * n_ + b]; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }

  bool commutative() const { return commutative_; }
  bool is_central(int a) const { return central_[a]; }
  bool is_nilpotent(int a) const { return nilpotent_[a]; }
  bool is_idempotent(int a) const { return mul(a, a) == a; }

  // Sorted element-index lists, computed once at construction.
  const std::vector<int>& center() const { return center_; }
  const std::vector<int>& nilpotents() const { return nilpotents_; }
  const std::vector<int>& idempotents() const { return idempotents_; }

  std::string elem_name(int a) const;

 private:
  void validate() const;

  std::string name_;
  int n_;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<std::uint16_t> neg_;
  int zero_ = 0;
  std::optional<int> one_;
  std::vector<std::string> elem_names_;
  bool commutative_ = false;
  std::vector<bool> central_, nilpotent_;
  std::vector<int> center_, nilpotents_, idempotents_;
};

struct StructureReport {
  std::string ring;
  int size = 0;
  bool has_one = false;
  bool commutative = false;
  std::vector<int> center;
  std::vector<int> idempotents;
  std::vector<int> nilpotents;
  std::optional<std::vector<int>> units;            // needs `one`
  std::optional<std::vector<int>> jacobson_radical; // needs `one`
  std::string note;
};

// Full structural scan. Units and the radical are omitted for rngs.
StructureReport ring_scan(const FiniteRing& R);

// {x : s*x = 0 for all s in S}. S must be nonempty.
std::vector<int> right_annihilator(const FiniteRing& R, const std::vector<int>& S);

// All two-sided ideals, sorted by (size, lexicographic element set).
// Throws BudgetError if R.size() > cap.
std::vector<std::vector<int>> enumerate_ideals(const FiniteRing& R, int cap = 64);

}  // namespace armlab

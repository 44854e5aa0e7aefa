#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "armlab/finite_ring.hpp"
#include "armlab/monoid.hpp"

namespace armlab {

struct MrTerm {
  MonoidElem g;
  int coeff;
};

// Finite-support element of R[M] in canonical form: support sorted, no zero
// coefficients. Operands of different rings or monoids never mix.
class MrElem {
 public:
  MrElem(const FiniteRing* R, const Monoid* M) : R_(R), M_(M) {}
  static MrElem from_terms(const FiniteRing& R, const Monoid& M,
                           std::vector<MrTerm> terms);

  const FiniteRing& ring() const { return *R_; }
  const Monoid& monoid() const { return *M_; }
  const std::vector<MrTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const MrElem& a, const MrElem& b);

 private:
  const FiniteRing* R_;
  const Monoid* M_;
  std::vector<MrTerm> terms_;
};

MrElem mr_add(const MrElem& x, const MrElem& y);
MrElem mr_neg(const MrElem& x);
// Convolution: the coefficient of w is the sum of x_g * y_h over g*h = w.
MrElem mr_mul(const MrElem& x, const MrElem& y);

// "a1*g1 + a2*g2 + ..." with catalog element names; "0" when zero.
std::string render(const MrElem& x);

// Streams the |R|^|support| coefficient assignments over a fixed support, in
// lexicographic order of coefficient tuples (first support element most
// significant). Throws BudgetError if the count exceeds `budget`.
class MrEnumerator {
 public:
  MrEnumerator(const FiniteRing& R, const Monoid& M,
               std::vector<MonoidElem> support,
               std::uint64_t budget = std::uint64_t(1) << 26);
  // Advances to the next assignment; false when exhausted. The first call
  // yields the all-zero tuple.
  bool next();
  const std::vector<int>& coeffs() const { return coeffs_; }
  MrElem element() const;
  std::uint64_t total() const { return total_; }

 private:
  const FiniteRing& R_;
  const Monoid& M_;
  std::vector<MonoidElem> support_;
  std::vector<int> coeffs_;
  std::uint64_t total_, index_ = 0;
  bool started_ = false;
};

// For an idempotent f over the naturals, the coefficient at the minimal
// support element; it is itself idempotent, which is asserted. f must satisfy
// f*f = f (checked; ValidationError otherwise). Returns the ring zero for f = 0.
int trailing_idempotent(const MrElem& f);

}  // namespace armlab

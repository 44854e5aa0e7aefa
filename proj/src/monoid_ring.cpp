#include "armlab/monoid_ring.hpp"

#include <algorithm>
#include <map>

#include "armlab/errors.hpp"

namespace armlab {

namespace {

void check_same(const MrElem& x, const MrElem& y) {
  if (&x.ring() != &y.ring() || &x.monoid() != &y.monoid())
    throw ValidationError("monoid ring: mixed operands (" + x.ring().name() +
                          "[" + x.monoid().name() + "] vs " + y.ring().name() +
                          "[" + y.monoid().name() + "])");
}

}  // namespace

MrElem MrElem::from_terms(const FiniteRing& R, const Monoid& M,
                          std::vector<MrTerm> terms) {
  std::map<MonoidElem, int> acc;
  for (const MrTerm& t : terms) {
    if (t.coeff < 0 || t.coeff >= R.size())
      throw ValidationError(R.name() + ": coefficient index out of range");
    if (!M.is_nat() && t.g >= static_cast<MonoidElem>(M.size()))
      throw ValidationError(M.name() + ": support element out of range");
    auto [it, fresh] = acc.emplace(t.g, t.coeff);
    if (!fresh) it->second = R.add(it->second, t.coeff);
  }
  MrElem e(&R, &M);
  for (auto [g, c] : acc)
    if (c != R.zero()) e.terms_.push_back({g, c});
  return e;
}

bool operator==(const MrElem& a, const MrElem& b) {
  check_same(a, b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].g != b.terms_[i].g || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

MrElem mr_add(const MrElem& x, const MrElem& y) {
  check_same(x, y);
  std::vector<MrTerm> terms = x.terms();
  terms.insert(terms.end(), y.terms().begin(), y.terms().end());
  return MrElem::from_terms(x.ring(), x.monoid(), std::move(terms));
}

MrElem mr_neg(const MrElem& x) {
  std::vector<MrTerm> terms;
  for (const MrTerm& t : x.terms()) terms.push_back({t.g, x.ring().neg(t.coeff)});
  return MrElem::from_terms(x.ring(), x.monoid(), std::move(terms));
}

MrElem mr_mul(const MrElem& x, const MrElem& y) {
  check_same(x, y);
  const FiniteRing& R = x.ring();
  const Monoid& M = x.monoid();
  std::map<MonoidElem, int> acc;
  for (const MrTerm& a : x.terms())
    for (const MrTerm& b : y.terms()) {
      MonoidElem w = M.op(a.g, b.g);
      int p = R.mul(a.coeff, b.coeff);
      auto [it, fresh] = acc.emplace(w, p);
      if (!fresh) it->second = R.add(it->second, p);
    }
  std::vector<MrTerm> terms;
  for (auto [g, c] : acc) terms.push_back({g, c});
  return MrElem::from_terms(R, M, std::move(terms));
}

std::string render(const MrElem& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const MrTerm& t : x.terms()) {
    if (!s.empty()) s += " + ";
    s += x.ring().elem_name(t.coeff) + "*" + x.monoid().elem_name(t.g);
  }
  return s;
}

MrEnumerator::MrEnumerator(const FiniteRing& R, const Monoid& M,
                           std::vector<MonoidElem> support, std::uint64_t budget)
    : R_(R), M_(M), support_(std::move(support)) {
  for (size_t i = 1; i < support_.size(); ++i)
    if (support_[i - 1] >= support_[i])
      throw ValidationError("enumeration support must be strictly increasing");
  total_ = 1;
  for (size_t i = 0; i < support_.size(); ++i) {
    total_ *= static_cast<std::uint64_t>(R_.size());
    if (total_ > budget)
      throw BudgetError("element enumeration over " + R_.name() + " with support size " +
                        std::to_string(support_.size()) + " exceeds budget");
  }
  coeffs_.assign(support_.size(), 0);
}

bool MrEnumerator::next() {
  if (!started_) {
    started_ = true;
    index_ = 1;
    return true;
  }
  if (index_ >= total_) return false;
  ++index_;
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
    if (++coeffs_[i] < R_.size()) return true;
    coeffs_[i] = 0;
  }
  return false;  // support empty: single (empty) assignment
}

MrElem MrEnumerator::element() const {
  std::vector<MrTerm> terms;
  for (size_t i = 0; i < support_.size(); ++i)
    terms.push_back({support_[i], coeffs_[i]});
  return MrElem::from_terms(R_, M_, std::move(terms));
}

int trailing_idempotent(const MrElem& f) {
  if (!f.monoid().is_nat())
    throw ValidationError("trailing_idempotent: ordered monoid (naturals) required");
  if (!(mr_mul(f, f) == f))
    throw ValidationError("trailing_idempotent: element is not idempotent");
  if (f.is_zero()) return f.ring().zero();
  int c = f.terms().front().coeff;
  if (f.ring().mul(c, c) != c)
    throw ValidationError("trailing_idempotent: minimal coefficient not idempotent");
  return c;
}

}  // namespace armlab

#include "armlab/finite_ring.hpp"

#include <algorithm>
#include <set>

#include "armlab/errors.hpp"

namespace armlab {

FiniteRing::FiniteRing(std::string name, int size,
                       std::vector<std::uint16_t> add_table,
                       std::vector<std::uint16_t> mul_table,
                       std::optional<int> one,
                       std::vector<std::string> elem_names)
    : name_(std::move(name)),
      n_(size),
      add_(std::move(add_table)),
      mul_(std::move(mul_table)),
      one_(one),
      elem_names_(std::move(elem_names)) {
  if (n_ <= 0) throw ValidationError(name_ + ": size must be positive");
  if (n_ > 0xffff) throw ValidationError(name_ + ": size exceeds table range");
  const size_t nn = static_cast<size_t>(n_) * n_;
  if (add_.size() != nn || mul_.size() != nn)
    throw ValidationError(name_ + ": table size mismatch");
  for (size_t i = 0; i < nn; ++i)
    if (add_[i] >= n_ || mul_[i] >= n_)
      throw ValidationError(name_ + ": table entry out of range");

  // Locate the additive identity.
  int z = -1;
  for (int c = 0; c < n_ && z < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n_; ++x)
      if (add(c, x) != x || add(x, c) != x) { ok = false; break; }
    if (ok) z = c;
  }
  if (z < 0) throw ValidationError(name_ + ": no additive identity");
  zero_ = z;

  neg_.assign(n_, 0);
  for (int x = 0; x < n_; ++x) {
    int inv = -1;
    for (int y = 0; y < n_; ++y)
      if (add(x, y) == zero_ && add(y, x) == zero_) { inv = y; break; }
    if (inv < 0)
      throw ValidationError(name_ + ": element " + std::to_string(x) +
                            " has no additive inverse");
    neg_[x] = static_cast<std::uint16_t>(inv);
  }

  validate();

  central_.assign(n_, false);
  commutative_ = true;
  for (int x = 0; x < n_; ++x) {
    bool c = true;
    for (int y = 0; y < n_; ++y)
      if (mul(x, y) != mul(y, x)) { c = false; break; }
    central_[x] = c;
    if (c) center_.push_back(x);
    else commutative_ = false;
  }
  nilpotent_.assign(n_, false);
  for (int x = 0; x < n_; ++x) {
    int p = x;
    for (int k = 1; k <= n_; ++k) {
      if (p == zero_) { nilpotent_[x] = true; break; }
      p = mul(p, x);
    }
    if (nilpotent_[x]) nilpotents_.push_back(x);
  }
  for (int x = 0; x < n_; ++x)
    if (mul(x, x) == x) idempotents_.push_back(x);
}

void FiniteRing::validate() const {
  auto triple = [this](const char* law, int a, int b, int c) {
    return name_ + ": " + law + " fails at (" + std::to_string(a) + ", " +
           std::to_string(b) + ", " + std::to_string(c) + ")";
  };
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (add(a, b) != add(b, a))
        throw ValidationError(name_ + ": addition not commutative at (" +
                              std::to_string(a) + ", " + std::to_string(b) + ")");
      for (int c = 0; c < n_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c)))
          throw ValidationError(triple("additive associativity", a, b, c));
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw ValidationError(triple("multiplicative associativity", a, b, c));
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          throw ValidationError(triple("left distributivity", a, b, c));
        if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
          throw ValidationError(triple("right distributivity", a, b, c));
      }
    }
  if (one_) {
    if (*one_ < 0 || *one_ >= n_)
      throw ValidationError(name_ + ": identity index out of range");
    for (int x = 0; x < n_; ++x)
      if (mul(*one_, x) != x || mul(x, *one_) != x)
        throw ValidationError(name_ + ": identity law fails at " +
                              std::to_string(x));
  }
}

std::string FiniteRing::elem_name(int a) const {
  if (a >= 0 && a < static_cast<int>(elem_names_.size())) return elem_names_[a];
  return std::to_string(a);
}

StructureReport ring_scan(const FiniteRing& R) {
  StructureReport rep;
  rep.ring = R.name();
  rep.size = R.size();
  rep.has_one = R.has_one();
  rep.commutative = R.commutative();
  rep.center = R.center();
  rep.idempotents = R.idempotents();
  rep.nilpotents = R.nilpotents();
  if (R.has_one()) {
    const int one = *R.one();
    std::vector<bool> unit(R.size(), false);
    std::vector<int> units;
    for (int x = 0; x < R.size(); ++x)
      for (int y = 0; y < R.size(); ++y)
        if (R.mul(x, y) == one && R.mul(y, x) == one) {
          unit[x] = true;
          units.push_back(x);
          break;
        }
    std::vector<int> jac;
    for (int x = 0; x < R.size(); ++x) {
      bool in = true;
      for (int r = 0; r < R.size(); ++r)
        if (!unit[R.sub(one, R.mul(r, x))]) { in = false; break; }
      if (in) jac.push_back(x);
    }
    rep.units = std::move(units);
    rep.jacobson_radical = std::move(jac);
    rep.note = "prime radical taken as J(R); the two coincide for finite rings";
  } else {
    rep.note = "rng without identity: units and radical not defined";
  }
  return rep;
}

std::vector<int> right_annihilator(const FiniteRing& R, const std::vector<int>& S) {
  if (S.empty()) throw ValidationError(R.name() + ": right annihilator of empty set");
  std::vector<int> out;
  for (int x = 0; x < R.size(); ++x) {
    bool ok = true;
    for (int s : S)
      if (R.mul(s, x) != R.zero()) { ok = false; break; }
    if (ok) out.push_back(x);
  }
  return out;
}

namespace {

// Smallest two-sided ideal containing `seed`.
std::vector<int> ideal_closure(const FiniteRing& R, std::vector<int> seed) {
  std::set<int> in(seed.begin(), seed.end());
  in.insert(R.zero());
  std::vector<int> work(in.begin(), in.end());
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    auto push = [&](int v) {
      if (in.insert(v).second) work.push_back(v);
    };
    push(R.neg(x));
    for (int y : std::vector<int>(in.begin(), in.end())) push(R.add(x, y));
    for (int r = 0; r < R.size(); ++r) {
      push(R.mul(r, x));
      push(R.mul(x, r));
    }
  }
  return {in.begin(), in.end()};
}

}  // namespace

std::vector<std::vector<int>> enumerate_ideals(const FiniteRing& R, int cap) {
  if (R.size() > cap)
    throw BudgetError(R.name() + ": ideal enumeration cap " + std::to_string(cap) +
                      " exceeded (size " + std::to_string(R.size()) + ")");
  std::set<std::vector<int>> ideals;
  ideals.insert({R.zero()});
  std::vector<std::vector<int>> work(ideals.begin(), ideals.end());
  while (!work.empty()) {
    std::vector<int> I = work.back();
    work.pop_back();
    std::set<int> members(I.begin(), I.end());
    for (int x = 0; x < R.size(); ++x) {
      if (members.count(x)) continue;
      std::vector<int> seed = I;
      seed.push_back(x);
      std::vector<int> J = ideal_closure(R, std::move(seed));
      if (ideals.insert(J).second) work.push_back(std::move(J));
    }
  }
  std::vector<std::vector<int>> out(ideals.begin(), ideals.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace armlab

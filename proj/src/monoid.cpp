#include "armlab/monoid.hpp"

#include <algorithm>
#include <numeric>

#include "armlab/errors.hpp"

namespace armlab {

Monoid Monoid::cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic: order must be >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
  Monoid m = from_table("C" + std::to_string(n), std::move(t), std::move(names));
  return m;
}

Monoid Monoid::null_adjoined(int k) {
  if (k < 1) throw ValidationError("null_adjoined: k must be >= 1");
  // {e, z, s1, ..., s_{k-1}} with xy = z whenever x, y != e.
  const int n = k + 1;
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 1));
  for (int a = 0; a < n; ++a) {
    t[0][a] = a;
    t[a][0] = a;
  }
  std::vector<std::string> names = {"e", "z"};
  for (int i = 1; i < k; ++i) names.push_back("s" + std::to_string(i));
  return from_table("N" + std::to_string(k), std::move(t), std::move(names));
}

Monoid Monoid::with_name(Monoid m, std::string name) {
  m.name_ = std::move(name);
  return m;
}

Monoid Monoid::nat_add() {
  Monoid m;
  m.name_ = "nat";
  m.nat_ = true;
  return m;
}

Monoid Monoid::from_table(std::string name, std::vector<std::vector<int>> table,
                          std::vector<std::string> elem_names) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw ValidationError(name + ": empty monoid table");
  Monoid m;
  m.name_ = std::move(name);
  m.size_ = n;
  m.table_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw ValidationError(m.name_ + ": ragged monoid table");
    for (int b = 0; b < n; ++b) {
      if (table[a][b] < 0 || table[a][b] >= n)
        throw ValidationError(m.name_ + ": table entry out of range");
      m.table_[static_cast<size_t>(a) * n + b] = static_cast<std::uint32_t>(table[a][b]);
    }
  }
  int id = -1;
  for (int c = 0; c < n && id < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (table[c][x] != x || table[x][c] != x) { ok = false; break; }
    if (ok) id = c;
  }
  if (id < 0) throw ValidationError(m.name_ + ": no identity element");
  m.identity_ = static_cast<MonoidElem>(id);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ValidationError(m.name_ + ": associativity fails at (" +
                                std::to_string(a) + ", " + std::to_string(b) +
                                ", " + std::to_string(c) + ")");
  m.elem_names_ = std::move(elem_names);
  return m;
}

Monoid Monoid::submonoid(const Monoid& parent, std::vector<int> elems,
                         std::string name) {
  if (parent.is_nat()) throw ValidationError("submonoid: finite parent required");
  std::sort(elems.begin(), elems.end());
  std::vector<int> to_local(parent.size(), -1);
  for (size_t i = 0; i < elems.size(); ++i) to_local[elems[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(elems.size(), std::vector<int>(elems.size()));
  std::vector<std::string> names;
  for (size_t a = 0; a < elems.size(); ++a) {
    names.push_back(parent.elem_name(elems[a]));
    for (size_t b = 0; b < elems.size(); ++b) {
      int p = static_cast<int>(parent.op(elems[a], elems[b]));
      if (to_local[p] < 0)
        throw ValidationError(name + ": subset not closed under the operation");
      t[a][b] = to_local[p];
    }
  }
  return from_table(std::move(name), std::move(t), std::move(names));
}

std::string Monoid::elem_name(MonoidElem g) const {
  if (nat_) {
    if (g == 0) return "x^0";
    return "x^" + std::to_string(g);
  }
  if (g < elem_names_.size()) return elem_names_[g];
  return "m" + std::to_string(g);
}

bool cancellative_by_permutations(const Monoid& M) {
  if (M.is_nat()) return true;
  const int n = M.size();
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      row[M.op(a, b)] = true;
      col[M.op(b, a)] = true;
    }
    for (int v = 0; v < n; ++v)
      if (!row[v] || !col[v]) return false;
  }
  return true;
}

namespace {

// A strict total order given as a ranking (rank[x] < rank[y] means x < y)
// compatible with the operation on both sides.
bool order_compatible(const Monoid& M, const std::vector<int>& rank) {
  const int n = M.size();
  for (int g = 0; g < n; ++g)
    for (int gp = 0; gp < n; ++gp) {
      if (rank[g] >= rank[gp]) continue;
      for (int h = 0; h < n; ++h) {
        if (rank[M.op(h, g)] >= rank[M.op(h, gp)]) return false;
        if (rank[M.op(g, h)] >= rank[M.op(gp, h)]) return false;
      }
    }
  return true;
}

}  // namespace

bool strict_total_order_by_search(const Monoid& M) {
  if (M.is_nat()) return true;
  std::vector<int> perm(M.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> rank(M.size());
    for (int i = 0; i < M.size(); ++i) rank[perm[i]] = i;
    if (order_compatible(M, rank)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

MonoidReport monoid_scan(const Monoid& M, int up_budget) {
  MonoidReport rep;
  rep.monoid = M.name();
  if (M.is_nat()) {
    rep.axiomatic = true;
    rep.cancellative = true;
    rep.unique_product = true;
    rep.torsion_free = true;
    rep.strict_total_order_exists = true;
    return rep;
  }
  const int n = M.size();
  rep.size = n;

  rep.cancellative = true;
  for (int m = 0; m < n && rep.cancellative; ++m)
    for (int g = 0; g < n && rep.cancellative; ++g)
      for (int h = g + 1; h < n; ++h) {
        if (M.op(m, g) == M.op(m, h)) {
          rep.cancellative = false;
          rep.cancellative_witness = {static_cast<MonoidElem>(m),
                                      static_cast<MonoidElem>(g),
                                      static_cast<MonoidElem>(h)};
          rep.cancellative_witness_side = "left";
          break;
        }
        if (M.op(g, m) == M.op(h, m)) {
          rep.cancellative = false;
          rep.cancellative_witness = {static_cast<MonoidElem>(m),
                                      static_cast<MonoidElem>(g),
                                      static_cast<MonoidElem>(h)};
          rep.cancellative_witness_side = "right";
          break;
        }
      }

  if (n <= up_budget) {
    rep.unique_product = true;
    const unsigned full = (1u << n) - 1;
    for (unsigned A = 1; A <= full && rep.unique_product; ++A)
      for (unsigned B = 1; B <= full; ++B) {
        // count factorizations per product
        std::vector<int> cnt(n, 0);
        for (int a = 0; a < n; ++a)
          if (A >> a & 1)
            for (int b = 0; b < n; ++b)
              if (B >> b & 1) ++cnt[M.op(a, b)];
        bool unique = false;
        for (int w = 0; w < n; ++w)
          if (cnt[w] == 1) { unique = true; break; }
        if (!unique) {
          rep.unique_product = false;
          std::vector<MonoidElem> va, vb;
          for (int a = 0; a < n; ++a)
            if (A >> a & 1) va.push_back(a);
          for (int b = 0; b < n; ++b)
            if (B >> b & 1) vb.push_back(b);
          rep.up_witness = {std::move(va), std::move(vb)};
          break;
        }
      }
  } else {
    throw BudgetError(M.name() + ": u.p. subset sweep budget " +
                      std::to_string(up_budget) + " exceeded");
  }

  rep.is_group = cancellative_by_permutations(M);  // finite cancellative = group
  if (rep.is_group) {
    for (int g = 0; g < n; ++g) {
      if (g == static_cast<int>(M.identity())) continue;
      MonoidElem p = g;
      for (int k = 1; k <= n; ++k) {
        if (p == M.identity()) { rep.torsion.push_back(g); break; }
        p = M.op(p, g);
      }
    }
    rep.torsion_free = rep.torsion.empty();
  }

  // g > e would force the infinite chain g < g^2 < ... in a finite monoid.
  rep.strict_total_order_exists = (n == 1);
  return rep;
}

}  // namespace armlab

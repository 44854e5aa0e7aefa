#include "armlab/ring_spec.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "armlab/errors.hpp"

namespace armlab {

RingSpec RingSpec::zn(int n) {
  RingSpec s;
  s.kind = Kind::Zn;
  s.n = n;
  return s;
}
RingSpec RingSpec::product(RingSpec a, RingSpec b) {
  RingSpec s;
  s.kind = Kind::Product;
  s.a = std::make_shared<RingSpec>(std::move(a));
  s.b = std::make_shared<RingSpec>(std::move(b));
  return s;
}
RingSpec RingSpec::matrix(RingSpec base, int k) {
  RingSpec s;
  s.kind = Kind::Matrix;
  s.n = k;
  s.a = std::make_shared<RingSpec>(std::move(base));
  return s;
}
RingSpec RingSpec::upper_triangular(RingSpec base, int k) {
  RingSpec s;
  s.kind = Kind::UpperTriangular;
  s.n = k;
  s.a = std::make_shared<RingSpec>(std::move(base));
  return s;
}
RingSpec RingSpec::quaternion(RingSpec base) {
  RingSpec s;
  s.kind = Kind::Quaternion;
  s.a = std::make_shared<RingSpec>(std::move(base));
  return s;
}
RingSpec RingSpec::subring(RingSpec parent, std::vector<int> generators) {
  RingSpec s;
  s.kind = Kind::Subring;
  s.a = std::make_shared<RingSpec>(std::move(parent));
  s.elems = std::move(generators);
  return s;
}
RingSpec RingSpec::subring_pred(RingSpec parent,
                                std::function<bool(const FiniteRing&, int)> pred,
                                std::string name) {
  RingSpec s;
  s.kind = Kind::Subring;
  s.a = std::make_shared<RingSpec>(std::move(parent));
  s.pred = std::move(pred);
  s.name = std::move(name);
  return s;
}
RingSpec RingSpec::quotient(RingSpec parent, std::vector<int> ideal) {
  RingSpec s;
  s.kind = Kind::Quotient;
  s.a = std::make_shared<RingSpec>(std::move(parent));
  s.elems = std::move(ideal);
  return s;
}
RingSpec RingSpec::corner(RingSpec parent, int idempotent) {
  RingSpec s;
  s.kind = Kind::Corner;
  s.a = std::make_shared<RingSpec>(std::move(parent));
  s.elems = {idempotent};
  return s;
}
RingSpec RingSpec::tables(int size, std::vector<std::uint16_t> add,
                          std::vector<std::uint16_t> mul, std::optional<int> one,
                          std::string name) {
  RingSpec s;
  s.kind = Kind::Tables;
  s.table_size = size;
  s.add_table = std::move(add);
  s.mul_table = std::move(mul);
  s.one = one;
  s.name = std::move(name);
  return s;
}

namespace {

void check_cap(long long size, int cap, const std::string& what) {
  if (size > cap)
    throw BudgetError(what + ": size " + std::to_string(size) +
                      " exceeds cap " + std::to_string(cap));
}

template <typename Add, typename Mul>
FiniteRing build(std::string name, int size, Add&& addf, Mul&& mulf,
                 std::optional<int> one, std::vector<std::string> names) {
  std::vector<std::uint16_t> add(static_cast<size_t>(size) * size);
  std::vector<std::uint16_t> mul(static_cast<size_t>(size) * size);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      add[static_cast<size_t>(x) * size + y] = static_cast<std::uint16_t>(addf(x, y));
      mul[static_cast<size_t>(x) * size + y] = static_cast<std::uint16_t>(mulf(x, y));
    }
  return FiniteRing(std::move(name), size, std::move(add), std::move(mul), one,
                    std::move(names));
}

FiniteRing build_zn(int n, std::string name, int cap) {
  if (n < 1) throw ValidationError("zn: modulus must be >= 1");
  check_cap(n, cap, "zn");
  if (name.empty()) name = "Z" + std::to_string(n);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return build(std::move(name), n, [n](int a, int b) { return (a + b) % n; },
               [n](int a, int b) { return (a * b) % n; },
               n > 1 ? std::optional<int>(1) : std::optional<int>(0),
               std::move(names));
}

FiniteRing build_product(const FiniteRing& A, const FiniteRing& B,
                         std::string name, int cap) {
  long long size = static_cast<long long>(A.size()) * B.size();
  check_cap(size, cap, "product");
  const int nb = B.size();
  if (name.empty()) name = A.name() + "x" + B.name();
  std::vector<std::string> names;
  for (int x = 0; x < size; ++x)
    names.push_back("(" + A.elem_name(x / nb) + "," + B.elem_name(x % nb) + ")");
  std::optional<int> one;
  if (A.has_one() && B.has_one()) one = *A.one() * nb + *B.one();
  return build(
      std::move(name), static_cast<int>(size),
      [&](int x, int y) {
        return A.add(x / nb, y / nb) * nb + B.add(x % nb, y % nb);
      },
      [&](int x, int y) {
        return A.mul(x / nb, y / nb) * nb + B.mul(x % nb, y % nb);
      },
      one, std::move(names));
}

// Entries of a k x k matrix over `base`, at the positions in `pos` (row-major,
// pairs (i,j)); all other positions are zero. Index is big-endian over pos.
struct MatrixCodec {
  const FiniteRing& base;
  int k;
  std::vector<std::pair<int, int>> pos;

  long long count() const {
    long long c = 1;
    for (size_t i = 0; i < pos.size(); ++i) {
      c *= base.size();
      if (c > (1 << 30)) return c;  // caller checks the cap anyway
    }
    return c;
  }
  std::vector<int> decode(int idx) const {
    std::vector<int> e(pos.size());
    for (int i = static_cast<int>(pos.size()) - 1; i >= 0; --i) {
      e[i] = idx % base.size();
      idx /= base.size();
    }
    return e;
  }
  int encode(const std::vector<std::vector<int>>& m) const {
    int idx = 0;
    for (auto [i, j] : pos) idx = idx * base.size() + m[i][j];
    return idx;
  }
  std::vector<std::vector<int>> full(int idx) const {
    std::vector<std::vector<int>> m(k, std::vector<int>(k, base.zero()));
    auto e = decode(idx);
    for (size_t t = 0; t < pos.size(); ++t) m[pos[t].first][pos[t].second] = e[t];
    return m;
  }
  std::string render(int idx) const {
    auto m = full(idx);
    std::string s = "[";
    for (int i = 0; i < k; ++i) {
      s += "[";
      for (int j = 0; j < k; ++j) {
        s += base.elem_name(m[i][j]);
        if (j + 1 < k) s += ",";
      }
      s += "]";
      if (i + 1 < k) s += ",";
    }
    return s + "]";
  }
};

FiniteRing build_matrix_like(const FiniteRing& base, int k, bool upper,
                             std::string name, int cap) {
  if (k < 1) throw ValidationError("matrix: dimension must be >= 1");
  MatrixCodec codec{base, k, {}};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (!upper || i <= j) codec.pos.emplace_back(i, j);
  long long size = codec.count();
  check_cap(size, cap, upper ? "upper_triangular" : "matrix");
  if (name.empty())
    name = (upper ? "T" : "M") + std::to_string(k) + "(" + base.name() + ")";

  std::vector<std::string> names;
  for (int x = 0; x < size; ++x) names.push_back(codec.render(x));

  std::optional<int> one;
  if (base.has_one()) {
    std::vector<std::vector<int>> id(k, std::vector<int>(k, base.zero()));
    for (int i = 0; i < k; ++i) id[i][i] = *base.one();
    one = codec.encode(id);
  }
  return build(
      std::move(name), static_cast<int>(size),
      [&](int x, int y) {
        auto a = codec.full(x), b = codec.full(y);
        std::vector<std::vector<int>> c(k, std::vector<int>(k, base.zero()));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) c[i][j] = base.add(a[i][j], b[i][j]);
        return codec.encode(c);
      },
      [&](int x, int y) {
        auto a = codec.full(x), b = codec.full(y);
        std::vector<std::vector<int>> c(k, std::vector<int>(k, base.zero()));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            int s = base.zero();
            for (int l = 0; l < k; ++l) s = base.add(s, base.mul(a[i][l], b[l][j]));
            c[i][j] = s;
          }
        return codec.encode(c);
      },
      one, std::move(names));
}

FiniteRing build_quaternion(const FiniteRing& base, std::string name, int cap) {
  if (!base.has_one())
    throw ValidationError("quaternion: base ring needs an identity");
  long long size = 1;
  for (int i = 0; i < 4; ++i) size *= base.size();
  check_cap(size, cap, "quaternion");
  if (name.empty()) name = "H(" + base.name() + ")";
  const int n = base.size();

  auto decode = [n](int idx) {
    std::array<int, 4> c{};
    for (int i = 3; i >= 0; --i) {
      c[i] = idx % n;
      idx /= n;
    }
    return c;
  };
  auto encode = [n](const std::array<int, 4>& c) {
    int idx = 0;
    for (int i = 0; i < 4; ++i) idx = idx * n + c[i];
    return idx;
  };
  // basis[u][v] = (index, sign) of the product of basis elements u*v,
  // with basis order 1, i, j, k.
  static const int bidx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int bsgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};

  static const char* sym[4] = {"", "i", "j", "k"};
  std::vector<std::string> names;
  for (int x = 0; x < size; ++x) {
    auto c = decode(x);
    std::string s;
    for (int u = 0; u < 4; ++u) {
      if (c[u] == base.zero()) continue;
      if (!s.empty()) s += "+";
      if (u == 0) s += base.elem_name(c[u]);
      else if (base.one() && c[u] == *base.one()) s += sym[u];
      else s += base.elem_name(c[u]) + sym[u];
    }
    names.push_back(s.empty() ? "0" : s);
  }
  std::array<int, 4> onec{*base.one(), base.zero(), base.zero(), base.zero()};
  return build(
      std::move(name), static_cast<int>(size),
      [&](int x, int y) {
        auto a = decode(x), b = decode(y);
        std::array<int, 4> c{};
        for (int i = 0; i < 4; ++i) c[i] = base.add(a[i], b[i]);
        return encode(c);
      },
      [&](int x, int y) {
        auto a = decode(x), b = decode(y);
        std::array<int, 4> c{base.zero(), base.zero(), base.zero(), base.zero()};
        for (int u = 0; u < 4; ++u)
          for (int v = 0; v < 4; ++v) {
            int p = base.mul(a[u], b[v]);
            if (bsgn[u][v] < 0) p = base.neg(p);
            c[bidx[u][v]] = base.add(c[bidx[u][v]], p);
          }
        return encode(c);
      },
      std::optional<int>(encode(onec)), std::move(names));
}

FiniteRing from_subset(const FiniteRing& parent, std::vector<int> elems,
                       std::string name, std::optional<int> forced_one) {
  std::sort(elems.begin(), elems.end());
  const int size = static_cast<int>(elems.size());
  std::vector<int> to_local(parent.size(), -1);
  for (int i = 0; i < size; ++i) to_local[elems[i]] = i;
  std::vector<std::string> names;
  for (int e : elems) names.push_back(parent.elem_name(e));
  auto local = [&](int p, const char* op) {
    if (to_local[p] < 0)
      throw ValidationError(name + ": subset not closed under " + op + " (" +
                            parent.elem_name(p) + " escapes)");
    return to_local[p];
  };
  std::optional<int> one;
  if (forced_one) {
    one = to_local[*forced_one];
  } else {
    for (int i = 0; i < size && !one; ++i) {
      bool ok = true;
      for (int j = 0; j < size; ++j)
        if (parent.mul(elems[i], elems[j]) != elems[j] ||
            parent.mul(elems[j], elems[i]) != elems[j]) { ok = false; break; }
      if (ok) one = i;
    }
  }
  return build(
      std::move(name), size,
      [&](int x, int y) { return local(parent.add(elems[x], elems[y]), "+"); },
      [&](int x, int y) { return local(parent.mul(elems[x], elems[y]), "*"); },
      one, std::move(names));
}

std::vector<int> additive_mult_closure(const FiniteRing& parent,
                                       const std::vector<int>& seed) {
  std::set<int> in(seed.begin(), seed.end());
  in.insert(parent.zero());
  std::vector<int> work(in.begin(), in.end());
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    auto push = [&](int v) {
      if (in.insert(v).second) work.push_back(v);
    };
    push(parent.neg(x));
    for (int y : std::vector<int>(in.begin(), in.end())) {
      push(parent.add(x, y));
      push(parent.mul(x, y));
      push(parent.mul(y, x));
    }
  }
  return {in.begin(), in.end()};
}

}  // namespace

FiniteRing construct_ring(const RingSpec& spec, int size_cap) {
  switch (spec.kind) {
    case RingSpec::Kind::Zn:
      return build_zn(spec.n, spec.name, size_cap);
    case RingSpec::Kind::Product: {
      FiniteRing A = construct_ring(*spec.a, size_cap);
      FiniteRing B = construct_ring(*spec.b, size_cap);
      return build_product(A, B, spec.name, size_cap);
    }
    case RingSpec::Kind::Matrix: {
      FiniteRing base = construct_ring(*spec.a, size_cap);
      return build_matrix_like(base, spec.n, /*upper=*/false, spec.name, size_cap);
    }
    case RingSpec::Kind::UpperTriangular: {
      FiniteRing base = construct_ring(*spec.a, size_cap);
      return build_matrix_like(base, spec.n, /*upper=*/true, spec.name, size_cap);
    }
    case RingSpec::Kind::Quaternion: {
      FiniteRing base = construct_ring(*spec.a, size_cap);
      return build_quaternion(base, spec.name, size_cap);
    }
    case RingSpec::Kind::Subring: {
      FiniteRing parent = construct_ring(*spec.a, size_cap);
      std::vector<int> seed;
      if (spec.pred) {
        for (int x = 0; x < parent.size(); ++x)
          if (spec.pred(parent, x)) seed.push_back(x);
      } else {
        seed = spec.elems;
        for (int g : seed)
          if (g < 0 || g >= parent.size())
            throw ValidationError("subring: generator index out of range");
      }
      std::vector<int> elems = additive_mult_closure(parent, seed);
      check_cap(static_cast<long long>(elems.size()), size_cap, "subring");
      std::string name = spec.name.empty() ? "Sub(" + parent.name() + ")" : spec.name;
      return from_subset(parent, std::move(elems), std::move(name), std::nullopt);
    }
    case RingSpec::Kind::Quotient: {
      FiniteRing parent = construct_ring(*spec.a, size_cap);
      std::set<int> I(spec.elems.begin(), spec.elems.end());
      I.insert(parent.zero());
      for (int x : I) {
        if (x < 0 || x >= parent.size())
          throw ValidationError("quotient: ideal element out of range");
        if (!I.count(parent.neg(x)))
          throw ValidationError("quotient: set not an ideal (not closed under negation)");
        for (int y : I)
          if (!I.count(parent.add(x, y)))
            throw ValidationError("quotient: set not an ideal (not closed under +)");
        for (int r = 0; r < parent.size(); ++r)
          if (!I.count(parent.mul(r, x)) || !I.count(parent.mul(x, r)))
            throw ValidationError("quotient: set not an ideal (not closed under R-multiplication)");
      }
      // Cosets, represented by their minimal member.
      std::vector<int> rep(parent.size(), -1);
      std::vector<int> reps;
      for (int x = 0; x < parent.size(); ++x) {
        if (rep[x] >= 0) continue;
        for (int i : I) {
          int y = parent.add(x, i);
          rep[y] = x;
        }
        reps.push_back(x);
      }
      std::vector<int> to_local(parent.size(), -1);
      for (size_t i = 0; i < reps.size(); ++i) to_local[reps[i]] = static_cast<int>(i);
      std::vector<std::string> names;
      for (int r : reps) names.push_back("[" + parent.elem_name(r) + "]");
      std::optional<int> one;
      if (parent.has_one()) one = to_local[rep[*parent.one()]];
      std::string name = spec.name.empty() ? parent.name() + "/I" : spec.name;
      return build(
          std::move(name), static_cast<int>(reps.size()),
          [&](int x, int y) { return to_local[rep[parent.add(reps[x], reps[y])]]; },
          [&](int x, int y) { return to_local[rep[parent.mul(reps[x], reps[y])]]; },
          one, std::move(names));
    }
    case RingSpec::Kind::Corner: {
      FiniteRing parent = construct_ring(*spec.a, size_cap);
      if (spec.elems.size() != 1)
        throw ValidationError("corner: exactly one idempotent expected");
      int f = spec.elems[0];
      if (f < 0 || f >= parent.size())
        throw ValidationError("corner: idempotent index out of range");
      if (!parent.is_idempotent(f))
        throw ValidationError("corner: " + parent.elem_name(f) + " is not idempotent");
      if (!parent.is_central(f))
        throw ValidationError("corner: " + parent.elem_name(f) + " is not central");
      std::set<int> fr;
      for (int r = 0; r < parent.size(); ++r) fr.insert(parent.mul(f, r));
      std::string name = spec.name.empty() ? parent.name() + "_corner" : spec.name;
      return from_subset(parent, {fr.begin(), fr.end()}, std::move(name),
                         std::optional<int>(f));
    }
    case RingSpec::Kind::Tables: {
      check_cap(spec.table_size, size_cap, "tables");
      return FiniteRing(spec.name.empty() ? "R" : spec.name, spec.table_size,
                        spec.add_table, spec.mul_table, spec.one);
    }
  }
  throw ValidationError("construct_ring: unknown spec kind");
}

RingSpec spec_of(const FiniteRing& R) {
  const int n = R.size();
  std::vector<std::uint16_t> add(static_cast<size_t>(n) * n),
      mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[static_cast<size_t>(a) * n + b] = static_cast<std::uint16_t>(R.add(a, b));
      mul[static_cast<size_t>(a) * n + b] = static_cast<std::uint16_t>(R.mul(a, b));
    }
  return RingSpec::tables(n, std::move(add), std::move(mul), R.one(), R.name());
}

}  // namespace armlab

#include "armlab/property_lab.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "armlab/errors.hpp"

namespace armlab {

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::HoldsUpToBound: return "holds_up_to_bound";
    case Status::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

std::string to_string(ClassicalProp p) {
  switch (p) {
    case ClassicalProp::Reduced: return "reduced";
    case ClassicalProp::CentralReduced: return "central_reduced";
    case ClassicalProp::Abelian: return "abelian";
    case ClassicalProp::TwoPrimal: return "two_primal";
    case ClassicalProp::RightPP: return "right_pp";
    case ClassicalProp::Baer: return "baer";
  }
  return "?";
}

std::string to_string(ArmKind k) {
  switch (k) {
    case ArmKind::Plain: return "plain_armendariz";
    case ArmKind::Central: return "central_armendariz";
    case ArmKind::Nil: return "nil_armendariz";
  }
  return "?";
}

namespace {

std::optional<int> noncentral_partner(const FiniteRing& R, int c) {
  for (int r = 0; r < R.size(); ++r)
    if (R.mul(c, r) != R.mul(r, c)) return r;
  return std::nullopt;
}

std::vector<int> principal_right_ideal(const FiniteRing& R, int e) {
  std::set<int> s;
  for (int r = 0; r < R.size(); ++r) s.insert(R.mul(e, r));
  return {s.begin(), s.end()};
}

}  // namespace

Verdict check_classical(const FiniteRing& R, ClassicalProp prop) {
  Verdict v;
  v.property = to_string(prop);
  v.ring = R.name();
  v.bound = "exhaustive over all " + std::to_string(R.size()) + " elements";
  v.status = Status::Holds;

  auto fail = [&](std::string detail) {
    v.status = Status::Fails;
    v.detail = std::move(detail);
  };
  auto need_one = [&] {
    if (!R.has_one())
      throw ValidationError(v.property + " requires an identity; " + R.name() +
                            " is a rng");
  };

  switch (prop) {
    case ClassicalProp::Reduced:
      for (int x : R.nilpotents())
        if (x != R.zero()) {
          fail("nonzero nilpotent " + R.elem_name(x));
          return v;
        }
      break;
    case ClassicalProp::CentralReduced:
      for (int x : R.nilpotents())
        if (!R.is_central(x)) {
          auto r = noncentral_partner(R, x);
          fail("noncentral nilpotent " + R.elem_name(x) + " (partner " +
               R.elem_name(*r) + ")");
          return v;
        }
      break;
    case ClassicalProp::Abelian:
      for (int f : R.idempotents())
        if (!R.is_central(f)) {
          auto r = noncentral_partner(R, f);
          fail("noncentral idempotent " + R.elem_name(f) + " (partner " +
               R.elem_name(*r) + ")");
          return v;
        }
      break;
    case ClassicalProp::TwoPrimal: {
      need_one();
      StructureReport rep = ring_scan(R);
      if (*rep.jacobson_radical != R.nilpotents()) {
        fail("prime radical (= J(R) for finite rings) differs from Nil(R)");
        return v;
      }
      break;
    }
    case ClassicalProp::RightPP: {
      need_one();
      for (int a = 0; a < R.size(); ++a) {
        std::vector<int> ann = right_annihilator(R, {a});
        bool matched = false;
        for (int e : R.idempotents())
          if (principal_right_ideal(R, e) == ann) { matched = true; break; }
        if (!matched) {
          fail("r(" + R.elem_name(a) + ") is not generated by an idempotent");
          return v;
        }
      }
      break;
    }
    case ClassicalProp::Baer: {
      need_one();
      // r(W) for nonempty W is an intersection of singleton annihilators, so
      // the annihilator lattice is the intersection closure of {r(a)}.
      std::set<std::vector<int>> lattice;
      for (int a = 0; a < R.size(); ++a) lattice.insert(right_annihilator(R, {a}));
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<std::vector<int>> members(lattice.begin(), lattice.end());
        for (size_t i = 0; i < members.size(); ++i)
          for (size_t j = i + 1; j < members.size(); ++j) {
            std::vector<int> meet;
            std::set_intersection(members[i].begin(), members[i].end(),
                                  members[j].begin(), members[j].end(),
                                  std::back_inserter(meet));
            if (lattice.insert(std::move(meet)).second) grew = true;
          }
      }
      std::vector<std::vector<int>> principal;
      for (int e : R.idempotents()) principal.push_back(principal_right_ideal(R, e));
      for (const auto& ann : lattice) {
        if (std::find(principal.begin(), principal.end(), ann) == principal.end()) {
          std::string s = "{";
          for (size_t i = 0; i < ann.size(); ++i)
            s += (i ? "," : "") + R.elem_name(ann[i]);
          fail("annihilator " + s + "} is not generated by an idempotent");
          return v;
        }
      }
      break;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Armendariz search
// ---------------------------------------------------------------------------

namespace {

struct ScanConfig {
  const FiniteRing& R;
  const Monoid& M;
  std::vector<MonoidElem> domain;
  int mcap, ncap;          // support-size caps (domain size when exhaustive)
  bool nil_target = false; // point sums may be nilpotent instead of zero
};

void decode_tuple(std::uint64_t idx, int base, std::vector<int>& out) {
  for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
    out[i] = static_cast<int>(idx % base);
    idx /= base;
  }
}

struct LocalWitness {
  std::uint64_t alpha_idx = 0;
  Witness w;
};

struct AlphaOutcome {
  std::optional<LocalWitness> witness;
  std::uint64_t nodes = 0;
  bool aborted = false;
};

// State for scanning all beta against one fixed alpha. Product points are
// tracked incrementally; a point is checked as soon as its last contributing
// beta coefficient has been assigned, which prunes most of the beta space.
struct AlphaScanner {
  const ScanConfig& cfg;
  std::vector<std::pair<MonoidElem, int>> supp;  // alpha support (g, coeff)
  int k;                                         // domain size
  std::vector<std::vector<std::pair<int, int>>> contribs;  // pos -> (slot, a)
  std::vector<std::vector<int>> completes;                 // pos -> slots
  int nslots = 0;

  std::vector<int> bc;    // beta coefficients by position
  std::vector<int> sums;  // running sum per slot
  std::uint64_t nodes = 0, node_cap;
  bool aborted = false;

  // set on success when scanning for a violation
  std::optional<Witness> found;

  AlphaScanner(const ScanConfig& c, const std::vector<int>& acoeffs,
               std::uint64_t cap)
      : cfg(c), k(static_cast<int>(c.domain.size())), node_cap(cap) {
    for (int i = 0; i < k; ++i)
      if (acoeffs[i] != cfg.R.zero()) supp.emplace_back(cfg.domain[i], acoeffs[i]);
    contribs.assign(k, {});
    completes.assign(k, {});
    std::map<MonoidElem, int> slot_of;
    std::vector<int> completion;
    for (int p = 0; p < k; ++p)
      for (auto [g, a] : supp) {
        MonoidElem w = cfg.M.op(g, cfg.domain[p]);
        auto [it, fresh] = slot_of.emplace(w, nslots);
        if (fresh) {
          ++nslots;
          completion.push_back(p);
        } else {
          completion[it->second] = std::max(completion[it->second], p);
        }
        contribs[p].emplace_back(it->second, a);
      }
    for (int s = 0; s < nslots; ++s) completes[completion[s]].push_back(s);
    bc.assign(k, 0);
    sums.assign(nslots, cfg.R.zero());
  }

  bool point_ok(int sum) const {
    return cfg.nil_target ? cfg.R.is_nilpotent(sum) : sum == cfg.R.zero();
  }

  // Visit annihilating betas in lexicographic coefficient order; `cb` gets the
  // beta coefficient vector and returns true to stop the whole scan.
  template <typename CB>
  bool dfs(int p, int nz, CB&& cb) {
    if (p == k) return cb(bc);
    const FiniteRing& R = cfg.R;
    for (int v = 0; v < R.size(); ++v) {
      if (v != R.zero() && nz >= cfg.ncap) continue;
      if (++nodes > node_cap) { aborted = true; return true; }
      // apply
      bool ok = true;
      size_t applied = 0;
      int saved[16];
      int* savedp = contribs[p].size() <= 16 ? saved : nullptr;
      std::vector<int> savedv;
      if (!savedp) savedv.resize(contribs[p].size());
      for (size_t t = 0; t < contribs[p].size(); ++t) {
        auto [slot, a] = contribs[p][t];
        (savedp ? savedp[t] : savedv[t]) = sums[slot];
        if (v != R.zero()) sums[slot] = R.add(sums[slot], R.mul(a, v));
        ++applied;
      }
      for (int slot : completes[p])
        if (!point_ok(sums[slot])) { ok = false; break; }
      if (ok) {
        bc[p] = v;
        if (dfs(p + 1, nz + (v != R.zero() ? 1 : 0), cb)) return true;
        bc[p] = 0;
      }
      // undo
      for (size_t t = 0; t < applied; ++t)
        sums[contribs[p][t].first] = (savedp ? savedp[t] : savedv[t]);
    }
    return false;
  }
};

MrElem element_from(const ScanConfig& cfg, const std::vector<int>& coeffs) {
  std::vector<MrTerm> terms;
  for (size_t i = 0; i < coeffs.size(); ++i)
    terms.push_back({cfg.domain[i], coeffs[i]});
  return MrElem::from_terms(cfg.R, cfg.M, std::move(terms));
}

// Scans one alpha; returns the lexicographically first violating witness for
// this alpha, if any.
AlphaOutcome scan_alpha(const ScanConfig& cfg, ArmKind kind, std::uint64_t alpha_idx,
                        std::uint64_t node_cap) {
  AlphaOutcome out;
  const FiniteRing& R = cfg.R;
  std::vector<int> acoeffs(cfg.domain.size());
  decode_tuple(alpha_idx, R.size(), acoeffs);
  int m = 0;
  for (int c : acoeffs)
    if (c != R.zero()) ++m;
  if (m == 0 || m > cfg.mcap) return out;

  AlphaScanner scan(cfg, acoeffs, node_cap);
  scan.dfs(0, 0, [&](const std::vector<int>& bc) {
    // beta annihilates alpha (or lands in Nil[M]); check coefficient products
    for (size_t i = 0; i < scan.supp.size(); ++i) {
      int a = scan.supp[i].second;
      int j = 0;
      for (int p = 0; p < scan.k; ++p) {
        if (bc[p] == R.zero()) continue;
        int prod = R.mul(a, bc[p]);
        bool viol = false;
        std::optional<int> partner;
        switch (kind) {
          case ArmKind::Plain: viol = prod != R.zero(); break;
          case ArmKind::Central:
            if (!R.is_central(prod)) {
              viol = true;
              partner = noncentral_partner(R, prod);
            }
            break;
          case ArmKind::Nil: viol = !R.is_nilpotent(prod); break;
        }
        if (viol) {
          Witness w{element_from(cfg, acoeffs), element_from(cfg, bc),
                    static_cast<int>(i), j, prod, partner};
          out.witness = LocalWitness{alpha_idx, std::move(w)};
          return true;
        }
        ++j;
      }
    }
    return false;
  });
  out.nodes = scan.nodes;
  out.aborted = scan.aborted;
  return out;
}

}  // namespace

Verdict check_armendariz(const FiniteRing& R, const Monoid& M, ArmKind kind,
                         const ArmBounds& bounds, int workers) {
  Verdict v;
  v.property = to_string(kind);
  v.ring = R.name();
  v.monoid = M.name();
  const bool nat = M.is_nat();

  ScanConfig cfg{R, M, {}, 0, 0, kind == ArmKind::Nil};
  if (nat) {
    for (int i = 0; i <= bounds.degree; ++i) cfg.domain.push_back(i);
    cfg.mcap = bounds.support_m;
    cfg.ncap = bounds.support_n;
    v.bound = "supports within {0.." + std::to_string(bounds.degree) +
              "}, at most " + std::to_string(bounds.support_m) + "x" +
              std::to_string(bounds.support_n) + " terms";
  } else {
    for (int i = 0; i < M.size(); ++i) cfg.domain.push_back(i);
    cfg.mcap = cfg.ncap = M.size();
    v.bound = "exhaustive: all supports inside " + M.name();
  }

  if (R.size() > bounds.ring_cap) {
    v.status = Status::BudgetExhausted;
    v.detail = "ring size " + std::to_string(R.size()) + " exceeds checker cap " +
               std::to_string(bounds.ring_cap);
    return v;
  }

  if (kind == ArmKind::Central && R.commutative()) {
    v.status = nat ? Status::HoldsUpToBound : Status::Holds;
    v.detail = "R is commutative: every coefficient product is central";
    return v;
  }

  const int k = static_cast<int>(cfg.domain.size());
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > (std::uint64_t(1) << 58) / R.size()) {
      v.status = Status::BudgetExhausted;
      v.detail = "alpha tuple space overflows the enumeration budget";
      return v;
    }
    total *= static_cast<std::uint64_t>(R.size());
  }

  workers = std::max(1, workers);
  const std::uint64_t block =
      std::max<std::uint64_t>(1024, static_cast<std::uint64_t>(workers) * 256);
  std::uint64_t nodes_total = 0;

  for (std::uint64_t b0 = 0; b0 < total; b0 += block) {
    const std::uint64_t b1 = std::min(total, b0 + block);
    std::optional<LocalWitness> best;
    bool aborted = false;
    std::uint64_t block_nodes = 0;

    auto run_range = [&](int t) {
      std::optional<LocalWitness> local;
      std::uint64_t nodes = 0;
      bool ab = false;
      for (std::uint64_t idx = b0 + t; idx < b1; idx += workers) {
        AlphaOutcome out = scan_alpha(cfg, kind, idx, bounds.node_budget);
        nodes += out.nodes;
        if (out.aborted) { ab = true; break; }
        if (out.witness) { local = std::move(out.witness); break; }
      }
      return std::tuple(std::move(local), nodes, ab);
    };

    if (workers == 1) {
      auto [local, nodes, ab] = run_range(0);
      best = std::move(local);
      block_nodes = nodes;
      aborted = ab;
    } else {
      std::vector<std::future<std::tuple<std::optional<LocalWitness>, std::uint64_t, bool>>> futs;
      for (int t = 0; t < workers; ++t)
        futs.push_back(std::async(std::launch::async, run_range, t));
      for (auto& f : futs) {
        auto [local, nodes, ab] = f.get();
        block_nodes += nodes;
        aborted = aborted || ab;
        if (local && (!best || local->alpha_idx < best->alpha_idx))
          best = std::move(local);
      }
    }

    if (best) {
      v.status = Status::Fails;
      v.witness = std::move(best->w);
      v.detail = "offending product " + R.elem_name(v.witness->product);
      if (v.witness->partner)
        v.detail += ", noncentral against " + R.elem_name(*v.witness->partner);
      return v;
    }
    nodes_total += block_nodes;
    if (aborted || nodes_total > bounds.node_budget) {
      v.status = Status::BudgetExhausted;
      v.detail = "search budget exhausted after alpha tuples [0, " +
                 std::to_string(b1) + ") of " + std::to_string(total);
      return v;
    }
  }

  v.status = nat ? Status::HoldsUpToBound : Status::Holds;
  return v;
}

bool recheck_witness(const Witness& w, ArmKind kind) {
  const FiniteRing& R = w.alpha.ring();
  MrElem prod = mr_mul(w.alpha, w.beta);
  if (kind == ArmKind::Nil) {
    for (const MrTerm& t : prod.terms())
      if (!R.is_nilpotent(t.coeff)) return false;
  } else {
    if (!prod.is_zero()) return false;
  }
  if (w.i < 0 || w.i >= static_cast<int>(w.alpha.terms().size())) return false;
  if (w.j < 0 || w.j >= static_cast<int>(w.beta.terms().size())) return false;
  int p = R.mul(w.alpha.terms()[w.i].coeff, w.beta.terms()[w.j].coeff);
  if (p != w.product) return false;
  switch (kind) {
    case ArmKind::Plain: return p != R.zero();
    case ArmKind::Central: {
      if (R.is_central(p)) return false;
      if (w.partner) return R.mul(p, *w.partner) != R.mul(*w.partner, p);
      return true;
    }
    case ArmKind::Nil: return !R.is_nilpotent(p);
  }
  return false;
}

void scan_zero_pairs(const FiniteRing& R, const Monoid& M,
                     const std::vector<MonoidElem>& domain,
                     const std::function<void(const MrElem&, const MrElem&)>& fn) {
  ScanConfig cfg{R, M, domain, static_cast<int>(domain.size()),
                 static_cast<int>(domain.size()), false};
  std::uint64_t total = 1;
  for (size_t i = 0; i < domain.size(); ++i) total *= R.size();
  std::vector<int> acoeffs(domain.size());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode_tuple(idx, R.size(), acoeffs);
    AlphaScanner scan(cfg, acoeffs, std::uint64_t(-1));
    MrElem alpha = element_from(cfg, acoeffs);
    scan.dfs(0, 0, [&](const std::vector<int>& bc) {
      fn(alpha, element_from(cfg, bc));
      return false;
    });
  }
}

}  // namespace armlab

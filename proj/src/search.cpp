#include "armlab/search.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <set>
#include <sstream>

#include "armlab/errors.hpp"
#include "armlab/ring_spec.hpp"

namespace armlab {

namespace {

// ---- target expression ----------------------------------------------------

struct AtomSpec {
  std::string name;
  std::string monoid;            // armendariz atoms only
  std::optional<int> degree;     // optional bound override
};

struct Node {
  enum class Kind { Atom, Not, And, Or } kind = Kind::Atom;
  int a = -1, b = -1;  // child indices
  AtomSpec atom;
};

struct Token {
  enum class Kind { Ident, Number, LParen, RParen, Comma, Not, And, Or, End };
  Kind kind;
  std::string text;
  size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    size_t start = i;
    if (std::isalpha(c) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_'))
        ++j;
      std::string w = s.substr(i, j - i);
      i = j;
      if (w == "not")
        out.push_back({Token::Kind::Not, w, start});
      else if (w == "and")
        out.push_back({Token::Kind::And, w, start});
      else if (w == "or")
        out.push_back({Token::Kind::Or, w, start});
      else
        out.push_back({Token::Kind::Ident, w, start});
    } else if (std::isdigit(c)) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Number, s.substr(i, j - i), start});
      i = j;
    } else if (c == '(') {
      out.push_back({Token::Kind::LParen, "(", start});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::Kind::RParen, ")", start});
      ++i;
    } else if (c == ',') {
      out.push_back({Token::Kind::Comma, ",", start});
      ++i;
    } else if (c == '!' || c == '~') {
      out.push_back({Token::Kind::Not, s.substr(i, 1), start});
      ++i;
    } else if (c == '&') {
      out.push_back({Token::Kind::And, "&", start});
      i += s.compare(i, 2, "&&") == 0 ? 2 : 1;
    } else if (c == '|') {
      out.push_back({Token::Kind::Or, "|", start});
      i += s.compare(i, 2, "||") == 0 ? 2 : 1;
    } else if (s.compare(i, 2, "\xc2\xac") == 0) {  // negation sign
      out.push_back({Token::Kind::Not, "\xc2\xac", start});
      i += 2;
    } else if (s.compare(i, 3, "\xe2\x88\xa7") == 0) {  // conjunction sign
      out.push_back({Token::Kind::And, "\xe2\x88\xa7", start});
      i += 3;
    } else if (s.compare(i, 3, "\xe2\x88\xa8") == 0) {  // disjunction sign
      out.push_back({Token::Kind::Or, "\xe2\x88\xa8", start});
      i += 3;
    } else {
      throw ValidationError("target expression: unexpected character '" +
                            s.substr(i, 1) + "' at position " +
                            std::to_string(i));
    }
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

const std::set<std::string>& classical_atoms() {
  static const std::set<std::string> a = {
      "commutative", "reduced",  "central_reduced",
      "abelian",     "two_primal", "right_pp", "baer"};
  return a;
}
const std::set<std::string>& armendariz_atoms() {
  static const std::set<std::string> a = {"plain_armendariz",
                                          "central_armendariz",
                                          "nil_armendariz"};
  return a;
}

struct Parser {
  const std::vector<Token>& toks;
  size_t i = 0;
  std::vector<Node> nodes;

  const Token& peek() const { return toks[i]; }
  Token take() { return toks[i++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ValidationError("target expression: " + msg + " at position " +
                          std::to_string(peek().pos));
  }

  int expr() {
    int lhs = conj();
    while (peek().kind == Token::Kind::Or) {
      take();
      int rhs = conj();
      nodes.push_back({Node::Kind::Or, lhs, rhs, {}});
      lhs = static_cast<int>(nodes.size()) - 1;
    }
    return lhs;
  }
  int conj() {
    int lhs = unary();
    while (peek().kind == Token::Kind::And) {
      take();
      int rhs = unary();
      nodes.push_back({Node::Kind::And, lhs, rhs, {}});
      lhs = static_cast<int>(nodes.size()) - 1;
    }
    return lhs;
  }
  int unary() {
    if (peek().kind == Token::Kind::Not) {
      take();
      int c = unary();
      nodes.push_back({Node::Kind::Not, c, -1, {}});
      return static_cast<int>(nodes.size()) - 1;
    }
    if (peek().kind == Token::Kind::LParen) {
      take();
      int c = expr();
      if (peek().kind != Token::Kind::RParen) fail("expected ')'");
      take();
      return c;
    }
    if (peek().kind != Token::Kind::Ident) fail("expected a predicate");
    return atom();
  }
  int atom() {
    Token t = take();
    AtomSpec a;
    a.name = t.text;
    if (classical_atoms().count(a.name)) {
      nodes.push_back({Node::Kind::Atom, -1, -1, std::move(a)});
      return static_cast<int>(nodes.size()) - 1;
    }
    if (!armendariz_atoms().count(a.name))
      fail("unknown predicate '" + a.name + "'");
    if (peek().kind != Token::Kind::LParen)
      fail("'" + a.name + "' needs a monoid argument");
    take();
    if (peek().kind != Token::Kind::Ident) fail("expected a monoid name");
    a.monoid = take().text;
    if (peek().kind == Token::Kind::Comma) {
      take();
      bool named = false;
      if (peek().kind == Token::Kind::Ident && peek().text == "d") {
        // accept the "d=2" spelling by skipping the name; '=' is not a token,
        // so only "d NUMBER" or a bare number are recognized here
        take();
        named = true;
      }
      if (peek().kind != Token::Kind::Number)
        fail(named ? "expected a degree value" : "expected a degree");
      a.degree = std::stoi(take().text);
    }
    if (peek().kind != Token::Kind::RParen) fail("expected ')'");
    take();
    nodes.push_back({Node::Kind::Atom, -1, -1, std::move(a)});
    return static_cast<int>(nodes.size()) - 1;
  }
};

// ---- family ---------------------------------------------------------------

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// Closure of a seed set under addition, negation and multiplication.
std::vector<int> closure(const FiniteRing& R, std::vector<int> seed) {
  std::set<int> s(seed.begin(), seed.end());
  s.insert(R.zero());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int x : cur) {
      if (s.insert(R.neg(x)).second) grew = true;
      for (int y : cur) {
        if (s.insert(R.add(x, y)).second) grew = true;
        if (s.insert(R.mul(x, y)).second) grew = true;
      }
    }
  }
  return {s.begin(), s.end()};
}

std::vector<FiniteRing> expand_family(const std::string& family,
                                      const Catalog& cat, int max_structures,
                                      bool& partial) {
  std::vector<FiniteRing> out;
  std::stringstream ss(family);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    if (item.rfind("subrings_of(", 0) == 0 && item.back() == ')') {
      std::string pname = trim(item.substr(12, item.size() - 13));
      const FiniteRing& parent = cat.ring(pname);
      RingSpec base = spec_of(parent);
      // Subrngs generated by one or two elements, deduplicated by carrier.
      std::set<std::vector<int>> seen;
      for (int i = 0; i < parent.size(); ++i) {
        for (int j = i; j < parent.size(); ++j) {
          std::vector<int> gens = i == j ? std::vector<int>{i}
                                         : std::vector<int>{i, j};
          if (!seen.insert(closure(parent, gens)).second) continue;
          if (static_cast<int>(out.size()) >= max_structures) {
            partial = true;
            return out;
          }
          RingSpec sub = RingSpec::subring(base, gens);
          sub.name = pname + "[gen";
          for (int g : gens) sub.name += " " + std::to_string(g);
          sub.name += "]";
          out.push_back(construct_ring(sub));
        }
      }
    } else {
      out.push_back(cat.ring(item));  // copy; throws on an unknown name
    }
  }
  return out;
}

// ---- evaluation -----------------------------------------------------------

struct Eval {
  const Catalog& cat;
  const ArmBounds& bounds;
  int workers;
  const FiniteRing& R;
  std::vector<Verdict>& verdicts;

  // three-valued: nullopt when an atom cannot be decided for this structure
  std::optional<bool> run(const std::vector<Node>& nodes, int idx) {
    const Node& n = nodes[idx];
    switch (n.kind) {
      case Node::Kind::Not: {
        auto v = run(nodes, n.a);
        if (!v) return std::nullopt;
        return !*v;
      }
      case Node::Kind::And: {
        auto l = run(nodes, n.a);
        if (l && !*l) return false;  // short-circuit keeps the cost bounded
        auto r = run(nodes, n.b);
        if (r && !*r) return false;
        if (!l || !r) return std::nullopt;
        return true;
      }
      case Node::Kind::Or: {
        auto l = run(nodes, n.a);
        if (l && *l) return true;
        auto r = run(nodes, n.b);
        if (r && *r) return true;
        if (!l || !r) return std::nullopt;
        return false;
      }
      case Node::Kind::Atom:
        return atom(n.atom);
    }
    return std::nullopt;
  }

  std::optional<bool> atom(const AtomSpec& a) {
    if (a.name == "commutative") {
      Verdict v;
      v.property = "commutative";
      v.ring = R.name();
      v.status = R.commutative() ? Status::Holds : Status::Fails;
      verdicts.push_back(v);
      return R.commutative();
    }
    if (classical_atoms().count(a.name)) {
      static const std::vector<std::pair<std::string, ClassicalProp>> map = {
          {"reduced", ClassicalProp::Reduced},
          {"central_reduced", ClassicalProp::CentralReduced},
          {"abelian", ClassicalProp::Abelian},
          {"two_primal", ClassicalProp::TwoPrimal},
          {"right_pp", ClassicalProp::RightPP},
          {"baer", ClassicalProp::Baer}};
      for (const auto& [nm, prop] : map)
        if (nm == a.name) {
          try {
            Verdict v = check_classical(R, prop);
            verdicts.push_back(v);
            return v.status == Status::Holds;
          } catch (const ValidationError&) {
            return std::nullopt;  // identity-requiring predicate on a rng
          }
        }
    }
    ArmKind kind = a.name == "plain_armendariz"     ? ArmKind::Plain
                   : a.name == "central_armendariz" ? ArmKind::Central
                                                    : ArmKind::Nil;
    const Monoid& M = cat.monoid(a.monoid);
    ArmBounds b = bounds;
    if (a.degree) b.degree = *a.degree;
    Verdict v = check_armendariz(R, M, kind, b, workers);
    verdicts.push_back(v);
    if (v.status == Status::BudgetExhausted) return std::nullopt;
    return v.status != Status::Fails;
  }
};

}  // namespace

SearchResult counterexample_search(const std::string& target,
                                   const std::string& family,
                                   const Catalog& cat, const ArmBounds& bounds,
                                   int workers, int max_structures) {
  std::vector<Token> toks = tokenize(target);
  Parser p{toks};
  int root = p.expr();
  if (p.peek().kind != Token::Kind::End) p.fail("trailing input");

  SearchResult res;
  res.target = target;
  std::vector<FiniteRing> rings =
      expand_family(family, cat, max_structures, res.partial);
  if (res.partial)
    res.note = "family truncated at " + std::to_string(max_structures) +
               " structures";

  for (const FiniteRing& R : rings) {
    std::vector<Verdict> verdicts;
    Eval ev{cat, bounds, workers, R, verdicts};
    std::optional<bool> match = ev.run(p.nodes, root);
    if (!match) {
      res.skipped.push_back(R.name());
      continue;
    }
    if (*match)
      res.findings.push_back({R.name(), R.size(), std::move(verdicts)});
  }
  return res;
}

}  // namespace armlab

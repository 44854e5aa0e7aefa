#include "armlab/config.hpp"

#include <map>
#include <memory>
#include <set>

#include "armlab/errors.hpp"
#include "armlab/monoid.hpp"
#include "armlab/ring_spec.hpp"

namespace armlab {

namespace {

struct Token {
  enum class Kind { Ident, String, Int, LBrace, RBrace, LBracket, RBracket,
                    Equals, Comma, End };
  Kind kind;
  std::string text;
  std::int64_t value = 0;
  int line, col;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto bump = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      bump(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') bump(1);
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Token::Kind::Ident, s.substr(i, j - i), 0, tl, tc});
      bump(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      std::string text = s.substr(i, j - i);
      if (text == "-") throw ConfigError(tl, tc, "lone '-'");
      out.push_back({Token::Kind::Int, text, std::stoll(text), tl, tc});
      bump(j - i);
    } else if (c == '"') {
      size_t j = i + 1;
      while (j < s.size() && s[j] != '"' && s[j] != '\n') ++j;
      if (j >= s.size() || s[j] != '"')
        throw ConfigError(tl, tc, "unterminated string");
      out.push_back({Token::Kind::String, s.substr(i + 1, j - i - 1), 0, tl, tc});
      bump(j + 1 - i);
    } else {
      Token::Kind k;
      switch (c) {
        case '{': k = Token::Kind::LBrace; break;
        case '}': k = Token::Kind::RBrace; break;
        case '[': k = Token::Kind::LBracket; break;
        case ']': k = Token::Kind::RBracket; break;
        case '=': k = Token::Kind::Equals; break;
        case ',': k = Token::Kind::Comma; break;
        default:
          throw ConfigError(tl, tc, std::string("unexpected character '") + c + "'");
      }
      out.push_back({k, s.substr(i, 1), 0, tl, tc});
      bump(1);
    }
  }
  out.push_back({Token::Kind::End, "", 0, line, col});
  return out;
}

// A parsed right-hand side: integer, string, boolean, flat int list, or an
// integer matrix.
struct Value {
  enum class Kind { Int, String, Bool, IntList, Matrix, StringList } kind;
  std::int64_t i = 0;
  std::string s;
  bool b = false;
  std::vector<std::int64_t> list;
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::string> strings;
  int line, col;
};

struct Parser {
  std::vector<Token> toks;
  size_t i = 0;

  const Token& peek() const { return toks[i]; }
  Token take() { return toks[i++]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ConfigError(t.line, t.col, msg);
  }
  Token expect(Token::Kind k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what);
    return take();
  }

  Value value() {
    Value v;
    v.line = peek().line;
    v.col = peek().col;
    switch (peek().kind) {
      case Token::Kind::Int:
        v.kind = Value::Kind::Int;
        v.i = take().value;
        return v;
      case Token::Kind::String:
        v.kind = Value::Kind::String;
        v.s = take().text;
        return v;
      case Token::Kind::Ident: {
        Token t = take();
        if (t.text == "true" || t.text == "false") {
          v.kind = Value::Kind::Bool;
          v.b = t.text == "true";
          return v;
        }
        fail(t, "unexpected identifier '" + t.text + "' (strings are quoted)");
      }
      case Token::Kind::LBracket:
        return array(v);
      default:
        fail(peek(), "expected a value");
    }
  }

  Value array(Value v) {
    take();  // '['
    if (peek().kind == Token::Kind::RBracket) {
      take();
      v.kind = Value::Kind::IntList;
      return v;
    }
    if (peek().kind == Token::Kind::LBracket) {
      v.kind = Value::Kind::Matrix;
      while (true) {
        Value row;
        row.line = peek().line;
        row.col = peek().col;
        row = array(row);
        if (row.kind != Value::Kind::IntList)
          fail(peek(), "matrix rows must be integer lists");
        v.rows.push_back(std::move(row.list));
        if (peek().kind == Token::Kind::Comma) {
          take();
          continue;
        }
        expect(Token::Kind::RBracket, "']'");
        return v;
      }
    }
    bool strings = peek().kind == Token::Kind::String;
    v.kind = strings ? Value::Kind::StringList : Value::Kind::IntList;
    while (true) {
      if (strings)
        v.strings.push_back(expect(Token::Kind::String, "a string").text);
      else
        v.list.push_back(expect(Token::Kind::Int, "an integer").value);
      if (peek().kind == Token::Kind::Comma) {
        take();
        continue;
      }
      expect(Token::Kind::RBracket, "']'");
      return v;
    }
  }
};

int as_positive(const Value& v, const char* key) {
  if (v.kind != Value::Kind::Int || v.i <= 0)
    throw ConfigError(v.line, v.col, std::string(key) + " must be a positive integer");
  return static_cast<int>(v.i);
}

// Structure-block keys and how they combine into a StructDef.
void apply_ring_key(StructDef& d, const std::string& key, const Value& v) {
  auto need_string = [&] {
    if (v.kind != Value::Kind::String)
      throw ConfigError(v.line, v.col, key + " expects a ring name string");
    return v.s;
  };
  auto set_ctor = [&](const std::string& c) {
    if (!d.ctor.empty())
      throw ConfigError(v.line, v.col,
                        "constructor '" + c + "' conflicts with '" + d.ctor + "'");
    d.ctor = c;
  };
  if (key == "zn") {
    set_ctor("zn");
    d.ints.push_back(as_positive(v, "zn"));
  } else if (key == "product") {
    set_ctor("product");
    if (v.kind != Value::Kind::StringList || v.strings.size() != 2)
      throw ConfigError(v.line, v.col, "product expects two ring names");
    d.refs = v.strings;
  } else if (key == "matrix" || key == "upper_triangular" ||
             key == "quaternion" || key == "subring" || key == "quotient" ||
             key == "corner") {
    set_ctor(key);
    d.refs.push_back(need_string());
  } else if (key == "k") {
    d.ints.push_back(as_positive(v, "k"));
  } else if (key == "generators" || key == "ideal") {
    if (v.kind != Value::Kind::IntList)
      throw ConfigError(v.line, v.col, key + " expects an integer list");
    d.ints.assign(v.list.begin(), v.list.end());
  } else if (key == "idempotent") {
    if (v.kind != Value::Kind::Int || v.i < 0)
      throw ConfigError(v.line, v.col, "idempotent expects an element index");
    d.ints.push_back(v.i);
  } else if (key == "size") {
    if (!d.ctor.empty() && d.ctor != "tables")
      throw ConfigError(v.line, v.col, "size only applies to explicit tables");
    d.ctor = "tables";
    d.ints.push_back(as_positive(v, "size"));
  } else if (key == "add" || key == "mul") {
    if (v.kind != Value::Kind::Matrix)
      throw ConfigError(v.line, v.col, key + " expects an integer matrix");
    if (!d.ctor.empty() && d.ctor != "tables")
      throw ConfigError(v.line, v.col, key + " only applies to explicit tables");
    d.ctor = "tables";
    (key == "add" ? d.rows : d.rows2) = v.rows;
  } else if (key == "one") {
    if (v.kind != Value::Kind::Int || v.i < 0)
      throw ConfigError(v.line, v.col, "one expects an element index");
    d.one = static_cast<int>(v.i);
  } else {
    throw ConfigError(v.line, v.col, "unknown ring key '" + key + "'");
  }
}

void apply_monoid_key(StructDef& d, const std::string& key, const Value& v) {
  auto set_ctor = [&](const std::string& c) {
    if (!d.ctor.empty())
      throw ConfigError(v.line, v.col,
                        "constructor '" + c + "' conflicts with '" + d.ctor + "'");
    d.ctor = c;
  };
  if (key == "cyclic") {
    set_ctor("cyclic");
    d.ints.push_back(as_positive(v, "cyclic"));
  } else if (key == "null_adjoined") {
    set_ctor("null_adjoined");
    d.ints.push_back(as_positive(v, "null_adjoined"));
  } else if (key == "nat_add") {
    if (v.kind != Value::Kind::Bool || !v.b)
      throw ConfigError(v.line, v.col, "nat_add expects true");
    set_ctor("nat_add");
  } else if (key == "table") {
    if (v.kind != Value::Kind::Matrix)
      throw ConfigError(v.line, v.col, "table expects an integer matrix");
    set_ctor("table");
    d.rows = v.rows;
  } else {
    throw ConfigError(v.line, v.col, "unknown monoid key '" + key + "'");
  }
}

}  // namespace

Config parse_config(const std::string& text) {
  Config cfg;
  Parser p{tokenize(text)};
  std::set<std::string> names;
  bool saw_budget = false, saw_output = false;

  while (p.peek().kind != Token::Kind::End) {
    Token head = p.expect(Token::Kind::Ident, "'ring', 'monoid', 'budget' or 'output'");
    if (head.text == "ring" || head.text == "monoid") {
      StructDef d;
      d.kind = head.text == "ring" ? StructDef::Kind::Ring : StructDef::Kind::Monoid;
      Token name = p.expect(Token::Kind::String, "a quoted structure name");
      d.name = name.text;
      d.line = name.line;
      d.col = name.col;
      if (d.name.empty()) p.fail(name, "empty structure name");
      if (!names.insert(head.text + ":" + d.name).second)
        p.fail(name, "duplicate definition of '" + d.name + "'");
      p.expect(Token::Kind::LBrace, "'{'");
      while (p.peek().kind != Token::Kind::RBrace) {
        Token key = p.expect(Token::Kind::Ident, "a key");
        p.expect(Token::Kind::Equals, "'='");
        Value v = p.value();
        if (d.kind == StructDef::Kind::Ring)
          apply_ring_key(d, key.text, v);
        else
          apply_monoid_key(d, key.text, v);
        if (p.peek().kind == Token::Kind::Comma) p.take();
      }
      p.take();  // '}'
      if (d.ctor.empty())
        throw ConfigError(d.line, d.col, "'" + d.name + "' has no constructor key");
      cfg.structures.push_back(std::move(d));
    } else if (head.text == "budget" || head.text == "output") {
      bool& seen = head.text == "budget" ? saw_budget : saw_output;
      if (seen) p.fail(head, "duplicate " + head.text + " block");
      seen = true;
      p.expect(Token::Kind::LBrace, "'{'");
      while (p.peek().kind != Token::Kind::RBrace) {
        Token key = p.expect(Token::Kind::Ident, "a key");
        p.expect(Token::Kind::Equals, "'='");
        Value v = p.value();
        if (head.text == "budget") {
          BudgetOptions& b = cfg.budget;
          if (key.text == "ring_size_cap")
            b.ring_size_cap = as_positive(v, "ring_size_cap");
          else if (key.text == "ideal_cap")
            b.ideal_cap = as_positive(v, "ideal_cap");
          else if (key.text == "degree") {
            if (v.kind != Value::Kind::Int || v.i < 0)
              throw ConfigError(v.line, v.col, "degree must be a nonnegative integer");
            b.bounds.degree = static_cast<int>(v.i);
          } else if (key.text == "support_m")
            b.bounds.support_m = as_positive(v, "support_m");
          else if (key.text == "support_n")
            b.bounds.support_n = as_positive(v, "support_n");
          else if (key.text == "ring_cap")
            b.bounds.ring_cap = as_positive(v, "ring_cap");
          else if (key.text == "node_budget") {
            if (v.kind != Value::Kind::Int || v.i <= 0)
              throw ConfigError(v.line, v.col, "node_budget must be positive");
            b.bounds.node_budget = static_cast<std::uint64_t>(v.i);
          } else if (key.text == "workers")
            b.workers = as_positive(v, "workers");
          else
            p.fail(key, "unknown budget key '" + key.text + "'");
        } else {
          if (key.text == "format") {
            if (v.kind != Value::Kind::String || (v.s != "text" && v.s != "json"))
              throw ConfigError(v.line, v.col, "format must be \"text\" or \"json\"");
            cfg.output.format = v.s;
          } else if (key.text == "path") {
            if (v.kind != Value::Kind::String)
              throw ConfigError(v.line, v.col, "path must be a string");
            cfg.output.path = v.s;
          } else {
            p.fail(key, "unknown output key '" + key.text + "'");
          }
        }
        if (p.peek().kind == Token::Kind::Comma) p.take();
      }
      p.take();  // '}'
    } else {
      p.fail(head, "unknown block '" + head.text + "'");
    }
  }
  return cfg;
}

void apply_config(const Config& cfg, Catalog& cat) {
  std::map<std::string, RingSpec> ring_specs;

  auto resolve_ring = [&](const std::string& name, int line, int col) -> RingSpec {
    auto it = ring_specs.find(name);
    if (it != ring_specs.end()) return it->second;
    if (cat.has_ring(name)) return spec_of(cat.ring(name));
    throw ConfigError(line, col, "unknown ring reference '" + name + "'");
  };
  auto to_u16_table = [](const std::vector<std::vector<std::int64_t>>& rows,
                         int line, int col) {
    std::vector<std::uint16_t> flat;
    for (const auto& row : rows) {
      if (row.size() != rows.size())
        throw ConfigError(line, col, "table is not square");
      for (std::int64_t x : row) {
        if (x < 0 || x >= static_cast<std::int64_t>(rows.size()))
          throw ConfigError(line, col, "table entry out of range");
        flat.push_back(static_cast<std::uint16_t>(x));
      }
    }
    return flat;
  };

  for (const StructDef& d : cfg.structures) {
    try {
      if (d.kind == StructDef::Kind::Ring) {
        if (cat.has_ring(d.name))
          throw ConfigError(d.line, d.col, "ring '" + d.name + "' already exists");
        RingSpec s;
        if (d.ctor == "zn") {
          s = RingSpec::zn(static_cast<int>(d.ints.at(0)));
        } else if (d.ctor == "product") {
          s = RingSpec::product(resolve_ring(d.refs.at(0), d.line, d.col),
                                resolve_ring(d.refs.at(1), d.line, d.col));
        } else if (d.ctor == "matrix" || d.ctor == "upper_triangular") {
          if (d.ints.empty())
            throw ConfigError(d.line, d.col, d.ctor + " needs k = <dimension>");
          RingSpec base = resolve_ring(d.refs.at(0), d.line, d.col);
          int k = static_cast<int>(d.ints.at(0));
          s = d.ctor == "matrix" ? RingSpec::matrix(std::move(base), k)
                                 : RingSpec::upper_triangular(std::move(base), k);
        } else if (d.ctor == "quaternion") {
          s = RingSpec::quaternion(resolve_ring(d.refs.at(0), d.line, d.col));
        } else if (d.ctor == "subring") {
          if (d.ints.empty())
            throw ConfigError(d.line, d.col, "subring needs generators = [...]");
          s = RingSpec::subring(resolve_ring(d.refs.at(0), d.line, d.col),
                                {d.ints.begin(), d.ints.end()});
        } else if (d.ctor == "quotient") {
          if (d.ints.empty())
            throw ConfigError(d.line, d.col, "quotient needs ideal = [...]");
          s = RingSpec::quotient(resolve_ring(d.refs.at(0), d.line, d.col),
                                 {d.ints.begin(), d.ints.end()});
        } else if (d.ctor == "corner") {
          if (d.ints.empty())
            throw ConfigError(d.line, d.col, "corner needs idempotent = <index>");
          s = RingSpec::corner(resolve_ring(d.refs.at(0), d.line, d.col),
                               static_cast<int>(d.ints.at(0)));
        } else {  // tables
          if (d.ints.empty() || d.rows.empty() || d.rows2.empty())
            throw ConfigError(d.line, d.col,
                              "explicit tables need size, add and mul");
          int n = static_cast<int>(d.ints.at(0));
          if (static_cast<int>(d.rows.size()) != n ||
              static_cast<int>(d.rows2.size()) != n)
            throw ConfigError(d.line, d.col, "table size does not match size key");
          s = RingSpec::tables(n, to_u16_table(d.rows, d.line, d.col),
                               to_u16_table(d.rows2, d.line, d.col), d.one,
                               d.name);
        }
        s.name = d.name;
        FiniteRing r = construct_ring(s, cfg.budget.ring_size_cap);
        ring_specs.emplace(d.name, std::move(s));
        cat.add_ring(std::make_shared<FiniteRing>(std::move(r)));
      } else {
        if (cat.has_monoid(d.name))
          throw ConfigError(d.line, d.col, "monoid '" + d.name + "' already exists");
        std::optional<Monoid> m;
        if (d.ctor == "cyclic")
          m = Monoid::cyclic(static_cast<int>(d.ints.at(0)));
        else if (d.ctor == "null_adjoined")
          m = Monoid::null_adjoined(static_cast<int>(d.ints.at(0)));
        else if (d.ctor == "nat_add")
          m = Monoid::nat_add();
        else {  // table
          std::vector<std::vector<int>> table;
          for (const auto& row : d.rows)
            table.emplace_back(row.begin(), row.end());
          m = Monoid::from_table(d.name, std::move(table));
        }
        cat.add_monoid(std::make_shared<Monoid>(
            Monoid::with_name(std::move(*m), d.name)));
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& ex) {
      // axiom failures and budget overruns surface at the definition site
      throw ConfigError(d.line, d.col, "'" + d.name + "': " + ex.what());
    }
  }
}

}  // namespace armlab

// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#include "elimdeg/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include "elimdeg/error.hpp"

namespace elimdeg {

const char* to_string(Mode mode) {
  return mode == Mode::Concrete ? "concrete" : "pattern";
}

namespace {

constexpr long kMaxExponent = 1 << 16;

enum class Tok {
  Ident, Nat, Slash, Caret, Star, Plus, Minus, LParen, RParen, Hash, Equals,
  Newline, End,
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Nat: return "number";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::Star: return "'*'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Hash: return "'#'";
    case Tok::Equals: return "'='";
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind;
  std::string text;
  SourcePosition pos;
};

[[noreturn]] void syntax_error(const SourcePosition& pos, const std::string& msg) {
  std::ostringstream out;
  out << "line " << pos.line << ", column " << pos.column << ": " << msg;
  throw Error(ErrorKind::SyntaxError, out.str(), pos);
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> toks;
  SourcePosition pos;
  std::size_t k = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t s = 0; s < count; ++s) {
      if (text[k] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
      ++k;
      ++pos.offset;
    }
  };
  while (k < text.size()) {
    const char c = text[k];
    if (c == '\n') {
      toks.push_back({Tok::Newline, "\n", pos});
      advance(1);
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (c == '/' && k + 1 < text.size() && text[k + 1] == '/') {
      while (k < text.size() && text[k] != '\n') advance(1);
      continue;
    }
    const SourcePosition start = pos;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t e = k;
      while (e < text.size() && std::isdigit(static_cast<unsigned char>(text[e]))) ++e;
      toks.push_back({Tok::Nat, std::string(text.substr(k, e - k)), start});
      advance(e - k);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t e = k;
      while (e < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[e])) || text[e] == '_')) {
        ++e;
      }
      toks.push_back({Tok::Ident, std::string(text.substr(k, e - k)), start});
      advance(e - k);
      continue;
    }
    Tok kind;
    switch (c) {
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '*': kind = Tok::Star; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '#': kind = Tok::Hash; break;
      case '=': kind = Tok::Equals; break;
      default: {
        std::ostringstream msg;
        msg << "unexpected character ";
        if (std::isprint(static_cast<unsigned char>(c))) {
          msg << "'" << c << "'";
        } else {
          msg << "0x" << std::hex << (static_cast<unsigned>(c) & 0xffu);
        }
        syntax_error(start, msg.str());
      }
    }
    toks.push_back({kind, std::string(1, c), start});
    advance(1);
  }
  toks.push_back({Tok::End, "", pos});
  return toks;
}

// A product of factors before variable roles are known.
struct RawTerm {
  Rat coeff = 1;
  bool generic = false;
  std::map<std::string, long> powers;
  std::vector<std::pair<std::string, long>> dense;  // (x^d) tokens
};

struct RawDefn {
  std::string name;
  SourcePosition pos;
  std::vector<RawTerm> terms;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  std::vector<RawDefn> parse_file() {
    std::vector<RawDefn> defs;
    skip_newlines();
    defs.push_back(parse_defn());
    if (peek().kind != Tok::Newline) unexpected("end of line");
    skip_newlines();
    defs.push_back(parse_defn());
    skip_newlines();
    if (peek().kind != Tok::End) unexpected("end of input");
    if (defs[0].name == defs[1].name) {
      syntax_error(defs[1].pos, "duplicate definition of '" + defs[1].name + "'");
    }
    return defs;
  }

  const std::vector<std::string>& var_order() const { return var_order_; }

 private:
  const Token& peek() const { return toks_[k_]; }
  const Token& next() { return toks_[k_ < toks_.size() - 1 ? k_++ : k_]; }

  [[noreturn]] void unexpected(const std::string& expected) const {
    const Token& t = peek();
    std::string found = describe(t.kind);
    if (t.kind == Tok::Ident || t.kind == Tok::Nat) found += " '" + t.text + "'";
    syntax_error(t.pos, "expected " + expected + ", found " + found);
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) unexpected(describe(kind));
    return next();
  }

  void skip_newlines() {
    while (peek().kind == Tok::Newline) next();
  }

  RawDefn parse_defn() {
    const Token& name = peek();
    if (name.kind != Tok::Ident || (name.text != "f" && name.text != "theta")) {
      unexpected("'f' or 'theta'");
    }
    RawDefn def{name.text, name.pos, {}};
    next();
    expect(Tok::Equals);
    def.terms.push_back(parse_term());
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool negate = next().kind == Tok::Minus;
      RawTerm t = parse_term();
      if (negate) t.coeff = -t.coeff;
      def.terms.push_back(std::move(t));
    }
    return def;
  }

  RawTerm parse_term() {
    RawTerm t;
    parse_factor(t);
    while (peek().kind == Tok::Star) {
      next();
      parse_factor(t);
    }
    return t;
  }

  long parse_exponent() {
    const Token& tok = expect(Tok::Nat);
    if (tok.text.size() > 6 || std::stol(tok.text) > kMaxExponent) {
      syntax_error(tok.pos, "exponent too large");
    }
    return std::stol(tok.text);
  }

  void note_var(const Token& tok) {
    if (std::find(var_order_.begin(), var_order_.end(), tok.text) !=
        var_order_.end()) {
      return;
    }
    if (var_order_.size() == 2) {
      std::ostringstream out;
      out << "line " << tok.pos.line << ", column " << tok.pos.column
          << ": third variable '" << tok.text << "' (already have '"
          << var_order_[0] << "' and '" << var_order_[1] << "')";
      throw Error(ErrorKind::MixedVariables, out.str(), tok.pos);
    }
    var_order_.push_back(tok.text);
  }

  void parse_factor(RawTerm& t) {
    bool negate = false;
    if (peek().kind == Tok::Minus) {
      next();
      negate = true;
    }
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Nat: {
        next();
        Integer num(tok.text);
        Integer den = 1;
        if (peek().kind == Tok::Slash) {
          next();
          const Token& d = expect(Tok::Nat);
          den = Integer(d.text);
          if (den == 0) syntax_error(d.pos, "zero denominator");
        }
        t.coeff *= make_rat(num, den);
        break;
      }
      case Tok::Hash:
        next();
        t.generic = true;
        break;
      case Tok::LParen: {
        next();
        const Token& v = peek();
        if (v.kind != Tok::Ident) unexpected("variable");
        note_var(v);
        next();
        expect(Tok::Caret);
        const long d = parse_exponent();
        expect(Tok::RParen);
        t.generic = true;
        t.dense.emplace_back(v.text, d);
        break;
      }
      case Tok::Ident: {
        note_var(tok);
        next();
        long e = 1;
        if (peek().kind == Tok::Caret) {
          next();
          e = parse_exponent();
        }
        t.powers[tok.text] += e;
        if (t.powers[tok.text] > kMaxExponent) syntax_error(tok.pos, "exponent too large");
        break;
      }
      default:
        unexpected("coefficient, '#', '(' or variable");
    }
    if (negate) t.coeff = -t.coeff;
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
  std::vector<std::string> var_order_;
};

// x keeps the X role and y the Y role; other names fill the free roles, in
// alphabetical order when both are free. A lone unknown name is eliminated.
VarNames assign_roles(std::vector<std::string> names) {
  std::optional<std::string> xs, ys;
  std::vector<std::string> rest;
  for (auto& n : names) {
    if (n == "x") {
      xs = n;
    } else if (n == "y") {
      ys = n;
    } else {
      rest.push_back(n);
    }
  }
  std::sort(rest.begin(), rest.end());
  if (!xs && !ys && rest.size() == 2) return {rest[0], rest[1]};
  if (!ys && !rest.empty()) {
    ys = rest.front();
    rest.erase(rest.begin());
  }
  if (!xs && !rest.empty()) xs = rest.front();
  return {xs.value_or("x"), ys.value_or("y")};
}

// Support of the product of a term's monomial and its dense tokens.
std::set<PatternPoly::Monomial> term_support(const RawTerm& t, const VarNames& vars) {
  long base[2] = {0, 0};
  for (const auto& [name, e] : t.powers) base[index(resolve_axis(vars, name))] += e;
  std::set<PatternPoly::Monomial> out{{static_cast<int>(base[0]), static_cast<int>(base[1])}};
  for (const auto& [name, d] : t.dense) {
    const Axis a = resolve_axis(vars, name);
    std::set<PatternPoly::Monomial> grown;
    for (const auto& [i, j] : out) {
      for (int s = 0; s <= d; ++s) {
        if (a == Axis::X) {
          grown.insert({i + s, j});
        } else {
          grown.insert({i, j + s});
        }
      }
    }
    out = std::move(grown);
  }
  return out;
}

void require_eliminable(const PatternPoly& p, const char* name) {
  if (p.is_zero()) {
    throw Error(ErrorKind::DegenerateInput, std::string(name) + " is the zero polynomial");
  }
  const Degree d = p.degree_in(Axis::Y);
  if (d < Degree(1)) {
    throw Error(ErrorKind::DegenerateInput,
                std::string(name) + " does not involve " + p.var(Axis::Y));
  }
}

std::string monomial_text(const VarNames& vars, int i, int j) {
  std::string out;
  auto add = [&](const std::string& v, int e) {
    if (e == 0) return;
    out += "*" + v;
    if (e > 1) out += "^" + std::to_string(e);
  };
  add(vars[0], i);
  add(vars[1], j);
  return out;
}

std::string print_pattern(const PatternPoly& p) {
  std::vector<std::string> terms;
  const auto sets = p.support_sets(Axis::Y);
  for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
    const int j = it->first;
    const std::set<int>& xs = it->second;
    const int d = *xs.rbegin();
    const bool dense = d >= 1 && *xs.begin() == 0 &&
                       xs.size() == static_cast<std::size_t>(d) + 1;
    if (dense) {
      terms.push_back("(" + p.var(Axis::X) + "^" + std::to_string(d) + ")" +
                      monomial_text(p.vars(), 0, j));
      continue;
    }
    for (auto i = xs.rbegin(); i != xs.rend(); ++i) {
      terms.push_back("#" + monomial_text(p.vars(), *i, j));
    }
  }
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k) out += " + ";
    out += terms[k];
  }
  return out;
}

}  // namespace

ProblemSpec make_pattern_problem(PatternPoly f, PatternPoly theta) {
  if (f.vars() != theta.vars()) {
    throw Error(ErrorKind::MixedVariables, "f and theta use different variables");
  }
  require_eliminable(f, "f");
  require_eliminable(theta, "theta");
  ProblemSpec p;
  p.mode = Mode::Pattern;
  p.vars = f.vars();
  p.f = std::move(f);
  p.theta = std::move(theta);
  return p;
}

ProblemSpec make_concrete_problem(BiPoly f, BiPoly theta) {
  if (f.vars() != theta.vars()) {
    throw Error(ErrorKind::MixedVariables, "f and theta use different variables");
  }
  ProblemSpec p;
  p.mode = Mode::Concrete;
  p.vars = f.vars();
  p.f = PatternPoly(f.vars());
  p.theta = PatternPoly(f.vars());
  if (!f.is_zero()) p.f = pattern_of(f);
  if (!theta.is_zero()) p.theta = pattern_of(theta);
  require_eliminable(p.f, "f");
  require_eliminable(p.theta, "theta");
  p.f_concrete = std::move(f);
  p.theta_concrete = std::move(theta);
  return p;
}

ProblemSpec parse_problem(std::string_view text) {
  Parser parser(text);
  std::vector<RawDefn> defs = parser.parse_file();
  if (defs[0].name != "f") std::swap(defs[0], defs[1]);
  const VarNames vars = assign_roles(parser.var_order());

  bool pattern = false;
  for (const auto& d : defs) {
    for (const auto& t : d.terms) pattern = pattern || t.generic;
  }

  if (!pattern) {
    BiPoly polys[2] = {BiPoly(vars), BiPoly(vars)};
    for (std::size_t k = 0; k < 2; ++k) {
      for (const auto& t : defs[k].terms) {
        const auto mono = *term_support(t, vars).begin();
        polys[k].add_term(mono.first, mono.second, t.coeff);
      }
    }
    return make_concrete_problem(std::move(polys[0]), std::move(polys[1]));
  }

  bool mixed = false;
  PatternPoly pats[2] = {PatternPoly(vars), PatternPoly(vars)};
  for (std::size_t k = 0; k < 2; ++k) {
    for (const auto& t : defs[k].terms) {
      if (t.coeff == 0) continue;
      if (!t.generic) mixed = true;
      for (const auto& [i, j] : term_support(t, vars)) pats[k].add(i, j);
    }
  }
  ProblemSpec p = make_pattern_problem(std::move(pats[0]), std::move(pats[1]));
  p.mixed = mixed;
  return p;
}

std::string print_problem(const ProblemSpec& p) {
  std::string out;
  if (p.mode == Mode::Concrete) {
    out += "f = " + to_string(*p.f_concrete) + "\n";
    out += "theta = " + to_string(*p.theta_concrete) + "\n";
  } else {
    out += "f = " + print_pattern(p.f) + "\n";
    out += "theta = " + print_pattern(p.theta) + "\n";
  }
  return out;
}

}  // namespace elimdeg

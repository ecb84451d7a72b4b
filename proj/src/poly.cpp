// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#include "elimdeg/poly.hpp"

#include <algorithm>
#include <sstream>

#include "elimdeg/error.hpp"

namespace elimdeg {

Rat make_rat(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::ZeroDivisor, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Integer(num), Integer(den)); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

std::string to_string(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(Degree d) {
  return d.is_finite() ? std::to_string(d.value()) : "-inf";
}

Axis resolve_axis(const VarNames& vars, std::string_view name) {
  if (name == vars[0]) return Axis::X;
  if (name == vars[1]) return Axis::Y;
  if (name == "x") return Axis::X;
  if (name == "y") return Axis::Y;
  throw Error(ErrorKind::InvalidArgument,
              "unknown variable '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::string var, std::vector<Rat> coeffs)
    : var_(std::move(var)), coeffs_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::constant(std::string var, const Rat& c) {
  return UniPoly(std::move(var), std::vector<Rat>{c});
}

UniPoly UniPoly::monomial(std::string var, int degree, const Rat& c) {
  std::vector<Rat> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return UniPoly(std::move(var), std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const std::string& UniPoly::merged_var(const UniPoly& o) const {
  if (is_constant()) return o.var_;
  if (!o.is_constant() && o.var_ != var_) {
    throw Error(ErrorKind::InvalidArgument,
                "polynomials in different variables: " + var_ + ", " + o.var_);
  }
  return var_;
}

Rat UniPoly::coefficient(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rat UniPoly::operator()(const Rat& at) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + *it;
  }
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly r = *this;
  const Rat lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  var_ = merged_var(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  var_ = merged_var(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r(a.merged_var(b));
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  Rat tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(),
              b.coeffs_[j].get_mpq_t());
      r.coeffs_[i + j] += tmp;
    }
  }
  r.trim();
  return r;
}

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    Rat mag = abs(c[k]);
    if (first) {
      if (c[k] < 0) out << "-";
    } else {
      out << (c[k] < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      out << to_string(mag);
      if (k > 0) out << "*";
    }
    if (k >= 1) out << p.var();
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

DivResult divmod(const UniPoly& p, const UniPoly& d) {
  if (d.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by zero polynomial");
  const std::string& var = p.is_zero() ? d.var() : p.var();
  std::vector<Rat> rem = p.coefficients();
  const auto& dc = d.coefficients();
  const std::size_t dn = dc.size();
  if (rem.size() < dn) return {UniPoly(var), p};

  std::vector<Rat> quot(rem.size() - dn + 1);
  const Rat lead = dc.back();
  Rat tmp;
  for (std::size_t s = quot.size(); s-- > 0;) {
    Rat& top = rem[s + dn - 1];
    if (top == 0) continue;
    const Rat q = top / lead;
    quot[s] = q;
    for (std::size_t i = 0; i < dn; ++i) {
      mpq_mul(tmp.get_mpq_t(), q.get_mpq_t(), dc[i].get_mpq_t());
      rem[s + i] -= tmp;
    }
  }
  rem.resize(dn - 1);
  return {UniPoly(var, std::move(quot)), UniPoly(var, std::move(rem))};
}

UniPoly exact_quotient(const UniPoly& p, const UniPoly& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero()) {
    throw Error(ErrorKind::InternalInvariantViolation,
                "inexact polynomial division");
  }
  return q;
}

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Integer multiple of p with all denominators cleared.
IntPoly clear_denominators(const UniPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  IntPoly r;
  r.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    r.push_back(Integer(c.get_num() * (den / c.get_den())));
  }
  return r;
}

// Divides out the content and makes the leading coefficient positive.
void make_primitive(IntPoly& p) {
  trim(p);
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t bn = b.size();
  const Integer& lb = b.back();
  while (a.size() >= bn) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - bn;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < bn; ++i) a[shift + i] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

UniPoly uni_gcd(const UniPoly& p, const UniPoly& q) {
  if (q.is_zero()) return p.monic();
  if (p.is_zero()) return q.monic();

  IntPoly a = clear_denominators(p);
  IntPoly b = clear_denominators(q);
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = pseudo_remainder(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  std::vector<Rat> coeffs(a.begin(), a.end());
  return UniPoly(p.var(), std::move(coeffs)).monic();
}

bool uni_divides(const UniPoly& d, const UniPoly& p) {
  return divmod(p, d).remainder.is_zero();
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(VarNames vars, const TermMap& terms) : vars_(std::move(vars)) {
  for (const auto& [mono, c] : terms) add_term(mono.first, mono.second, c);
}

Rat BiPoly::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rat(0) : it->second;
}

void BiPoly::add_term(int i, int j, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Degree BiPoly::degree_in(Axis a) const {
  Degree d = Degree::neg_infinity();
  for (const auto& [mono, c] : terms_) {
    d = std::max(d, Degree(a == Axis::X ? mono.first : mono.second));
  }
  return d;
}

Degree BiPoly::total_degree() const {
  Degree d = Degree::neg_infinity();
  for (const auto& [mono, c] : terms_) {
    d = std::max(d, Degree(mono.first + mono.second));
  }
  return d;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono.first, mono.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono.first, mono.second, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r(a.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
    }
  }
  return r;
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest y-power first, then highest x-power.
  std::vector<std::pair<BiPoly::Monomial, Rat>> terms(p.terms().begin(),
                                                      p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    if (l.first.second != r.first.second) return l.first.second > r.first.second;
    return l.first.first > r.first.first;
  });
  for (const auto& [mono, c] : terms) {
    const auto [i, j] = mono;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Rat mag = abs(c);
    bool need_star = false;
    if ((i == 0 && j == 0) || mag != 1) {
      out << to_string(mag);
      need_star = true;
    }
    auto power = [&](const std::string& v, int e) {
      if (e == 0) return;
      if (need_star) out << "*";
      out << v;
      if (e > 1) out << "^" << e;
      need_star = true;
    };
    power(p.var(Axis::X), i);
    power(p.var(Axis::Y), j);
  }
  return out.str();
}

std::vector<UniPoly> coeffs_in(const BiPoly& p, Axis main) {
  if (p.is_zero()) {
    throw Error(ErrorKind::DegenerateInput, "zero polynomial has no coefficients");
  }
  const int deg = p.degree_in(main).value();
  const int other_deg = p.degree_in(other(main)).value();
  const std::string& v = p.var(other(main));
  std::vector<std::vector<Rat>> dense(
      static_cast<std::size_t>(deg) + 1,
      std::vector<Rat>(static_cast<std::size_t>(other_deg) + 1));
  for (const auto& [mono, c] : p.terms()) {
    const int e_main = main == Axis::X ? mono.first : mono.second;
    const int e_other = main == Axis::X ? mono.second : mono.first;
    dense[static_cast<std::size_t>(deg - e_main)]
         [static_cast<std::size_t>(e_other)] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(dense.size());
  for (auto& row : dense) out.emplace_back(v, std::move(row));
  return out;
}

BiPoly from_coeffs(std::span<const UniPoly> coeffs, Axis main,
                   const VarNames& vars) {
  BiPoly r(vars);
  const int top = static_cast<int>(coeffs.size()) - 1;
  for (int k = 0; k <= top; ++k) {
    const auto& cs = coeffs[static_cast<std::size_t>(k)].coefficients();
    for (std::size_t e = 0; e < cs.size(); ++e) {
      const int e_main = top - k;
      const int e_other = static_cast<int>(e);
      if (main == Axis::X) {
        r.add_term(e_main, e_other, cs[e]);
      } else {
        r.add_term(e_other, e_main, cs[e]);
      }
    }
  }
  return r;
}

UniPoly eval_at(const BiPoly& p, Axis axis, const Rat& value) {
  const Axis keep = other(axis);
  const Degree d = p.degree_in(keep);
  if (d.is_neg_infinity()) return UniPoly(p.var(keep));
  std::vector<Rat> coeffs(static_cast<std::size_t>(d.value()) + 1);
  Rat powv;
  for (const auto& [mono, c] : p.terms()) {
    const int e_sub = axis == Axis::X ? mono.first : mono.second;
    const int e_keep = axis == Axis::X ? mono.second : mono.first;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(),
               static_cast<unsigned long>(e_sub));
    mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(),
               static_cast<unsigned long>(e_sub));
    coeffs[static_cast<std::size_t>(e_keep)] += c * make_rat(num, den);
  }
  return UniPoly(p.var(keep), std::move(coeffs));
}

}  // namespace elimdeg

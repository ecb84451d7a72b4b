// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Exact rational arithmetic plus univariate and bivariate polynomials.
//
// Rationals are GMP mpq values, which are canonical after every arithmetic
// operation (positive denominator, lowest terms). Values built from a raw
// numerator/denominator pair must go through make_rat().

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace elimdeg {

using Integer = mpz_class;
using Rat = mpq_class;

/// Canonical rational num/den. Throws ZeroDivisor when den == 0.
Rat make_rat(const Integer& num, const Integer& den);
Rat make_rat(long num, long den = 1);

bool is_integer(const Rat& r);

/// "p/q", or just "p" when the value is an integer.
std::string to_string(const Rat& r);

/// Role of a variable: X is the one kept, Y the one eliminated by default.
enum class Axis : int { X = 0, Y = 1 };

constexpr Axis other(Axis a) { return a == Axis::X ? Axis::Y : Axis::X; }
constexpr std::size_t index(Axis a) { return static_cast<std::size_t>(a); }

using VarNames = std::array<std::string, 2>;

inline VarNames default_vars() { return {"x", "y"}; }

/// Resolves a variable name, or one of the role letters "x"/"y", to an axis.
/// Throws InvalidArgument when neither matches.
Axis resolve_axis(const VarNames& vars, std::string_view name);

/// Polynomial degree. The zero polynomial has degree NEG_INFINITY, which
/// compares below every finite degree and absorbs addition.
class Degree {
 public:
  constexpr Degree(int value) : finite_(true), value_(value) {}  // NOLINT

  static constexpr Degree neg_infinity() { return Degree(); }

  constexpr bool is_neg_infinity() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }
  constexpr int value() const { return value_; }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return neg_infinity();
    return Degree(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Degree() : finite_(false), value_(0) {}

  bool finite_;
  int value_;
};

std::string to_string(Degree d);

/// Dense univariate polynomial, coefficients stored from degree 0 upward with
/// the top coefficient nonzero. The zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() : var_("x") {}
  explicit UniPoly(std::string var) : var_(std::move(var)) {}
  UniPoly(std::string var, std::vector<Rat> coeffs);

  static UniPoly constant(std::string var, const Rat& c);
  static UniPoly monomial(std::string var, int degree, const Rat& c);

  const std::string& var() const { return var_; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const {
    return coeffs_.empty() ? Degree::neg_infinity()
                           : Degree(static_cast<int>(coeffs_.size()) - 1);
  }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Top coefficient; zero for the zero polynomial.
  Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }
  Rat coefficient(int k) const;

  Rat operator()(const Rat& at) const;

  UniPoly monic() const;
  UniPoly operator-() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rat& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rat& c) { return a *= c; }
  friend UniPoly operator*(const Rat& c, UniPoly a) { return a *= c; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.coeffs_.empty() || a.var_ == b.var_);
  }

 private:
  void trim();
  const std::string& merged_var(const UniPoly& o) const;

  std::string var_;
  std::vector<Rat> coeffs_;
};

std::string to_string(const UniPoly& p);

inline Degree degree_in(const UniPoly& p) { return p.degree(); }

struct DivResult {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division over Q. Throws ZeroDivisor when d is zero.
DivResult divmod(const UniPoly& p, const UniPoly& d);

/// p / d where the division is known to be exact. A nonzero remainder throws
/// InternalInvariantViolation.
UniPoly exact_quotient(const UniPoly& p, const UniPoly& d);

/// Monic gcd computed by a primitive remainder sequence over Z.
/// uni_gcd(p, 0) is p made monic and uni_gcd(0, 0) is 0.
UniPoly uni_gcd(const UniPoly& p, const UniPoly& q);

/// True iff d divides p exactly. Throws ZeroDivisor when d is zero.
bool uni_divides(const UniPoly& d, const UniPoly& p);

/// Sparse bivariate polynomial with exponent pairs (x-exponent, y-exponent).
/// Zero coefficients are never stored.
class BiPoly {
 public:
  using Monomial = std::pair<int, int>;
  using TermMap = std::map<Monomial, Rat>;

  BiPoly() : vars_(default_vars()) {}
  explicit BiPoly(VarNames vars) : vars_(std::move(vars)) {}
  BiPoly(VarNames vars, const TermMap& terms);

  const VarNames& vars() const { return vars_; }
  const std::string& var(Axis a) const { return vars_[index(a)]; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rat coefficient(int i, int j) const;

  /// Adds c * x^i * y^j, dropping the entry if it cancels.
  void add_term(int i, int j, const Rat& c);

  Degree degree_in(Axis a) const;
  Degree total_degree() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

 private:
  VarNames vars_;
  TermMap terms_;
};

std::string to_string(const BiPoly& p);

inline Degree degree_in(const BiPoly& p, Axis a) { return p.degree_in(a); }

/// Coefficients of p as a polynomial in `main`, from the highest power down
/// to power 0. Entries are polynomials in the other variable and the first
/// one is nonzero. Throws DegenerateInput on the zero polynomial.
std::vector<UniPoly> coeffs_in(const BiPoly& p, Axis main);

/// Inverse of coeffs_in: sum of coeffs[k] * main^(size - 1 - k).
BiPoly from_coeffs(std::span<const UniPoly> coeffs, Axis main,
                   const VarNames& vars);

/// Substitutes `axis := value`, giving a polynomial in the other variable.
UniPoly eval_at(const BiPoly& p, Axis axis, const Rat& value);

inline UniPoly eval_x(const BiPoly& p, const Rat& x0) {
  return eval_at(p, Axis::X, x0);
}

}  // namespace elimdeg

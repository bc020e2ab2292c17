#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lmc/rational.hpp"

namespace lmc {

inline constexpr int kMaxVars = 12;

// Exponent vector over at most kMaxVars variables. Variable indices are 0-based.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  static Monomial var(int j, int power = 1);

  int exponent(int j) const { return exps_[static_cast<std::size_t>(j)]; }
  void set_exponent(int j, int e);
  int degree() const;
  // Smallest variable index with a positive exponent, or -1 for the unit monomial.
  int min_var() const;

  Monomial operator*(const Monomial& o) const;
  bool divisible_by_var(int j) const { return exponent(j) > 0; }
  Monomial divided_by_var(int j) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::array<std::uint8_t, kMaxVars> exps_;
};

// Graded order: total degree ascending, then larger powers of earlier variables first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// All monomials of degree <= degree, in increasing degree.
std::vector<Monomial> monomials_up_to(int num_vars, int degree);

// Element of Q[t_1..t_m] / (monomials of degree > cap), kept in canonical sparse form.
class TruncPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  TruncPoly() = default;
  TruncPoly(int num_vars, int cap);

  static TruncPoly constant(int num_vars, int cap, const Rational& c);
  static TruncPoly variable(int num_vars, int cap, int j);
  static TruncPoly monomial(int num_vars, int cap, const Monomial& mono, const Rational& c);
  // Sorts, merges duplicates, drops zeros and monomials above cap.
  static TruncPoly from_terms(int num_vars, int cap, std::vector<Term> terms);

  int num_vars() const { return num_vars_; }
  int cap() const { return cap_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& mono) const;
  Rational constant_term() const { return coefficient(Monomial()); }
  // Highest total degree present, -1 for zero.
  int degree() const;
  bool depends_on(int j) const;

  TruncPoly operator-() const;
  TruncPoly& operator+=(const TruncPoly& o);
  TruncPoly& operator-=(const TruncPoly& o);
  friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) { return a.mul(b); }
  friend TruncPoly operator*(const Rational& s, const TruncPoly& p) { return p.scaled(s); }

  TruncPoly mul(const TruncPoly& o) const;
  TruncPoly scaled(const Rational& s) const;
  TruncPoly times_var(int j) const;
  // q with t_j * q == p, carried at cap - 1; nothing if some monomial lacks t_j.
  std::optional<TruncPoly> divide_by_var(int j) const;
  TruncPoly graded_component(int k) const;
  // Same polynomial read in a ring with a different cap (truncating when lowering).
  TruncPoly with_cap(int cap) const;
  // p = t_j * first + second with second free of t_j; first has cap - 1.
  std::pair<TruncPoly, TruncPoly> split_by_var(int j) const;
  // Substitutes t_k -> sum_j forms[k][j] t_j.
  TruncPoly substitute_linear(const std::vector<std::vector<Rational>>& forms) const;

  friend bool operator==(const TruncPoly& a, const TruncPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.cap_ == b.cap_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const TruncPoly& o) const;
  void check_var(int j) const;

  int num_vars_ = 1;
  int cap_ = 0;
  std::vector<Term> terms_;
};

}  // namespace lmc

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lmc/linalg.hpp"
#include "lmc/rational.hpp"
#include "lmc/trunc_poly.hpp"

namespace lmc {

// The algebra L_{m,c}: free metabelian nilpotent of class c on m generators.
class Context {
 public:
  Context(int m, int c);

  int m() const { return m_; }
  int c() const { return c_; }
  // Cap of stored module polynomials and Jacobian entries.
  int module_cap() const { return c_ - 1 > 0 ? c_ - 1 : 0; }

  friend bool operator==(const Context&, const Context&) = default;

 private:
  int m_;
  int c_;
};

// u = sum beta_i x_i + w with w in L', stored through the wreath embedding
// x_i -> a_i + b_i: the a_i-coordinate of u is beta_i + module[i].
class LieElement {
 public:
  explicit LieElement(const Context& ctx);
  // Validates zero constant terms and the membership condition sum t_i module[i] = 0.
  LieElement(const Context& ctx, std::vector<Rational> beta, std::vector<TruncPoly> module);

  const Context& context() const { return ctx_; }
  const std::vector<Rational>& beta() const { return beta_; }
  const std::vector<TruncPoly>& module() const { return module_; }
  // beta_i + module[i].
  TruncPoly full_module(int i) const;

  bool is_zero() const;
  bool in_derived() const;

  LieElement operator-() const;
  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& s, const LieElement& u) { return u.scaled(s); }
  LieElement scaled(const Rational& s) const;

  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  struct Unchecked {};
  LieElement(const Context& ctx, std::vector<Rational> beta, std::vector<TruncPoly> module, Unchecked);
  friend LieElement make_unchecked(const Context&, std::vector<Rational>, std::vector<TruncPoly>);
  void check_same_context(const LieElement& o) const;

  Context ctx_;
  std::vector<Rational> beta_;
  std::vector<TruncPoly> module_;
};

// Constructs without the membership check; for internal builders whose output
// is a valid element by construction.
LieElement make_unchecked(const Context& ctx, std::vector<Rational> beta, std::vector<TruncPoly> module);

// True when sum_i t_i module[i], taken at cap c, vanishes and no module entry has a constant.
bool satisfies_membership(const Context& ctx, const std::vector<TruncPoly>& module);

// Basis tuple (i1,...,ik), 0-based, with i1 > i2 <= i3 <= ... <= ik; a 1-tuple is a generator.
using BasisTuple = std::vector<int>;

struct BasisForm {
  explicit BasisForm(const Context& c) : ctx(c), linear(static_cast<std::size_t>(c.m()), Rational(0)) {}
  Context ctx;
  std::vector<Rational> linear;
  std::map<BasisTuple, Rational> comm;

  friend bool operator==(const BasisForm&, const BasisForm&) = default;
};

LieElement generator(const Context& ctx, int i);
LieElement bracket(const LieElement& u, const LieElement& v);
// Left-normed bracket [u1,...,un].
LieElement bracket(const std::vector<LieElement>& us);
// w * p(ad x_1,...,ad x_m) for w in L'.
LieElement ad_polynomial_action(const LieElement& w, const TruncPoly& p);
// Homogeneous degree-k part (k = 1 is the linear part).
LieElement graded_component(const LieElement& u, int k);

BasisForm to_basis(const LieElement& u);
LieElement from_basis(const BasisForm& b);
bool is_basis_tuple(const Context& ctx, const BasisTuple& t);

std::vector<BasisTuple> enumerate_basis(const Context& ctx);
std::vector<BasisTuple> enumerate_basis(const Context& ctx, int k);
// (k-1) * C(m+k-2, k) for k >= 2, m for k = 1.
std::size_t basis_dimension(const Context& ctx, int k);
std::size_t algebra_dimension(const Context& ctx);

// Coordinates in the basis (generators first, then tuples in enumeration order).
SparseVec coordinates(const LieElement& u);
LieElement from_coordinates(const Context& ctx, const SparseVec& v);

// Linear basis of the ideal generated by gens.
std::vector<LieElement> ideal_closure(const std::vector<LieElement>& gens);

}  // namespace lmc

#pragma once

#include <vector>

#include "lmc/lie_element.hpp"
#include "lmc/linalg.hpp"
#include "lmc/trunc_poly.hpp"

namespace lmc {

// Endomorphism of L_{m,c}, given by the images of the generators.
//
// Composition order: compose(phi, psi) applies psi first, i.e.
// compose(phi, psi)(u) = phi(psi(u)). This is the usual product phi*psi of maps.
class Endomorphism {
 public:
  Endomorphism(const Context& ctx, std::vector<LieElement> images);

  static Endomorphism identity(const Context& ctx);
  // x_i -> sum_j a(j, i) x_j: column i of a is the linear part of the image of x_i.
  static Endomorphism linear(const Context& ctx, const RationalMatrix& a);
  static Endomorphism scalar(const Context& ctx, const Rational& alpha);

  const Context& context() const { return ctx_; }
  const std::vector<LieElement>& images() const { return images_; }
  const LieElement& image(int i) const { return images_[static_cast<std::size_t>(i)]; }

  // Entry (j, i) is the coefficient of x_j in the image of x_i.
  const RationalMatrix& linear_part() const { return linear_; }
  bool is_ia() const { return is_ia_; }
  bool is_automorphism() const { return is_automorphism_; }

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
    return a.ctx_ == b.ctx_ && a.images_ == b.images_;
  }

 private:
  Context ctx_;
  std::vector<LieElement> images_;
  RationalMatrix linear_;
  bool is_ia_ = false;
  bool is_automorphism_ = false;
};

// m x m matrix of truncated polynomials (cap c-1); entry (i, j) is the
// a_i-coordinate of the image of x_j, constant included.
class JacobianMatrix {
 public:
  explicit JacobianMatrix(const Context& ctx);
  static JacobianMatrix identity(const Context& ctx);

  const Context& context() const { return ctx_; }
  TruncPoly& operator()(int i, int j) { return entries_[flat(i, j)]; }
  const TruncPoly& operator()(int i, int j) const { return entries_[flat(i, j)]; }

  JacobianMatrix operator*(const JacobianMatrix& o) const;
  JacobianMatrix operator+(const JacobianMatrix& o) const;
  JacobianMatrix operator-(const JacobianMatrix& o) const;
  // Constant part is I and every column of J - I satisfies sum_i t_i s_ij = 0 up to degree c.
  bool is_ia_form() const;
  // Sum_{k<c} (-N)^k with N = J - I; the inverse of an IA-form matrix.
  JacobianMatrix neumann_inverse() const;

  friend bool operator==(const JacobianMatrix&, const JacobianMatrix&) = default;

 private:
  std::size_t flat(int i, int j) const { return static_cast<std::size_t>(i * ctx_.m() + j); }
  Context ctx_;
  std::vector<TruncPoly> entries_;
};

LieElement apply(const Endomorphism& phi, const LieElement& u);
Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi);
JacobianMatrix jacobian(const Endomorphism& phi);
Endomorphism ia_from_jacobian(const JacobianMatrix& j);
Endomorphism invert(const Endomorphism& phi);
// exp(ad u): x -> x + [x,u] + [x,u,u]/2! + ... (right action, as in the bracket convention).
Endomorphism exp_ad(const LieElement& u);

struct Decomposition {
  RationalMatrix linear;  // A, acting as x_i -> sum_j A(j, i) x_j
  Endomorphism ia_part;   // chi with phi = compose(linear map of A, chi)
};
Decomposition decompose(const Endomorphism& phi);

// phi^{-1} psi^{-1} phi psi.
Endomorphism group_commutator(const Endomorphism& phi, const Endomorphism& psi);

}  // namespace lmc

#include "lmc/endo.hpp"

#include <map>
#include <utility>

#include "lmc/errors.hpp"

namespace lmc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

Endomorphism::Endomorphism(const Context& ctx, std::vector<LieElement> images)
    : ctx_(ctx), images_(std::move(images)), linear_(idx(ctx.m()), idx(ctx.m())) {
  if (images_.size() != idx(ctx.m())) throw DimensionMismatch("an endomorphism needs one image per generator");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!(images_[i].context() == ctx)) throw DimensionMismatch("image lives in a different algebra");
    for (std::size_t j = 0; j < images_.size(); ++j) linear_(j, i) = images_[i].beta()[j];
  }
  is_ia_ = linear_.is_identity();
  is_automorphism_ = is_ia_ || linear_.inverse().has_value();
}

Endomorphism Endomorphism::identity(const Context& ctx) {
  std::vector<LieElement> images;
  for (int i = 0; i < ctx.m(); ++i) images.push_back(generator(ctx, i));
  return Endomorphism(ctx, std::move(images));
}

Endomorphism Endomorphism::linear(const Context& ctx, const RationalMatrix& a) {
  if (a.rows() != idx(ctx.m()) || a.cols() != idx(ctx.m())) throw DimensionMismatch("linear map shape");
  std::vector<LieElement> images;
  for (int i = 0; i < ctx.m(); ++i) {
    LieElement img(ctx);
    for (int j = 0; j < ctx.m(); ++j) img += a(idx(j), idx(i)) * generator(ctx, j);
    images.push_back(std::move(img));
  }
  return Endomorphism(ctx, std::move(images));
}

Endomorphism Endomorphism::scalar(const Context& ctx, const Rational& alpha) {
  RationalMatrix a = RationalMatrix::identity(idx(ctx.m()));
  for (int i = 0; i < ctx.m(); ++i) a(idx(i), idx(i)) = alpha;
  return linear(ctx, a);
}

JacobianMatrix::JacobianMatrix(const Context& ctx)
    : ctx_(ctx), entries_(idx(ctx.m() * ctx.m()), TruncPoly(ctx.m(), ctx.module_cap())) {}

JacobianMatrix JacobianMatrix::identity(const Context& ctx) {
  JacobianMatrix j(ctx);
  for (int i = 0; i < ctx.m(); ++i) j(i, i) = TruncPoly::constant(ctx.m(), ctx.module_cap(), Rational(1));
  return j;
}

JacobianMatrix JacobianMatrix::operator*(const JacobianMatrix& o) const {
  if (!(ctx_ == o.ctx_)) throw DimensionMismatch("Jacobians of different algebras");
  JacobianMatrix r(ctx_);
  const int m = ctx_.m();
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      const TruncPoly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < m; ++j) r(i, j) += a * o(k, j);
    }
  }
  return r;
}

JacobianMatrix JacobianMatrix::operator+(const JacobianMatrix& o) const {
  if (!(ctx_ == o.ctx_)) throw DimensionMismatch("Jacobians of different algebras");
  JacobianMatrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
  return r;
}

JacobianMatrix JacobianMatrix::operator-(const JacobianMatrix& o) const {
  if (!(ctx_ == o.ctx_)) throw DimensionMismatch("Jacobians of different algebras");
  JacobianMatrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
  return r;
}

bool JacobianMatrix::is_ia_form() const {
  const int m = ctx_.m();
  for (int j = 0; j < m; ++j) {
    std::vector<TruncPoly> column;
    for (int i = 0; i < m; ++i) {
      if ((*this)(i, j).constant_term() != Rational(i == j ? 1 : 0)) return false;
      column.push_back((*this)(i, j) - TruncPoly::constant(m, ctx_.module_cap(), Rational(i == j ? 1 : 0)));
    }
    if (!satisfies_membership(ctx_, column)) return false;
  }
  return true;
}

JacobianMatrix JacobianMatrix::neumann_inverse() const {
  const JacobianMatrix minus_n = identity(ctx_) - *this;
  JacobianMatrix result = identity(ctx_);
  JacobianMatrix term = identity(ctx_);
  for (int k = 1; k < ctx_.c(); ++k) {
    term = term * minus_n;
    result = result + term;
  }
  return result;
}

LieElement apply(const Endomorphism& phi, const LieElement& u) {
  const Context& ctx = phi.context();
  if (!(u.context() == ctx)) throw DimensionMismatch("apply: element of a different algebra");
  const BasisForm b = to_basis(u);
  LieElement result(ctx);
  for (int i = 0; i < ctx.m(); ++i) {
    if (!b.linear[idx(i)].is_zero()) result += b.linear[idx(i)] * phi.image(i);
  }
  // [x_a, x_b, x_{i3}, ..., x_{ik}] = [x_a, x_b] * t_{i3}...t_{ik}; group by the head pair.
  std::map<std::pair<int, int>, std::vector<TruncPoly::Term>> heads;
  for (const auto& [t, coef] : b.comm) {
    Monomial rest;
    for (std::size_t j = 2; j < t.size(); ++j) rest = rest * Monomial::var(t[j]);
    heads[{t[0], t[1]}].emplace_back(rest, coef);
  }
  if (heads.empty()) return result;
  // On L', ad(phi(x_k)) acts as multiplication by the linear form of phi(x_k).
  std::vector<std::vector<Rational>> forms;
  if (!phi.is_ia()) {
    for (int k = 0; k < ctx.m(); ++k) {
      std::vector<Rational> row;
      for (int j = 0; j < ctx.m(); ++j) row.push_back(phi.linear_part()(idx(j), idx(k)));
      forms.push_back(std::move(row));
    }
  }
  for (auto& [head, terms] : heads) {
    TruncPoly p = TruncPoly::from_terms(ctx.m(), ctx.module_cap(), std::move(terms));
    if (!phi.is_ia()) p = p.substitute_linear(forms);
    result += ad_polynomial_action(bracket(phi.image(head.first), phi.image(head.second)), p);
  }
  return result;
}

Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) {
  if (!(phi.context() == psi.context())) throw DimensionMismatch("compose: different algebras");
  std::vector<LieElement> images;
  images.reserve(psi.images().size());
  for (const auto& img : psi.images()) images.push_back(apply(phi, img));
  return Endomorphism(phi.context(), std::move(images));
}

JacobianMatrix jacobian(const Endomorphism& phi) {
  JacobianMatrix j(phi.context());
  for (int col = 0; col < phi.context().m(); ++col) {
    for (int row = 0; row < phi.context().m(); ++row) j(row, col) = phi.image(col).full_module(row);
  }
  return j;
}

Endomorphism ia_from_jacobian(const JacobianMatrix& j) {
  const Context& ctx = j.context();
  if (!j.is_ia_form()) {
    throw ValidationError("matrix is not the Jacobian of an IA map (constant part must be I and each column "
                          "must satisfy sum_i t_i s_ij = 0)");
  }
  std::vector<LieElement> images;
  for (int col = 0; col < ctx.m(); ++col) {
    std::vector<Rational> beta(idx(ctx.m()), Rational(0));
    beta[idx(col)] = 1;
    std::vector<TruncPoly> module;
    for (int row = 0; row < ctx.m(); ++row) {
      module.push_back(j(row, col) -
                       TruncPoly::constant(ctx.m(), ctx.module_cap(), Rational(row == col ? 1 : 0)));
    }
    images.emplace_back(ctx, std::move(beta), std::move(module));
  }
  return Endomorphism(ctx, std::move(images));
}

Endomorphism invert(const Endomorphism& phi) {
  if (!phi.is_automorphism()) throw DomainError("invert: linear part is not invertible");
  if (phi.is_ia()) return ia_from_jacobian(jacobian(phi).neumann_inverse());
  const Decomposition d = decompose(phi);
  const Endomorphism linear_inverse = Endomorphism::linear(phi.context(), *d.linear.inverse());
  return compose(invert(d.ia_part), linear_inverse);
}

Endomorphism exp_ad(const LieElement& u) {
  const Context& ctx = u.context();
  std::vector<LieElement> images;
  for (int i = 0; i < ctx.m(); ++i) {
    LieElement term = generator(ctx, i);
    LieElement sum = term;
    Rational factorial(1);
    for (int k = 1; k < ctx.c(); ++k) {
      term = bracket(term, u);
      if (term.is_zero()) break;
      factorial *= Rational(k);
      sum += (Rational(1) / factorial) * term;
    }
    images.push_back(std::move(sum));
  }
  return Endomorphism(ctx, std::move(images));
}

Decomposition decompose(const Endomorphism& phi) {
  if (!phi.is_automorphism()) throw DomainError("decompose: linear part is not invertible");
  const RationalMatrix a = phi.linear_part();
  if (phi.is_ia()) return {a, phi};
  const Endomorphism linear_inverse = Endomorphism::linear(phi.context(), *a.inverse());
  return {a, compose(linear_inverse, phi)};
}

Endomorphism group_commutator(const Endomorphism& phi, const Endomorphism& psi) {
  return compose(invert(phi), compose(invert(psi), compose(phi, psi)));
}

}  // namespace lmc

#include "lmc/normal.hpp"

#include <algorithm>

#include "lmc/errors.hpp"

namespace lmc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

TruncPoly zero_param(const Context& ctx) { return TruncPoly(ctx.m(), GInnAut::param_cap(ctx)); }

}  // namespace

GInnAut::GInnAut(const Context& ctx, std::vector<TruncPoly> f) : ctx_(ctx), f_(std::move(f)) {
  if (f_.size() != idx(ctx.m())) throw DimensionMismatch("GInn parameters need one polynomial per generator");
  for (const auto& p : f_) {
    if (p.num_vars() != ctx.m() || p.cap() != param_cap(ctx)) {
      throw DimensionMismatch("GInn parameter has the wrong ring (expected cap c-2)");
    }
    if (ctx.c() == 1 && !p.is_zero()) throw ValidationError("GInn(L_{m,1}) is trivial; parameters must be zero");
  }
}

GInnAut GInnAut::identity(const Context& ctx) {
  return GInnAut(ctx, std::vector<TruncPoly>(idx(ctx.m()), zero_param(ctx)));
}

bool GInnAut::is_identity() const {
  return std::all_of(f_.begin(), f_.end(), [](const TruncPoly& p) { return p.is_zero(); });
}

JacobianMatrix ginn_jacobian(const GInnAut& g) {
  const Context& ctx = g.context();
  const int m = ctx.m();
  const int cap = ctx.module_cap();
  JacobianMatrix jac = JacobianMatrix::identity(ctx);
  if (ctx.c() == 1) return jac;
  std::vector<TruncPoly> lifted;
  for (const auto& p : g.f()) lifted.push_back(p.with_cap(cap));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      jac(i, i) += lifted[idx(j)].times_var(j);
      jac(j, i) -= lifted[idx(j)].times_var(i);
    }
  }
  return jac;
}

Endomorphism ginn_to_endo(const GInnAut& g) { return ia_from_jacobian(ginn_jacobian(g)); }

GInnAut ginn_compose(const GInnAut& outer, const GInnAut& inner) {
  const Context& ctx = outer.context();
  if (!(ctx == inner.context())) throw DimensionMismatch("ginn_compose: different algebras");
  if (ctx.c() == 1) return GInnAut::identity(ctx);
  TruncPoly s = zero_param(ctx);
  for (int k = 0; k < ctx.m(); ++k) s += outer.f(k).times_var(k);
  std::vector<TruncPoly> f;
  for (int j = 0; j < ctx.m(); ++j) f.push_back(outer.f(j) + inner.f(j) + inner.f(j) * s);
  return GInnAut(ctx, std::move(f));
}

GInnAut ginn_invert(const GInnAut& g) {
  const Context& ctx = g.context();
  GInnAut current = g;
  GInnAut inverse = GInnAut::identity(ctx);
  for (int d = 0; d <= GInnAut::param_cap(ctx); ++d) {
    std::vector<TruncPoly> step;
    bool trivial = true;
    for (const auto& p : current.f()) {
      step.push_back(-p.graded_component(d));
      trivial = trivial && step.back().is_zero();
    }
    if (trivial) continue;
    const GInnAut s(ctx, std::move(step));
    current = ginn_compose(current, s);
    inverse = ginn_compose(inverse, s);
  }
  if (!current.is_identity()) throw InternalError("ginn_invert: peeling did not terminate at the identity");
  return inverse;
}

LieElement ginn_apply(const GInnAut& g, const LieElement& u) {
  const Context& ctx = g.context();
  if (!(ctx == u.context())) throw DimensionMismatch("ginn_apply: different algebras");
  LieElement result = u;
  for (int j = 0; j < ctx.m(); ++j) {
    if (g.f(j).is_zero()) continue;
    result += ad_polynomial_action(bracket(u, generator(ctx, j)), g.f(j));
  }
  return result;
}

Endomorphism normal_to_endo(const NormalAut& n) {
  return compose(Endomorphism::scalar(n.g.context(), n.alpha), ginn_to_endo(n.g));
}

std::optional<GInnAut> recognize_ginn(const Endomorphism& phi) {
  if (!phi.is_ia()) throw DomainError("recognize_ginn needs an IA map");
  const Context& ctx = phi.context();
  if (ctx.c() == 1) return GInnAut::identity(ctx);
  const JacobianMatrix jac = jacobian(phi);
  // Off-diagonal (k, j) must equal -t_j f_k.
  std::vector<TruncPoly> f;
  for (int k = 0; k < ctx.m(); ++k) {
    const int j = k == 0 ? 1 : 0;
    auto q = jac(k, j).divide_by_var(j);
    if (!q) return std::nullopt;
    f.push_back(-*q);
  }
  GInnAut g(ctx, std::move(f));
  if (!(ginn_jacobian(g) == jac)) return std::nullopt;
  return g;
}

std::optional<LieElement> recognize_inner(const Endomorphism& phi) {
  if (!phi.is_ia()) throw DomainError("recognize_inner needs an IA map");
  const Context& ctx = phi.context();
  LieElement u(ctx);
  // Invariant: exp_ad(u) agrees with phi in degrees <= e.
  for (int e = 1; e < ctx.c(); ++e) {
    const Endomorphism current = exp_ad(u);
    std::vector<LieElement> diff;
    bool trivial = true;
    for (int i = 0; i < ctx.m(); ++i) {
      diff.push_back(graded_component(phi.image(i) - current.image(i), e + 1));
      trivial = trivial && diff.back().is_zero();
    }
    if (trivial) continue;
    // Solve [x_i, w] = diff_i for homogeneous w of degree e.
    LieElement w(ctx);
    if (e == 1) {
      for (int k = 0; k < ctx.m(); ++k) {
        const int i = k == 0 ? 1 : 0;
        const Rational gamma = -diff[idx(i)].module()[idx(k)].coefficient(Monomial::var(i));
        w += gamma * generator(ctx, k);
      }
    } else {
      // [x_0, w] = -w * t_0 on the derived algebra.
      std::vector<TruncPoly> module;
      for (const auto& g : diff[0].module()) {
        auto q = g.divide_by_var(0);
        if (!q) return std::nullopt;
        module.push_back(-q->with_cap(ctx.module_cap()));
      }
      if (!satisfies_membership(ctx, module)) return std::nullopt;
      w = LieElement(ctx, std::vector<Rational>(idx(ctx.m()), Rational(0)), std::move(module));
    }
    for (int i = 0; i < ctx.m(); ++i) {
      if (!(bracket(generator(ctx, i), w) == diff[idx(i)])) return std::nullopt;
    }
    u += w;
  }
  if (!(exp_ad(u) == phi)) return std::nullopt;
  return u;
}

bool preserves_ideal(const Endomorphism& phi, const std::vector<LieElement>& gens) {
  std::vector<LieElement> nonzero;
  for (const auto& g : gens) {
    if (!(g.context() == phi.context())) throw DimensionMismatch("preserves_ideal: different algebras");
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) return true;
  const std::vector<LieElement> basis = ideal_closure(nonzero);
  EchelonBasis span;
  for (const auto& w : basis) span.insert(coordinates(w));
  EchelonBasis image_span;
  for (const auto& w : basis) {
    SparseVec img = coordinates(apply(phi, w));
    if (!span.contains(img)) return false;
    image_span.insert(std::move(img));
  }
  return image_span.rank() == span.rank();
}

std::vector<LieElement> scalar_obstruction_witness(const Context& ctx) {
  const int m = ctx.m();
  const int c = ctx.c();
  auto x = [&](int i) { return generator(ctx, i); };
  if (c == 1 || (m == 2 && (c == 2 || c == 3))) {
    throw DomainError("scalar automorphisms are normal in this context");
  }
  if (c == 2) return {x(0) + bracket(x(1), x(2))};
  if (c == 3) return {bracket(x(0), x(1)) + bracket({x(0), x(2), x(2)})};
  std::vector<LieElement> first{x(0)};
  for (int k = 0; k < c - 2; ++k) first.push_back(x(1));
  std::vector<LieElement> second{x(0), x(1)};
  for (int k = 0; k < c - 2; ++k) second.push_back(x(0));
  return {bracket(first) + bracket(second)};
}

namespace {

std::vector<LieElement> search_principal_witness(const Endomorphism& phi) {
  const Context& ctx = phi.context();
  for (int p = 0; p < ctx.m(); ++p) {
    const std::vector<LieElement> gens{generator(ctx, p)};
    if (!preserves_ideal(phi, gens)) return gens;
  }
  for (int p = 0; p < ctx.m(); ++p) {
    for (int q = 0; q < ctx.m(); ++q) {
      if (p == q) continue;
      for (int a = 1; a <= ctx.c() + 1; ++a) {
        const std::vector<LieElement> gens{Rational(a) * generator(ctx, p) + generator(ctx, q)};
        if (!preserves_ideal(phi, gens)) return gens;
      }
    }
  }
  return {};
}

NormalityVerdict not_normal(const Endomorphism& phi, std::vector<LieElement> witness, std::string reason,
                            bool search) {
  NormalityVerdict v;
  v.reason = std::move(reason);
  if (!witness.empty() && preserves_ideal(phi, witness)) witness.clear();
  if (witness.empty() && search) witness = search_principal_witness(phi);
  v.witness = std::move(witness);
  return v;
}

}  // namespace

NormalityVerdict decide_normal(const Endomorphism& phi, bool search_witness) {
  if (!phi.is_automorphism()) throw DomainError("decide_normal needs an automorphism");
  const Context& ctx = phi.context();
  const RationalMatrix& a = phi.linear_part();
  const int m = ctx.m();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && !a(idx(j), idx(i)).is_zero()) {
        return not_normal(phi, {generator(ctx, i)}, "linear part is not diagonal", search_witness);
      }
    }
  }
  const Rational alpha = a(0, 0);
  for (int i = 1; i < m; ++i) {
    if (a(idx(i), idx(i)) != alpha) {
      return not_normal(phi, {generator(ctx, 0) + generator(ctx, i)}, "linear part is not scalar",
                        search_witness);
    }
  }
  if (ctx.c() == 1) {
    NormalityVerdict v;
    v.normal = true;
    v.aut = NormalAut{alpha, GInnAut::identity(ctx)};
    v.reason = "scalar map of an abelian algebra";
    return v;
  }
  const bool scalars_allowed = m == 2 && (ctx.c() == 2 || ctx.c() == 3);
  if (!scalars_allowed && alpha != Rational(1)) {
    return not_normal(phi, scalar_obstruction_witness(ctx), "scalar factor must be 1 in this context",
                      search_witness);
  }
  const Endomorphism chi = compose(Endomorphism::scalar(ctx, Rational(1) / alpha), phi);
  if (auto g = recognize_ginn(chi)) {
    NormalityVerdict v;
    v.normal = true;
    v.aut = NormalAut{alpha, *g};
    v.reason = "IA part is generalized inner";
    return v;
  }
  return not_normal(phi, {}, "IA part is not generalized inner", search_witness);
}

Json verdict_to_json(const NormalityVerdict& v) {
  Json j;
  j["normal"] = v.normal;
  if (v.aut) {
    j["alpha"] = v.aut->alpha.to_string();
    Json f = Json::array();
    for (const auto& p : v.aut->g.f()) f.push_back(print_poly(p));
    j["f"] = std::move(f);
  } else {
    j["alpha"] = nullptr;
    j["f"] = Json::array();
  }
  Json w = Json::array();
  for (const auto& g : v.witness) w.push_back(print_element(g));
  j["witness"] = std::move(w);
  return j;
}

}  // namespace lmc

#include "lmc/cosets.hpp"

#include <map>
#include <utility>

#include "lmc/errors.hpp"

namespace lmc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

TruncPoly minus_delta(const JacobianMatrix& j, int r, int col) {
  const Context& ctx = j.context();
  return j(r, col) - TruncPoly::constant(ctx.m(), ctx.module_cap(), Rational(r == col ? 1 : 0));
}

bool depends_only_on_tail(const TruncPoly& p, int first) {
  for (int v = 0; v < first; ++v) {
    if (p.depends_on(v)) return false;
  }
  return true;
}

// q recovered from the off-diagonal pattern (k, j) = -t_j q_k; nothing if J does not match.
std::optional<GInnAut> pattern_parameters(const JacobianMatrix& j) {
  const Context& ctx = j.context();
  if (ctx.c() == 1) return GInnAut::identity(ctx);
  std::vector<TruncPoly> q;
  for (int k = 0; k < ctx.m(); ++k) {
    const int col = k == 0 ? 1 : 0;
    auto d = j(k, col).divide_by_var(col);
    if (!d) return std::nullopt;
    q.push_back(-*d);
  }
  GInnAut g(ctx, std::move(q));
  if (!(ginn_jacobian(g) == j)) return std::nullopt;
  return g;
}

bool theta_shape(const JacobianMatrix& j) {
  const Context& ctx = j.context();
  if (!j.is_ia_form()) return false;
  if (!minus_delta(j, 0, 0).is_zero()) return false;
  for (int i = 1; i < ctx.m(); ++i) {
    if (j(i, 0).depends_on(0)) return false;
  }
  return !j(0, 1).depends_on(1);
}

bool psi_shape(const JacobianMatrix& j) {
  if (!j.is_ia_form()) return false;
  const auto q = pattern_parameters(j);
  if (!q) return false;
  for (int k = 0; k < j.context().m(); ++k) {
    const TruncPoly& p = q->f(k);
    if (!p.constant_term().is_zero()) return false;
    if (!depends_only_on_tail(p, k)) return false;
  }
  return true;
}

bool df_shape(const JacobianMatrix& j) {
  const Context& ctx = j.context();
  const int m = ctx.m();
  const int c = ctx.c();
  if (!j.is_ia_form()) return false;
  const TruncPoly s = minus_delta(j, 0, 0);
  if (s.depends_on(0)) return false;
  TruncPoly first_sum = s.with_cap(c);
  TruncPoly rest_sum(m, c);
  for (int i = 1; i < m; ++i) {
    const auto [q, r] = j(i, 0).split_by_var(0);
    if (!depends_only_on_tail(q, i)) return false;
    first_sum += q.with_cap(c).times_var(i);
    rest_sum += r.with_cap(c).times_var(i);
  }
  if (!first_sum.is_zero() || !rest_sum.is_zero()) return false;
  return j(0, 1).coefficient(Monomial::var(1)).is_zero();
}
}  // namespace

bool shape_check(const JacobianMatrix& j, Shape shape) {
  switch (shape) {
    case Shape::theta: return theta_shape(j);
    case Shape::psi: return psi_shape(j);
    case Shape::df: return df_shape(j);
  }
  return false;
}

std::vector<std::string> psi_shape_warnings(const JacobianMatrix& j) {
  std::vector<std::string> out;
  const auto q = pattern_parameters(j);
  if (!q) return out;
  const Context& ctx = j.context();
  TruncPoly sum(ctx.m(), GInnAut::param_cap(ctx));
  for (int k = 1; k < ctx.m(); ++k) sum += q->f(k);
  if (!sum.is_zero()) {
    out.push_back("sum of q_2..q_m is " + print_poly(sum) + ", not 0 (condition not enforced)");
  }
  return out;
}

ThetaForm reduce_mod_in(const Endomorphism& phi) {
  if (!phi.is_ia()) throw DomainError("reduce_mod_in needs an IA automorphism");
  const Context& ctx = phi.context();
  const int m = ctx.m();
  if (ctx.c() == 1) {
    return {phi, jacobian(phi), GInnAut::identity(ctx)};
  }
  const JacobianMatrix jac = jacobian(phi);
  const JacobianMatrix id = JacobianMatrix::identity(ctx);
  const std::vector<Monomial> monos = monomials_up_to(m, GInnAut::param_cap(ctx));
  const std::size_t n = monos.size() * idx(m);

  // J(psi phi) - I = (J - I) + sum_u x_u G_u J with G_u = J(psi_u) - I linear in f.
  std::vector<std::pair<int, int>> entries{{0, 0}};
  for (int i = 1; i < m; ++i) entries.emplace_back(i, 0);
  entries.emplace_back(0, 1);
  auto constrained = [](std::pair<int, int> e, const Monomial& mono) {
    if (e == std::pair<int, int>{0, 0}) return true;
    if (e.second == 0) return mono.exponent(0) > 0;
    return mono.exponent(1) > 0;
  };
  struct Key {
    std::size_t entry;
    Monomial mono;
  };
  auto key_less = [](const Key& a, const Key& b) {
    if (a.entry != b.entry) return a.entry < b.entry;
    return MonomialOrder{}(a.mono, b.mono);
  };
  std::map<Key, SparseVec, decltype(key_less)> rows(key_less);
  auto add = [&](std::size_t e, const TruncPoly& p, std::size_t column, bool negate) {
    for (const auto& [mono, coef] : p.terms()) {
      if (!constrained(entries[e], mono)) continue;
      Rational& slot = rows[Key{e, mono}][column];
      slot += negate ? -coef : coef;
    }
  };
  for (std::size_t e = 0; e < entries.size(); ++e) {
    add(e, jac(entries[e].first, entries[e].second) - id(entries[e].first, entries[e].second), n, true);
  }
  for (int k = 0; k < m; ++k) {
    for (std::size_t t = 0; t < monos.size(); ++t) {
      std::vector<TruncPoly> f(idx(m), TruncPoly(m, GInnAut::param_cap(ctx)));
      f[idx(k)] = TruncPoly::monomial(m, GInnAut::param_cap(ctx), monos[t], Rational(1));
      const JacobianMatrix gj = (ginn_jacobian(GInnAut(ctx, std::move(f))) - id) * jac;
      const std::size_t column = idx(k) * monos.size() + t;
      for (std::size_t e = 0; e < entries.size(); ++e) add(e, gj(entries[e].first, entries[e].second), column, false);
    }
  }
  std::vector<SparseVec> system;
  for (auto& [key, row] : rows) system.push_back(std::move(row));
  const auto solution = solve_affine(system, n);
  if (!solution) throw ValidationError("reduce_mod_in: no generalized inner multiplier reaches the canonical shape");
  if (solution->nullity != 0) throw InternalError("reduce_mod_in: canonical multiplier is not unique");

  std::vector<TruncPoly> f;
  for (int k = 0; k < m; ++k) {
    std::vector<TruncPoly::Term> terms;
    for (std::size_t t = 0; t < monos.size(); ++t) {
      terms.emplace_back(monos[t], solution->x[idx(k) * monos.size() + t]);
    }
    f.push_back(TruncPoly::from_terms(m, GInnAut::param_cap(ctx), std::move(terms)));
  }
  const GInnAut multiplier(ctx, std::move(f));
  Endomorphism theta = compose(ginn_to_endo(multiplier), phi);
  JacobianMatrix theta_jac = jacobian(theta);
  if (!shape_check(theta_jac, Shape::theta)) throw InternalError("reduce_mod_in: result fails the theta shape");
  return {std::move(theta), std::move(theta_jac), ginn_invert(multiplier)};
}

PsiForm reduce_mod_inn_normal(const GInnAut& g) {
  const Context& ctx = g.context();
  const int m = ctx.m();
  const Endomorphism input = ginn_to_endo(g);
  Endomorphism current = input;
  if (ctx.c() >= 2) {
    // Linear inner factor removes the constant parts of the parameters.
    LieElement gamma(ctx);
    for (int j = 0; j < m; ++j) gamma -= g.f(j).constant_term() * generator(ctx, j);
    if (!gamma.is_zero()) current = compose(exp_ad(gamma), current);
    // Split off t_k from the parameters of index > k with an inner factor from L'.
    for (int k = 0; k + 1 < m; ++k) {
      const auto f = recognize_ginn(current);
      if (!f) throw InternalError("reduce_mod_inn_normal: lost the generalized inner form");
      LieElement w(ctx);
      for (int i = k + 1; i < m; ++i) {
        const TruncPoly quotient = f->f(i).split_by_var(k).first;
        if (quotient.is_zero()) continue;
        w -= ad_polynomial_action(bracket(generator(ctx, i), generator(ctx, k)), quotient);
      }
      if (!w.is_zero()) current = compose(exp_ad(w), current);
    }
  }
  auto q = recognize_ginn(current);
  if (!q) throw InternalError("reduce_mod_inn_normal: lost the generalized inner form");
  auto conjugator = recognize_inner(compose(input, invert(current)));
  if (!conjugator) throw InternalError("reduce_mod_inn_normal: difference is not inner");
  JacobianMatrix jac = jacobian(current);
  if (!shape_check(jac, Shape::psi)) throw InternalError("reduce_mod_inn_normal: result fails the psi shape");
  return {std::move(current), std::move(*q), std::move(jac), std::move(*conjugator)};
}

bool same_coset(const Endomorphism& phi, const Endomorphism& psi, Subgroup subgroup) {
  if (!phi.is_ia() || !psi.is_ia()) throw DomainError("same_coset needs IA automorphisms");
  const Endomorphism d = compose(phi, invert(psi));
  if (subgroup == Subgroup::ginn) return recognize_ginn(d).has_value();
  return recognize_inner(d).has_value();
}

Json theta_form_to_json(const ThetaForm& t) {
  Json j;
  j["canonical_jacobian"] = jacobian_to_json(t.jacobian);
  j["conjugator"] = automorphism_to_json(ginn_to_endo(t.conjugator));
  j["subgroup"] = "IN";
  return j;
}

Json psi_form_to_json(const PsiForm& p) {
  Json j;
  j["canonical_jacobian"] = jacobian_to_json(p.jacobian);
  j["conjugator"] = automorphism_to_json(exp_ad(p.conjugator));
  j["subgroup"] = "Inn";
  return j;
}

}  // namespace lmc

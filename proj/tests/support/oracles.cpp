#include "oracles.hpp"

#include <map>

#include "lmc/errors.hpp"
#include "lmc/linalg.hpp"

namespace lmc::testing {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Maps monomials to dense column indices.
struct MonomialIndex {
  std::vector<Monomial> monos;
  std::size_t find(const Monomial& m) const {
    for (std::size_t k = 0; k < monos.size(); ++k) {
      if (monos[k] == m) return k;
    }
    throw InternalError("monomial outside the index");
  }
};

}  // namespace

BasisForm basis_by_solve(const LieElement& u) {
  const Context& ctx = u.context();
  BasisForm out(ctx);
  out.linear = u.beta();
  for (int k = 2; k <= ctx.c(); ++k) {
    const LieElement part = graded_component(u, k);
    const auto tuples = enumerate_basis(ctx, k);
    std::vector<LieElement> images;
    for (const auto& t : tuples) {
      BasisForm b(ctx);
      b.comm.emplace(t, Rational(1));
      images.push_back(from_basis(b));
    }
    const std::size_t n = tuples.size();
    // one equation per (coordinate, monomial of degree k - 1)
    std::map<std::pair<int, std::vector<int>>, SparseVec> eqs;
    auto key = [&](int i, const Monomial& mono) {
      std::vector<int> e;
      for (int v = 0; v < ctx.m(); ++v) e.push_back(mono.exponent(v));
      return std::make_pair(i, e);
    };
    for (std::size_t col = 0; col < n; ++col) {
      for (int i = 0; i < ctx.m(); ++i) {
        for (const auto& [mono, coef] : images[col].module()[idx(i)].terms()) eqs[key(i, mono)][col] = coef;
      }
    }
    for (int i = 0; i < ctx.m(); ++i) {
      for (const auto& [mono, coef] : part.module()[idx(i)].terms()) eqs[key(i, mono)][n] = coef;
    }
    std::vector<SparseVec> rows;
    for (auto& [k2, row] : eqs) rows.push_back(row);
    const auto sol = solve_affine(rows, n);
    if (!sol || sol->nullity != 0) throw InternalError("basis solve failed");
    for (std::size_t col = 0; col < n; ++col) {
      if (!sol->x[col].is_zero()) out.comm.emplace(tuples[col], sol->x[col]);
    }
  }
  return out;
}

LieElement apply_by_chain_rule(const Endomorphism& phi, const LieElement& u) {
  if (!phi.is_ia()) throw DomainError("chain rule oracle needs an IA map");
  const Context& ctx = u.context();
  LieElement out(ctx);
  std::vector<TruncPoly> w_module;
  for (int i = 0; i < ctx.m(); ++i) {
    out += u.beta()[idx(i)] * phi.image(i);
    w_module.push_back(u.module()[idx(i)]);
  }
  const JacobianMatrix j = jacobian(phi);
  std::vector<TruncPoly> image;
  for (int i = 0; i < ctx.m(); ++i) {
    TruncPoly acc(ctx.m(), ctx.module_cap());
    for (int l = 0; l < ctx.m(); ++l) acc += j(i, l) * w_module[idx(l)];
    image.push_back(acc);
  }
  return out + LieElement(ctx, std::vector<Rational>(idx(ctx.m()), Rational(0)), image);
}

std::optional<GInnAut> ginn_by_solve(const Endomorphism& phi) {
  const Context& ctx = phi.context();
  const int m = ctx.m();
  if (ctx.c() == 1) return GInnAut::identity(ctx);
  const int pcap = GInnAut::param_cap(ctx);
  MonomialIndex params{monomials_up_to(m, pcap)};
  const std::size_t per = params.monos.size();
  const std::size_t n = per * idx(m);
  const JacobianMatrix j = jacobian(phi);
  std::vector<SparseVec> rows;
  for (const auto& mono : monomials_up_to(m, ctx.c() - 1)) {
    if (mono.degree() == 0) continue;
    for (int i = 0; i < m; ++i) {
      for (int l = 0; l < m; ++l) {
        SparseVec row;
        const Rational target = j(i, l).coefficient(mono);
        if (i == l) {
          for (int v = 0; v < m; ++v) {
            if (v == i || !mono.divisible_by_var(v)) continue;
            row[idx(v) * per + params.find(mono.divided_by_var(v))] += Rational(1);
          }
        } else if (mono.divisible_by_var(l)) {
          row[idx(i) * per + params.find(mono.divided_by_var(l))] += Rational(-1);
        }
        if (!target.is_zero()) row[n] = target;
        if (!row.empty()) rows.push_back(row);
      }
    }
  }
  const auto sol = solve_affine(rows, n);
  if (!sol) return std::nullopt;
  std::vector<TruncPoly> f;
  for (int v = 0; v < m; ++v) {
    std::vector<TruncPoly::Term> terms;
    for (std::size_t k = 0; k < per; ++k) terms.emplace_back(params.monos[k], sol->x[idx(v) * per + k]);
    f.push_back(TruncPoly::from_terms(m, pcap, std::move(terms)));
  }
  return GInnAut(ctx, std::move(f));
}

Endomorphism example_map(long a, long a1, long a2, long b, long b1, long b2) {
  const Context ctx(2, 3);
  const LieElement x1 = generator(ctx, 0), x2 = generator(ctx, 1);
  const LieElement c12 = bracket(x1, x2);
  const LieElement c121 = bracket({x1, x2, x1});
  const LieElement c122 = bracket({x1, x2, x2});
  return Endomorphism(ctx, {x1 + Rational(a) * c12 + Rational(a1) * c121 + Rational(a2) * c122,
                            x2 + Rational(b) * c12 + Rational(b1) * c121 + Rational(b2) * c122});
}

GInnAut example_params(long a, long a1, long a2, long b, long b1, long b2) {
  const Context ctx(2, 3);
  auto poly = [](long k, long k1, long k2) {
    return TruncPoly::from_terms(2, 1, {{Monomial(), Rational(k)}, {Monomial::var(0), Rational(k1)},
                                        {Monomial::var(1), Rational(k2)}});
  };
  return GInnAut(ctx, {-poly(b, b1, b2), poly(a, a1, a2)});
}

LieElement lin(const Context& ctx, std::vector<std::pair<long, int>> terms) {
  LieElement u(ctx);
  for (const auto& [coef, i] : terms) u += Rational(coef) * generator(ctx, i);
  return u;
}

}  // namespace lmc::testing

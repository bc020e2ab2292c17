#include "lmc/lie_element.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <string>

#include "lmc/errors.hpp"

namespace lmc {

Context::Context(int m, int c) : m_(m), c_(c) {
  if (m < 2 || m > kMaxVars) {
    throw ValidationError("number of generators must be in 2.." + std::to_string(kMaxVars));
  }
  if (c < 1 || c > 200) throw ValidationError("nilpotency class must be in 1..200");
}

namespace {

std::vector<TruncPoly> zero_module(const Context& ctx) {
  return std::vector<TruncPoly>(static_cast<std::size_t>(ctx.m()), TruncPoly(ctx.m(), ctx.module_cap()));
}

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

bool satisfies_membership(const Context& ctx, const std::vector<TruncPoly>& module) {
  TruncPoly sum(ctx.m(), ctx.c());
  for (int i = 0; i < ctx.m(); ++i) {
    const TruncPoly& g = module[idx(i)];
    if (!g.constant_term().is_zero()) return false;
    sum += g.with_cap(ctx.c()).times_var(i);
  }
  return sum.is_zero();
}

LieElement::LieElement(const Context& ctx)
    : ctx_(ctx), beta_(idx(ctx.m()), Rational(0)), module_(zero_module(ctx)) {}

LieElement::LieElement(const Context& ctx, std::vector<Rational> beta, std::vector<TruncPoly> module, Unchecked)
    : ctx_(ctx), beta_(std::move(beta)), module_(std::move(module)) {}

LieElement::LieElement(const Context& ctx, std::vector<Rational> beta, std::vector<TruncPoly> module)
    : ctx_(ctx), beta_(std::move(beta)), module_(std::move(module)) {
  if (beta_.size() != idx(ctx.m()) || module_.size() != idx(ctx.m())) {
    throw DimensionMismatch("element needs " + std::to_string(ctx.m()) + " coordinates");
  }
  for (const auto& g : module_) {
    if (g.num_vars() != ctx.m() || g.cap() != ctx.module_cap()) {
      throw DimensionMismatch("module polynomial has the wrong ring for L_{m,c}");
    }
  }
  if (!satisfies_membership(ctx, module_)) {
    throw ValidationError("module part is not the image of a commutator element (sum t_i f_i != 0)");
  }
}

LieElement make_unchecked(const Context& ctx, std::vector<Rational> beta, std::vector<TruncPoly> module) {
  return LieElement(ctx, std::move(beta), std::move(module), LieElement::Unchecked{});
}

TruncPoly LieElement::full_module(int i) const {
  return module_[idx(i)] + TruncPoly::constant(ctx_.m(), ctx_.module_cap(), beta_[idx(i)]);
}

bool LieElement::is_zero() const {
  return in_derived() && std::all_of(module_.begin(), module_.end(), [](const TruncPoly& g) { return g.is_zero(); });
}

bool LieElement::in_derived() const {
  return std::all_of(beta_.begin(), beta_.end(), [](const Rational& b) { return b.is_zero(); });
}

void LieElement::check_same_context(const LieElement& o) const {
  if (!(ctx_ == o.ctx_)) throw DimensionMismatch("elements of different algebras");
}

LieElement LieElement::operator-() const { return scaled(Rational(-1)); }

LieElement& LieElement::operator+=(const LieElement& o) {
  check_same_context(o);
  for (std::size_t i = 0; i < beta_.size(); ++i) {
    beta_[i] += o.beta_[i];
    module_[i] += o.module_[i];
  }
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  check_same_context(o);
  for (std::size_t i = 0; i < beta_.size(); ++i) {
    beta_[i] -= o.beta_[i];
    module_[i] -= o.module_[i];
  }
  return *this;
}

LieElement LieElement::scaled(const Rational& s) const {
  LieElement r = *this;
  for (std::size_t i = 0; i < beta_.size(); ++i) {
    r.beta_[i] *= s;
    r.module_[i] = r.module_[i].scaled(s);
  }
  return r;
}

LieElement generator(const Context& ctx, int i) {
  if (i < 0 || i >= ctx.m()) throw IndexError("generator index " + std::to_string(i) + " out of range");
  std::vector<Rational> beta(idx(ctx.m()), Rational(0));
  beta[idx(i)] = 1;
  return make_unchecked(ctx, std::move(beta), zero_module(ctx));
}

namespace {

// p * sum_j coeffs[j] t_j
TruncPoly times_linear(const TruncPoly& p, const std::vector<Rational>& coeffs) {
  TruncPoly r(p.num_vars(), p.cap());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!coeffs[j].is_zero()) r += p.times_var(static_cast<int>(j)).scaled(coeffs[j]);
  }
  return r;
}

}  // namespace

LieElement bracket(const LieElement& u, const LieElement& v) {
  const Context& ctx = u.context();
  if (!(ctx == v.context())) throw DimensionMismatch("bracket of elements of different algebras");
  std::vector<TruncPoly> module;
  module.reserve(idx(ctx.m()));
  for (int i = 0; i < ctx.m(); ++i) {
    const TruncPoly f = times_linear(u.full_module(i), v.beta());
    const TruncPoly g = times_linear(v.full_module(i), u.beta());
#ifdef LMC_MUTATE_BRACKET
    module.push_back(f + g);
#else
    module.push_back(f - g);
#endif
  }
  return make_unchecked(ctx, std::vector<Rational>(idx(ctx.m()), Rational(0)), std::move(module));
}

LieElement bracket(const std::vector<LieElement>& us) {
  if (us.size() < 2) throw DomainError("a bracket needs at least two arguments");
  LieElement acc = bracket(us[0], us[1]);
  for (std::size_t k = 2; k < us.size(); ++k) acc = bracket(acc, us[k]);
  return acc;
}

LieElement ad_polynomial_action(const LieElement& w, const TruncPoly& p) {
  const Context& ctx = w.context();
  if (!w.in_derived()) throw DomainError("ad-polynomial action needs an element of the derived algebra");
  if (p.num_vars() != ctx.m()) throw DimensionMismatch("polynomial has the wrong number of variables");
  const TruncPoly q = p.with_cap(ctx.module_cap());
  std::vector<TruncPoly> module;
  module.reserve(idx(ctx.m()));
  for (const auto& g : w.module()) module.push_back(g * q);
  return make_unchecked(ctx, w.beta(), std::move(module));
}

LieElement graded_component(const LieElement& u, int k) {
  const Context& ctx = u.context();
  if (k < 1 || k > ctx.c()) throw IndexError("degree out of range");
  if (k == 1) return make_unchecked(ctx, u.beta(), zero_module(ctx));
  std::vector<TruncPoly> module;
  module.reserve(idx(ctx.m()));
  for (const auto& g : u.module()) module.push_back(g.graded_component(k - 1));
  return make_unchecked(ctx, std::vector<Rational>(idx(ctx.m()), Rational(0)), std::move(module));
}

bool is_basis_tuple(const Context& ctx, const BasisTuple& t) {
  const int k = static_cast<int>(t.size());
  if (k < 1 || k > ctx.c()) return false;
  for (int i : t) {
    if (i < 0 || i >= ctx.m()) return false;
  }
  if (k == 1) return true;
  if (!(t[0] > t[1])) return false;
  for (std::size_t j = 2; j < t.size(); ++j) {
    if (t[j] < t[j - 1]) return false;
  }
  return true;
}

LieElement from_basis(const BasisForm& b) {
  const Context& ctx = b.ctx;
  const int m = ctx.m();
  const int cap = ctx.module_cap();
  if (b.linear.size() != idx(m)) throw DimensionMismatch("basis form has the wrong number of generators");
  std::vector<std::vector<TruncPoly::Term>> terms(idx(m));
  for (const auto& [t, coef] : b.comm) {
    if (t.size() < 2 || !is_basis_tuple(ctx, t)) throw ValidationError("malformed basis tuple");
    if (coef.is_zero()) continue;
    Monomial rest;
    for (std::size_t j = 2; j < t.size(); ++j) rest = rest * Monomial::var(t[j]);
    // (a_{i1} t_{i2} - a_{i2} t_{i1}) t^rest
    terms[idx(t[0])].emplace_back(rest * Monomial::var(t[1]), coef);
    terms[idx(t[1])].emplace_back(rest * Monomial::var(t[0]), -coef);
  }
  std::vector<TruncPoly> module;
  module.reserve(idx(m));
  for (auto& ts : terms) module.push_back(TruncPoly::from_terms(m, cap, std::move(ts)));
  return make_unchecked(ctx, b.linear, std::move(module));
}

BasisForm to_basis(const LieElement& u) {
  // In the a_i coordinate, a monomial M with min variable j < i can only come
  // from the basis element (i, j, M/t_j); this reads the coefficients off.
  const Context& ctx = u.context();
  BasisForm b(ctx);
  b.linear = u.beta();
  for (int i = 0; i < ctx.m(); ++i) {
    for (const auto& [mono, coef] : u.module()[idx(i)].terms()) {
      const int j = mono.min_var();
      if (j < 0 || j >= i) continue;
      BasisTuple t{i, j};
      const Monomial rest = mono.divided_by_var(j);
      for (int v = 0; v < ctx.m(); ++v) t.insert(t.end(), static_cast<std::size_t>(rest.exponent(v)), v);
      b.comm.emplace(std::move(t), coef);
    }
  }
  if (!(from_basis(b) == u)) {
    throw InternalError("element does not lie in L_{m,c}: basis read-off does not reproduce it");
  }
  return b;
}

namespace {

void append_nondecreasing(int m, int lo, int len, BasisTuple& prefix, std::vector<BasisTuple>& out) {
  if (len == 0) {
    out.push_back(prefix);
    return;
  }
  for (int v = lo; v < m; ++v) {
    prefix.push_back(v);
    append_nondecreasing(m, v, len - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<BasisTuple> enumerate_basis(const Context& ctx, int k) {
  if (k < 1 || k > ctx.c()) throw IndexError("degree " + std::to_string(k) + " out of range 1..c");
  std::vector<BasisTuple> out;
  if (k == 1) {
    for (int i = 0; i < ctx.m(); ++i) out.push_back({i});
    return out;
  }
  for (int i1 = 0; i1 < ctx.m(); ++i1) {
    for (int i2 = 0; i2 < i1; ++i2) {
      BasisTuple prefix{i1, i2};
      append_nondecreasing(ctx.m(), i2, k - 2, prefix, out);
    }
  }
  return out;
}

std::vector<BasisTuple> enumerate_basis(const Context& ctx) {
  std::vector<BasisTuple> out;
  for (int k = 1; k <= ctx.c(); ++k) {
    auto part = enumerate_basis(ctx, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::size_t basis_dimension(const Context& ctx, int k) {
  if (k < 1 || k > ctx.c()) throw IndexError("degree out of range");
  if (k == 1) return idx(ctx.m());
  // C(m+k-2, k) computed incrementally; each prefix product is an integer.
  const std::size_t n = idx(ctx.m() + k - 2);
  std::size_t binom = 1;
  for (std::size_t r = 1; r <= idx(k); ++r) binom = binom * (n - idx(k) + r) / r;
  return idx(k - 1) * binom;
}

std::size_t algebra_dimension(const Context& ctx) {
  std::size_t total = 0;
  for (int k = 1; k <= ctx.c(); ++k) total += basis_dimension(ctx, k);
  return total;
}

namespace {

struct BasisIndex {
  std::vector<BasisTuple> tuples;
  std::map<BasisTuple, std::size_t> position;
};

std::shared_ptr<const BasisIndex> basis_index(const Context& ctx) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const BasisIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{ctx.m(), ctx.c()}];
  if (!slot) {
    auto index = std::make_shared<BasisIndex>();
    index->tuples = enumerate_basis(ctx);
    for (std::size_t p = 0; p < index->tuples.size(); ++p) index->position.emplace(index->tuples[p], p);
    slot = std::move(index);
  }
  return slot;
}

}  // namespace

SparseVec coordinates(const LieElement& u) {
  const auto index = basis_index(u.context());
  const BasisForm b = to_basis(u);
  SparseVec v;
  for (int i = 0; i < u.context().m(); ++i) {
    if (!b.linear[idx(i)].is_zero()) v.emplace(idx(i), b.linear[idx(i)]);
  }
  for (const auto& [t, coef] : b.comm) v.emplace(index->position.at(t), coef);
  return v;
}

LieElement from_coordinates(const Context& ctx, const SparseVec& v) {
  const auto index = basis_index(ctx);
  BasisForm b(ctx);
  for (const auto& [p, coef] : v) {
    if (p >= index->tuples.size()) throw IndexError("coordinate index out of range");
    const BasisTuple& t = index->tuples[p];
    if (t.size() == 1) {
      b.linear[idx(t[0])] += coef;
    } else if (!coef.is_zero()) {
      b.comm[t] += coef;
    }
  }
  return from_basis(b);
}

std::vector<LieElement> ideal_closure(const std::vector<LieElement>& gens) {
  if (gens.empty()) throw DomainError("ideal closure needs at least one generator");
  const Context ctx = gens.front().context();
  EchelonBasis echelon;
  std::vector<LieElement> basis;
  std::deque<LieElement> queue;
  auto offer = [&](const LieElement& w) {
    if (!(w.context() == ctx)) throw DimensionMismatch("ideal generators from different algebras");
    if (echelon.insert(coordinates(w))) {
      basis.push_back(w);
      queue.push_back(w);
    }
  };
  for (const auto& g : gens) offer(g);
  while (!queue.empty()) {
    const LieElement w = queue.front();
    queue.pop_front();
    for (int j = 0; j < ctx.m(); ++j) offer(bracket(w, generator(ctx, j)));
  }
  return basis;
}

}  // namespace lmc

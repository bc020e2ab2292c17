#include "lmc/trunc_poly.hpp"

#include <algorithm>
#include <string>

#include "lmc/errors.hpp"

namespace lmc {

Monomial Monomial::var(int j, int power) {
  Monomial m;
  m.set_exponent(j, power);
  return m;
}

void Monomial::set_exponent(int j, int e) {
  if (j < 0 || j >= kMaxVars) throw IndexError("variable index out of range");
  if (e < 0 || e > 255) throw DomainError("exponent out of range");
  exps_[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(e);
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

int Monomial::min_var() const {
  for (int j = 0; j < kMaxVars; ++j) {
    if (exps_[static_cast<std::size_t>(j)] != 0) return j;
  }
  return -1;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    const int e = exps_[j] + o.exps_[j];
    if (e > 255) throw DomainError("exponent overflow");
    r.exps_[j] = static_cast<std::uint8_t>(e);
  }
  return r;
}

Monomial Monomial::divided_by_var(int j) const {
  Monomial r = *this;
  r.set_exponent(j, exponent(j) - 1);
  return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  for (int j = 0; j < kMaxVars; ++j) {
    if (a.exponent(j) != b.exponent(j)) return a.exponent(j) > b.exponent(j);
  }
  return false;
}

TruncPoly::TruncPoly(int num_vars, int cap) : num_vars_(num_vars), cap_(cap) {
  if (num_vars < 1 || num_vars > kMaxVars) {
    throw DimensionMismatch("num_vars must be in 1.." + std::to_string(kMaxVars));
  }
  if (cap < 0) throw DimensionMismatch("cap must be nonnegative");
}

TruncPoly TruncPoly::constant(int num_vars, int cap, const Rational& c) {
  return monomial(num_vars, cap, Monomial(), c);
}

TruncPoly TruncPoly::variable(int num_vars, int cap, int j) {
  TruncPoly p(num_vars, cap);
  p.check_var(j);
  return monomial(num_vars, cap, Monomial::var(j), Rational(1));
}

TruncPoly TruncPoly::monomial(int num_vars, int cap, const Monomial& mono, const Rational& c) {
  TruncPoly p(num_vars, cap);
  for (int j = num_vars; j < kMaxVars; ++j) {
    if (mono.exponent(j) != 0) throw DimensionMismatch("monomial uses a variable beyond num_vars");
  }
  if (!c.is_zero() && mono.degree() <= cap) p.terms_.emplace_back(mono, c);
  return p;
}

TruncPoly TruncPoly::from_terms(int num_vars, int cap, std::vector<Term> terms) {
  TruncPoly p(num_vars, cap);
  std::erase_if(terms, [cap](const Term& t) { return t.first.degree() > cap || t.second.is_zero(); });
  MonomialOrder less;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return less(a.first, b.first); });
  for (auto& t : terms) {
    for (int j = num_vars; j < kMaxVars; ++j) {
      if (t.first.exponent(j) != 0) throw DimensionMismatch("monomial uses a variable beyond num_vars");
    }
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational TruncPoly::coefficient(const Monomial& mono) const {
  MonomialOrder less;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [&](const Term& t, const Monomial& m) { return less(t.first, m); });
  if (it != terms_.end() && it->first == mono) return it->second;
  return Rational(0);
}

int TruncPoly::degree() const { return terms_.empty() ? -1 : terms_.back().first.degree(); }

bool TruncPoly::depends_on(int j) const {
  check_var(j);
  return std::any_of(terms_.begin(), terms_.end(), [j](const Term& t) { return t.first.exponent(j) > 0; });
}

void TruncPoly::check_compatible(const TruncPoly& o) const {
  if (num_vars_ != o.num_vars_ || cap_ != o.cap_) {
    throw DimensionMismatch("polynomials over different rings (num_vars " + std::to_string(num_vars_) + "/" +
                            std::to_string(o.num_vars_) + ", cap " + std::to_string(cap_) + "/" +
                            std::to_string(o.cap_) + ")");
  }
}

void TruncPoly::check_var(int j) const {
  if (j < 0 || j >= num_vars_) throw IndexError("variable index " + std::to_string(j) + " out of range");
}

TruncPoly TruncPoly::operator-() const {
  TruncPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o) {
  check_compatible(o);
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  MonomialOrder less;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && less(a->first, b->first))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || less(b->first, a->first)) {
      out.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& o) { return *this += -o; }

TruncPoly TruncPoly::mul(const TruncPoly& o) const {
  check_compatible(o);
  std::vector<Term> prods;
  for (const auto& [ma, ca] : terms_) {
    const int da = ma.degree();
    if (da > cap_) break;
    for (const auto& [mb, cb] : o.terms_) {
      if (da + mb.degree() > cap_) break;
      prods.emplace_back(ma * mb, ca * cb);
    }
  }
  return from_terms(num_vars_, cap_, std::move(prods));
}

TruncPoly TruncPoly::scaled(const Rational& s) const {
  if (s.is_zero()) return TruncPoly(num_vars_, cap_);
  TruncPoly r = *this;
  for (auto& t : r.terms_) t.second *= s;
  return r;
}

TruncPoly TruncPoly::times_var(int j) const {
  check_var(j);
  std::vector<Term> out;
  out.reserve(terms_.size());
  const Monomial v = Monomial::var(j);
  for (const auto& [m, c] : terms_) {
    if (m.degree() + 1 > cap_) break;
    out.emplace_back(m * v, c);
  }
  return from_terms(num_vars_, cap_, std::move(out));
}

std::optional<TruncPoly> TruncPoly::divide_by_var(int j) const {
  check_var(j);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    if (!m.divisible_by_var(j)) return std::nullopt;
    out.emplace_back(m.divided_by_var(j), c);
  }
  return from_terms(num_vars_, std::max(cap_ - 1, 0), std::move(out));
}

TruncPoly TruncPoly::graded_component(int k) const {
  TruncPoly r(num_vars_, cap_);
  for (const auto& t : terms_) {
    if (t.first.degree() == k) r.terms_.push_back(t);
  }
  return r;
}

TruncPoly TruncPoly::with_cap(int cap) const {
  TruncPoly r(num_vars_, cap);
  for (const auto& t : terms_) {
    if (t.first.degree() > cap) break;
    r.terms_.push_back(t);
  }
  return r;
}

std::pair<TruncPoly, TruncPoly> TruncPoly::split_by_var(int j) const {
  check_var(j);
  std::vector<Term> quotient;
  std::vector<Term> rest;
  for (const auto& [m, c] : terms_) {
    if (m.divisible_by_var(j)) {
      quotient.emplace_back(m.divided_by_var(j), c);
    } else {
      rest.emplace_back(m, c);
    }
  }
  return {from_terms(num_vars_, std::max(cap_ - 1, 0), std::move(quotient)),
          from_terms(num_vars_, cap_, std::move(rest))};
}

TruncPoly TruncPoly::substitute_linear(const std::vector<std::vector<Rational>>& forms) const {
  if (forms.size() != static_cast<std::size_t>(num_vars_)) throw DimensionMismatch("substitution arity");
  std::vector<TruncPoly> lin;
  lin.reserve(forms.size());
  for (const auto& row : forms) {
    if (row.size() != static_cast<std::size_t>(num_vars_)) throw DimensionMismatch("substitution arity");
    TruncPoly l(num_vars_, cap_);
    for (int j = 0; j < num_vars_; ++j) {
      l += monomial(num_vars_, cap_, Monomial::var(j), row[static_cast<std::size_t>(j)]);
    }
    lin.push_back(std::move(l));
  }
  // powers[k][e] = lin[k]^e, built on demand.
  std::vector<std::vector<TruncPoly>> powers(lin.size());
  auto power = [&](int k, int e) -> const TruncPoly& {
    auto& pk = powers[static_cast<std::size_t>(k)];
    if (pk.empty()) pk.push_back(constant(num_vars_, cap_, Rational(1)));
    while (static_cast<int>(pk.size()) <= e) pk.push_back(pk.back() * lin[static_cast<std::size_t>(k)]);
    return pk[static_cast<std::size_t>(e)];
  };
  TruncPoly result(num_vars_, cap_);
  for (const auto& [m, c] : terms_) {
    TruncPoly term = constant(num_vars_, cap_, c);
    for (int k = 0; k < num_vars_; ++k) {
      if (m.exponent(k) > 0) term = term * power(k, m.exponent(k));
    }
    result += term;
  }
  return result;
}

std::vector<Monomial> monomials_up_to(int num_vars, int degree) {
  std::vector<Monomial> out{Monomial()};
  std::size_t begin = 0;
  for (int d = 1; d <= degree; ++d) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k) {
      // extend only at or after the last used variable to avoid duplicates
      int last = 0;
      for (int v = num_vars - 1; v >= 0; --v) {
        if (out[k].exponent(v) > 0) {
          last = v;
          break;
        }
      }
      for (int v = last; v < num_vars; ++v) out.push_back(out[k] * Monomial::var(v));
    }
    begin = end;
  }
  return out;
}

}  // namespace lmc

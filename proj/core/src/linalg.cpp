#include "lmc/linalg.hpp"

#include <utility>

#include "lmc/errors.hpp"

namespace lmc {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
  RationalMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  }
  return r;
}

bool RationalMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const Rational scale = Rational(1) / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

namespace {

void axpy(SparseVec& v, const Rational& f, const SparseVec& row) {
  for (const auto& [k, x] : row) {
    auto [it, inserted] = v.try_emplace(k, Rational(0));
    it->second -= f * x;
    if (it->second.is_zero()) v.erase(it);
  }
}

void drop_zeros(SparseVec& v) { std::erase_if(v, [](const auto& kv) { return kv.second.is_zero(); }); }

}  // namespace

SparseVec EchelonBasis::reduce(SparseVec v) const {
  drop_zeros(v);
  auto it = v.begin();
  while (it != v.end()) {
    const std::size_t k = it->first;
    auto row = rows_.find(k);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const Rational f = it->second;
    axpy(v, f, row->second);
    it = v.upper_bound(k);
  }
  return v;
}

bool EchelonBasis::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Rational lead = v.begin()->second;
  const Rational inv = Rational(1) / lead;
  for (auto& [k, x] : v) x *= inv;
  const std::size_t pivot = v.begin()->first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool EchelonBasis::contains(SparseVec v) const { return reduce(std::move(v)).empty(); }

std::optional<AffineSolution> solve_affine(const std::vector<SparseVec>& rows, std::size_t n) {
  // Echelon form with the right-hand side as the last column.
  std::map<std::size_t, SparseVec> pivots;
  for (SparseVec v : rows) {
    drop_zeros(v);
    auto it = v.begin();
    while (it != v.end() && it->first < n) {
      const std::size_t k = it->first;
      auto row = pivots.find(k);
      if (row == pivots.end()) break;
      const Rational f = it->second;
      axpy(v, f, row->second);
      it = v.upper_bound(k);
    }
    if (it == v.end()) continue;
    if (it->first >= n) return std::nullopt;  // 0 = b with b != 0
    // Remove entries before the new pivot that were already reduced away.
    const std::size_t pivot = it->first;
    const Rational inv = Rational(1) / it->second;
    SparseVec row;
    for (auto jt = it; jt != v.end(); ++jt) row.emplace(jt->first, jt->second * inv);
    pivots.emplace(pivot, std::move(row));
  }
  AffineSolution sol;
  sol.x.assign(n, Rational(0));
  sol.nullity = n - pivots.size();
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const std::size_t p = it->first;
    Rational value(0);
    for (const auto& [k, a] : it->second) {
      if (k == p) continue;
      if (k == n) {
        value += a;
      } else {
        value -= a * sol.x[k];
      }
    }
    sol.x[p] = value;
  }
  return sol;
}

}  // namespace lmc

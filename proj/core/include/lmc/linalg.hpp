#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "lmc/rational.hpp"

namespace lmc {

// Dense matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix operator*(const RationalMatrix& o) const;
  bool is_identity() const;
  // Exact inverse by Gauss-Jordan; nothing when singular.
  std::optional<RationalMatrix> inverse() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using SparseVec = std::map<std::size_t, Rational>;

// Incrementally maintained row-echelon basis of a subspace of Q^N.
class EchelonBasis {
 public:
  // Adds v to the span; returns false when v was already in it.
  bool insert(SparseVec v);
  bool contains(SparseVec v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  SparseVec reduce(SparseVec v) const;
  std::map<std::size_t, SparseVec> rows_;  // keyed by pivot, pivot entry normalized to 1
};

// Solves sum_j a_ij x_j = b_i for x in Q^n. Each row holds its coefficients at
// indices < n and the right-hand side at index n. Free variables are set to 0.
struct AffineSolution {
  std::vector<Rational> x;
  std::size_t nullity = 0;
};
std::optional<AffineSolution> solve_affine(const std::vector<SparseVec>& rows, std::size_t n);

}  // namespace lmc

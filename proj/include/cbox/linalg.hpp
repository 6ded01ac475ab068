#pragma once

// Exact linear algebra over Q(s): row reduction, nullspaces and subspaces in
// canonical (reduced row-echelon) form.

#include <cstddef>
#include <string>
#include <vector>

#include "cbox/field.hpp"

namespace cbox {

using Row = std::vector<RatFunc>;
using Matrix = std::vector<Row>;

/// Reduced row-echelon form with ascending pivots; zero rows are dropped.
/// All rows must have `cols` entries.
Matrix rref(Matrix m, std::size_t cols);

/// Basis of {x : m x = 0}, one vector per free column, in canonical form.
Matrix nullspace(const Matrix& m, std::size_t cols);

/// Row-reduces on the first `lead_cols` columns only and returns the tails
/// (columns lead_cols..cols-1) of those rows whose lead part vanished. Their
/// span is the projection of {v in rowspace : v[0..lead_cols) = 0}.
Matrix eliminate_leading(Matrix m, std::size_t lead_cols, std::size_t cols);

/// A linear subspace of F^cols stored by its unique RREF basis, so equal
/// subspaces compare equal structurally.
class Subspace {
 public:
  explicit Subspace(std::size_t cols = 0) : cols_(cols) {}
  /// Spans the given generators (any number, any dependencies).
  Subspace(std::size_t cols, Matrix generators);

  static Subspace whole(std::size_t cols);

  std::size_t ambient_dim() const noexcept { return cols_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const Matrix& basis() const noexcept { return rows_; }
  std::vector<std::size_t> pivots() const;

  bool contains(const Row& v) const;

  /// New subspace whose coordinate k is old coordinate perm[k].
  Subspace permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t cols_;
  Matrix rows_;
};

std::string to_string(const Matrix& m);

}  // namespace cbox

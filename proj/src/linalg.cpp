#include "cbox/linalg.hpp"

#include <cstdint>
#include <optional>
#include <utility>

#include "cbox/errors.hpp"

namespace cbox {

namespace {

std::optional<std::size_t> pick_pivot(const Matrix& m, std::size_t from, std::size_t col) {
  std::optional<std::size_t> best;
  std::size_t best_weight = 0;
  for (std::size_t i = from; i < m.size(); ++i) {
    if (m[i][col].is_zero()) continue;
    const std::size_t w = m[i][col].weight();
    if (!best || w < best_weight) {
      best = i;
      best_weight = w;
    }
  }
  return best;
}

// row[target] -= factor * row[source], starting at column `from`.
void axpy(Row& target, const RatFunc& factor, const Row& source, std::size_t from) {
  for (std::size_t j = from; j < source.size(); ++j) {
    if (source[j].is_zero()) continue;
    target[j] -= factor * source[j];
  }
}

void check_shape(const Matrix& m, std::size_t cols) {
  for (const auto& row : m) {
    if (row.size() != cols) throw SizeMismatch("matrix row has wrong number of columns");
  }
}

}  // namespace

Matrix rref(Matrix m, std::size_t cols) {
  check_shape(m, cols);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    auto p = pick_pivot(m, rank, c);
    if (!p) continue;
    std::swap(m[rank], m[*p]);
    Row& pivot_row = m[rank];
    if (!pivot_row[c].is_one()) {
      const RatFunc inv = pivot_row[c].inv();
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (!pivot_row[j].is_zero()) pivot_row[j] *= inv;
      }
      pivot_row[c] = RatFunc(1);
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c].is_zero()) continue;
      const RatFunc f = m[i][c];
      axpy(m[i], f, pivot_row, c + 1);
      m[i][c] = RatFunc();
    }
    ++rank;
  }
  m.resize(rank);
  return m;
}

Matrix nullspace(const Matrix& m, std::size_t cols) {
  Matrix r = rref(m, cols);
  std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
  std::vector<std::size_t> pivot_cols;
  for (std::size_t k = 0; k < r.size(); ++k) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!r[k][c].is_zero()) {
        pivot_of_col[c] = k;
        pivot_cols.push_back(c);
        break;
      }
    }
  }
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_of_col[f] != SIZE_MAX) continue;
    Row v(cols);
    v[f] = RatFunc(1);
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (!r[k][f].is_zero()) v[pivot_cols[k]] = -r[k][f];
    }
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis), cols);
}

Matrix eliminate_leading(Matrix m, std::size_t lead_cols, std::size_t cols) {
  check_shape(m, cols);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < lead_cols && rank < m.size(); ++c) {
    auto p = pick_pivot(m, rank, c);
    if (!p) continue;
    std::swap(m[rank], m[*p]);
    const Row& pivot_row = m[rank];
    const RatFunc inv = pivot_row[c].inv();
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c].is_zero()) continue;
      const RatFunc f = m[i][c] * inv;
      axpy(m[i], f, pivot_row, c + 1);
      m[i][c] = RatFunc();
    }
    ++rank;
  }
  Matrix tails;
  tails.reserve(m.size() - rank);
  for (std::size_t i = rank; i < m.size(); ++i) {
    tails.emplace_back(m[i].begin() + static_cast<long>(lead_cols), m[i].end());
  }
  return tails;
}

Subspace::Subspace(std::size_t cols, Matrix generators)
    : cols_(cols), rows_(rref(std::move(generators), cols)) {}

Subspace Subspace::whole(std::size_t cols) {
  Matrix id(cols, Row(cols));
  for (std::size_t k = 0; k < cols; ++k) id[k][k] = RatFunc(1);
  return Subspace(cols, std::move(id));
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!row[c].is_zero()) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

bool Subspace::contains(const Row& v) const {
  if (v.size() != cols_) throw SizeMismatch("vector does not live in this ambient space");
  Row w = v;
  const auto piv = pivots();
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (w[piv[k]].is_zero()) continue;
    const RatFunc f = w[piv[k]];
    axpy(w, f, rows_[k], 0);
  }
  for (const auto& x : w) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Subspace Subspace::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != cols_) throw SizeMismatch("permutation size differs from ambient dimension");
  Matrix m;
  m.reserve(rows_.size());
  for (const auto& row : rows_) {
    Row r(cols_);
    for (std::size_t k = 0; k < cols_; ++k) r[k] = row[perm[k]];
    m.push_back(std::move(r));
  }
  return Subspace(cols_, std::move(m));
}

std::string to_string(const Matrix& m) {
  std::string out;
  for (const auto& row : m) {
    out += "[";
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ", ";
      out += row[j].to_string();
    }
    out += "]\n";
  }
  return out;
}

}  // namespace cbox

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mincut {

/*
 * A matrix whose entries are computed on demand. Every call to the
 * evaluation function is counted; kernels memoise entries within a call so
 * the counter reflects distinct inspections.
 */
template <class Value>
class ImplicitMatrix {
 public:
  using Eval = std::function<Value(std::size_t, std::size_t)>;

  ImplicitMatrix(std::size_t rows, std::size_t cols, Eval eval)
      : rows_(rows), cols_(cols), eval_(std::move(eval)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Value operator()(std::size_t i, std::size_t j) const {
    ++evaluations_;
    return eval_(i, j);
  }

  std::uint64_t evaluations() const { return evaluations_; }
  void reset_evaluations() const { evaluations_ = 0; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  Eval eval_;
  mutable std::uint64_t evaluations_ = 0;
};

template <class Value>
struct RowMinimum {
  std::size_t col;
  Value value;
};

template <class Value>
struct MatrixMinimum {
  std::size_t row;
  std::size_t col;
  Value value;
};

namespace detail {

template <class Value>
class MemoMatrix {
 public:
  MemoMatrix(const ImplicitMatrix<Value>& m, bool reverse_cols) : m_(m), reverse_(reverse_cols) {}

  const Value& operator()(std::size_t i, std::size_t j) {
    const std::size_t col = reverse_ ? m_.cols() - 1 - j : j;
    const std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | col;
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(key, m_(i, col)).first;
    return it->second;
  }

  std::size_t rows() const { return m_.rows(); }
  std::size_t cols() const { return m_.cols(); }

 private:
  const ImplicitMatrix<Value>& m_;
  bool reverse_;
  std::unordered_map<std::uint64_t, Value> memo_;
};

// SMAWK on the row subset `rows` and column subset `cols` (both increasing).
// Writes the leftmost minimum column of every listed row into argmin.
template <class Value, class Matrix>
void smawk(Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
           std::vector<std::size_t>& argmin) {
  if (rows.empty()) return;

  // REDUCE: keep at most |rows| columns that can still hold a leftmost minimum.
  std::vector<std::size_t> kept;
  kept.reserve(std::min(rows.size(), cols.size()));
  for (std::size_t c : cols) {
    while (!kept.empty()) {
      const std::size_t r = rows[kept.size() - 1];
      if (m(r, kept.back()) <= m(r, c)) break;
      kept.pop_back();
    }
    if (kept.size() < rows.size()) kept.push_back(c);
  }

  std::vector<std::size_t> odd;
  odd.reserve(rows.size() / 2);
  for (std::size_t i = 1; i < rows.size(); i += 2) odd.push_back(rows[i]);
  smawk<Value>(m, odd, kept, argmin);

  // Interpolate the even rows between the minima of their odd neighbours.
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows.size(); i += 2) {
    const std::size_t r = rows[i];
    const std::size_t stop = i + 1 < rows.size() ? argmin[rows[i + 1]] : kept.back();
    std::size_t best = kept[k];
    Value best_value = m(r, best);
    while (kept[k] != stop && k + 1 < kept.size()) {
      ++k;
      const Value& v = m(r, kept[k]);
      if (v < best_value) {
        best_value = v;
        best = kept[k];
      }
    }
    argmin[r] = best;
  }
}

}  // namespace detail

/*
 * Leftmost row minima of a totally monotone matrix (leftmost minimum column
 * nondecreasing with the row), e.g. any matrix with
 * M[i][j] + M[i+1][j+1] <= M[i][j+1] + M[i+1][j]. Inspects O(rows + cols)
 * distinct entries.
 */
template <class Value>
std::vector<RowMinimum<Value>> smawk_row_minima(const ImplicitMatrix<Value>& m) {
  std::vector<RowMinimum<Value>> out;
  if (m.rows() == 0 || m.cols() == 0) return out;
  detail::MemoMatrix<Value> memo(m, false);
  std::vector<std::size_t> rows(m.rows());
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  std::vector<std::size_t> argmin(m.rows());
  detail::smawk<Value>(memo, rows, cols, argmin);
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back({argmin[i], memo(i, argmin[i])});
  return out;
}

/*
 * Global minimum of a matrix satisfying
 *   M[i][j] - M[i][j+1] >= M[i+1][j] - M[i+1][j+1]   for all i, j,
 * i.e. the column-reversed matrix is Monge. Ties go to the smallest row, then
 * the smallest column. Returns nullopt for an empty matrix.
 */
template <class Value>
std::optional<MatrixMinimum<Value>> monge_global_min(const ImplicitMatrix<Value>& m) {
  if (m.rows() == 0 || m.cols() == 0) return std::nullopt;
  detail::MemoMatrix<Value> reversed(m, true);
  std::vector<std::size_t> rows(m.rows());
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  std::vector<std::size_t> argmin(m.rows());
  if (m.rows() == 1 || m.cols() == 1) {
    // Degenerate shapes: a direct scan is already linear.
    std::optional<MatrixMinimum<Value>> best;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Value& v = reversed(i, m.cols() - 1 - j);
        if (!best || v < best->value) best = MatrixMinimum<Value>{i, j, v};
      }
    }
    return best;
  }
  detail::smawk<Value>(reversed, rows, cols, argmin);

  std::size_t best_row = 0;
  Value best = reversed(0, argmin[0]);
  for (std::size_t i = 1; i < m.rows(); ++i) {
    const Value& v = reversed(i, argmin[i]);
    if (v < best) {
      best = v;
      best_row = i;
    }
  }
  // SMAWK on the reversed matrix yields the largest original column among
  // ties; rescan the winning row for the smallest.
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (reversed(best_row, m.cols() - 1 - j) == best) return MatrixMinimum<Value>{best_row, j, best};
  }
  return MatrixMinimum<Value>{best_row, m.cols() - 1 - argmin[best_row], best};
}

/*
 * Minimum over the strict upper triangle (i < j) of a square symmetric
 * matrix that satisfies the inequality of monge_global_min on every 2x2 minor
 * lying entirely off the diagonal. The triangle over [lo, hi) is split at
 * mid into the full rectangle [lo, mid) x [mid, hi), which is Monge and goes
 * to monge_global_min, and two half-size triangles. O(l log l) inspections.
 *
 * With exclude_diagonal = false the diagonal entries are scanned as well.
 * Returns nullopt when there is no admissible entry (fewer than 2 rows with
 * the diagonal excluded).
 */
template <class Value>
std::optional<MatrixMinimum<Value>> staircase_monge_min(const ImplicitMatrix<Value>& m,
                                                        bool exclude_diagonal = true) {
  const std::size_t l = m.rows();
  std::optional<MatrixMinimum<Value>> best;
  auto offer = [&best](const MatrixMinimum<Value>& c) {
    if (!best || c.value < best->value ||
        (c.value == best->value && std::pair(c.row, c.col) < std::pair(best->row, best->col))) {
      best = c;
    }
  };
  if (!exclude_diagonal) {
    for (std::size_t i = 0; i < l; ++i) offer({i, i, m(i, i)});
  }

  std::vector<std::pair<std::size_t, std::size_t>> todo;
  if (l >= 2) todo.emplace_back(0, l);
  while (!todo.empty()) {
    const auto [lo, hi] = todo.back();
    todo.pop_back();
    if (hi - lo < 2) continue;
    const std::size_t mid = lo + (hi - lo) / 2;
    ImplicitMatrix<Value> block(mid - lo, hi - mid,
                                [&m, lo, mid](std::size_t i, std::size_t j) { return m(lo + i, mid + j); });
    if (auto found = monge_global_min(block)) {
      offer({lo + found->row, mid + found->col, found->value});
    }
    todo.emplace_back(lo, mid);
    todo.emplace_back(mid, hi);
  }
  return best;
}

}  // namespace mincut

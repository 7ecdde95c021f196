#include <doctest.h>

#include <random>

#include "mincut/monge.hpp"

using namespace mincut;

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

// Random Monge matrix: sum of a row term, a column term, and a nonnegative
// combination of Monge atoms -[i >= a][j >= b].
Matrix random_monge(std::size_t rows, std::size_t cols, std::uint64_t seed, int spread) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> val(-spread, spread);
  Matrix m(rows, std::vector<std::int64_t>(cols, 0));
  std::vector<std::int64_t> r(rows);
  std::vector<std::int64_t> c(cols);
  for (auto& x : r) x = val(rng);
  for (auto& x : c) x = val(rng);
  const int atoms = static_cast<int>(rows + cols);
  std::uniform_int_distribution<std::size_t> ri(0, rows - 1);
  std::uniform_int_distribution<std::size_t> ci(0, cols - 1);
  std::uniform_int_distribution<int> w(0, 3);
  for (int k = 0; k < atoms; ++k) {
    const std::size_t a = ri(rng);
    const std::size_t b = ci(rng);
    const int weight = w(rng);
    for (std::size_t i = a; i < rows; ++i) {
      for (std::size_t j = b; j < cols; ++j) m[i][j] -= weight;
    }
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] += r[i] + c[j];
  }
  return m;
}

bool is_monge(const Matrix& m) {
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    for (std::size_t j = 0; j + 1 < m[i].size(); ++j) {
      if (m[i][j] + m[i + 1][j + 1] > m[i][j + 1] + m[i + 1][j]) return false;
    }
  }
  return true;
}

Matrix reverse_columns(Matrix m) {
  for (auto& row : m) std::reverse(row.begin(), row.end());
  return m;
}

ImplicitMatrix<std::int64_t> wrap(const Matrix& m) {
  return ImplicitMatrix<std::int64_t>(m.size(), m.empty() ? 0 : m[0].size(),
                                      [&m](std::size_t i, std::size_t j) { return m[i][j]; });
}

}  // namespace

TEST_CASE("generated matrices are Monge") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) CHECK(is_monge(random_monge(7, 9, seed, 5)));
}

TEST_CASE("SMAWK row minima equal a naive scan, leftmost on ties") {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const std::size_t rows = 1 + seed % 23;
    const std::size_t cols = 1 + (seed * 7) % 31;
    const Matrix m = random_monge(rows, cols, seed, seed % 3 == 0 ? 0 : 4);
    const auto mat = wrap(m);
    const auto minima = smawk_row_minima(mat);
    REQUIRE(minima.size() == rows);
    for (std::size_t i = 0; i < rows; ++i) {
      const auto it = std::min_element(m[i].begin(), m[i].end());
      CHECK(minima[i].col == static_cast<std::size_t>(it - m[i].begin()));
      CHECK(minima[i].value == *it);
    }
    CHECK(mat.evaluations() <= 8 * (rows + cols));
  }
}

TEST_CASE("global minimum of inverse-Monge matrices") {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const std::size_t rows = 1 + seed % 19;
    const std::size_t cols = 1 + (seed * 5) % 27;
    const Matrix m = reverse_columns(random_monge(rows, cols, seed, seed % 4 == 0 ? 0 : 6));
    const auto mat = wrap(m);
    const auto found = monge_global_min(mat);
    REQUIRE(found.has_value());
    std::size_t br = 0;
    std::size_t bc = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (m[i][j] < m[br][bc]) {
          br = i;
          bc = j;
        }
      }
    }
    CHECK(found->value == m[br][bc]);
    CHECK(found->row == br);
    CHECK(found->col == bc);
    CHECK(mat.evaluations() <= 8 * (rows + cols));
  }
}

TEST_CASE("empty matrices have no minimum") {
  const Matrix none;
  CHECK_FALSE(monge_global_min(wrap(none)).has_value());
  CHECK(smawk_row_minima(wrap(none)).empty());
}

TEST_CASE("staircase minimum over the strict upper triangle") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t l = 1 + seed % 40;
    // Symmetric, inverse Monge on every minor off the diagonal.
    Matrix base = reverse_columns(random_monge(l, l, seed, 5));
    Matrix m(l, std::vector<std::int64_t>(l, 0));
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = 0; j < l; ++j) m[i][j] = i < j ? base[i][j] : base[j][i];
      m[i][i] = 1000;  // garbage that must be ignored
    }
    const auto mat = wrap(m);
    const auto found = staircase_monge_min(mat, true);
    if (l < 2) {
      CHECK_FALSE(found.has_value());
      continue;
    }
    REQUIRE(found.has_value());
    std::int64_t best = INT64_MAX;
    std::pair<std::size_t, std::size_t> at{0, 0};
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = i + 1; j < l; ++j) {
        if (m[i][j] < best) {
          best = m[i][j];
          at = {i, j};
        }
      }
    }
    CHECK(found->value == best);
    CHECK(std::pair(found->row, found->col) == at);
    CHECK(found->row < found->col);
  }
}

TEST_CASE("staircase with the diagonal included") {
  const Matrix m{{5, 9, 9}, {9, 1, 9}, {9, 9, 7}};
  const auto found = staircase_monge_min(wrap(m), false);
  REQUIRE(found.has_value());
  CHECK(found->value == 1);
  CHECK(found->row == 1);
  CHECK(found->col == 1);
}

TEST_CASE("evaluation counter") {
  const Matrix m{{1, 2}, {3, 4}};
  const auto mat = wrap(m);
  CHECK(mat(1, 0) == 3);
  CHECK(mat.evaluations() == 1);
  mat.reset_evaluations();
  CHECK(mat.evaluations() == 0);
}

#include "genericlab/oracle/vertex_lp.hpp"

#include "genericlab/oracle/brute_force.hpp"

namespace genericlab::oracle {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Row-reduces the augmented matrix in place; returns its rank, or nullopt if inconsistent.
std::optional<std::size_t> reduce(Matrix& m, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    const Rational scale = m[rank][c];
    for (auto& v : m[rank]) v /= scale;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < m.size(); ++r) {
    if (sgn(m[r].back()) != 0) return std::nullopt;
  }
  m.resize(rank);
  return rank;
}

// Solves the square system given by `columns` of the reduced rows; nullopt if singular.
std::optional<std::vector<Rational>> solve_basis(const Matrix& rows, const std::vector<std::size_t>& columns) {
  const std::size_t r = columns.size();
  Matrix m(r, std::vector<Rational>(r + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = rows[i][columns[j]];
    m[i][r] = rows[i].back();
  }
  auto rank = reduce(m, r);
  if (!rank || *rank < r) return std::nullopt;
  std::vector<Rational> x(r);
  for (std::size_t i = 0; i < r; ++i) x[i] = m[i][r];
  return x;
}

}  // namespace

std::optional<Rational> vertex_lp_minimum(const LinearProgram& lp, std::size_t cap) {
  const std::size_t n = lp.variable_count();
  if (n > cap) {
    throw CapExceeded("oracle::vertex_lp: " + std::to_string(n) + " variables exceed cap " + std::to_string(cap));
  }
  Matrix m;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    auto row = lp.rows[i];
    row.push_back(lp.rhs[i]);
    m.push_back(std::move(row));
  }
  const auto rank = reduce(m, n);
  if (!rank) return std::nullopt;
  if (*rank == 0) {
    // every x ≥ 0 is feasible; bounded below means the minimum sits at 0
    return Rational(0);
  }
  std::optional<Rational> best;
  std::vector<std::size_t> columns(*rank);
  for (std::size_t i = 0; i < *rank; ++i) columns[i] = i;
  for (;;) {
    if (auto x = solve_basis(m, columns)) {
      bool feasible = true;
      Rational value = 0;
      for (std::size_t i = 0; i < columns.size(); ++i) {
        if (sgn((*x)[i]) < 0) feasible = false;
        value += lp.cost[columns[i]] * (*x)[i];
      }
      if (feasible && (!best || value < *best)) best = value;
    }
    std::size_t i = *rank;
    while (i > 0 && columns[i - 1] == n - *rank + i - 1) --i;
    if (i == 0) break;
    ++columns[i - 1];
    for (std::size_t j = i; j < *rank; ++j) columns[j] = columns[j - 1] + 1;
  }
  return best;
}

}  // namespace genericlab::oracle

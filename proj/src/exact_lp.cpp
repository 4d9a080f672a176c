#include "genericlab/exact_lp.hpp"

#include <optional>
#include <stdexcept>

namespace genericlab {

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& lp) : n_(lp.variable_count()) {
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
      bool nonzero = false;
      for (const auto& a : lp.rows[i]) nonzero = nonzero || sgn(a) != 0;
      if (!nonzero) {
        if (sgn(lp.rhs[i]) != 0) trivially_infeasible_ = true;
        continue;
      }
      kept_.push_back(i);
    }
    m_ = kept_.size();
    width_ = n_ + m_ + 1;
    rows_.assign(m_, std::vector<Rational>(width_));
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      const auto& src = lp.rows[kept_[r]];
      const bool flip = sgn(lp.rhs[kept_[r]]) < 0;
      for (std::size_t j = 0; j < n_; ++j) rows_[r][j] = flip ? Rational(-src[j]) : src[j];
      rows_[r][n_ + r] = 1;
      rows_[r][width_ - 1] = flip ? Rational(-lp.rhs[kept_[r]]) : lp.rhs[kept_[r]];
      basis_[r] = n_ + r;
    }
  }

  bool trivially_infeasible() const { return trivially_infeasible_; }

  /// Minimises sum of artificials; returns the optimum.
  Rational phase_one() {
    reduced_.assign(width_ - 1, Rational(0));
    value_ = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t j = 0; j < n_; ++j) reduced_[j] -= rows_[r][j];
      value_ += rows_[r][width_ - 1];
    }
    run(width_ - 1);
    return value_;
  }

  void drop_artificials() {
    for (std::size_t r = 0; r < m_;) {
      if (basis_[r] < n_) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_ && !col; ++j) {
        if (sgn(rows_[r][j]) != 0) col = j;
      }
      if (col) {
        pivot(r, *col);
        ++r;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        --m_;
      }
    }
  }

  bool phase_two(const std::vector<Rational>& cost) {
    reduced_.assign(width_ - 1, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) reduced_[j] = cost[j];
    value_ = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) reduced_[j] -= cb * rows_[r][j];
      value_ += cb * rows_[r][width_ - 1];
    }
    return run(n_);
  }

  Rational value() const { return value_; }
  std::size_t pivots() const { return pivots_; }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_);
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) x[basis_[r]] = rows_[r][width_ - 1];
    }
    return x;
  }

 private:
  // Bland's rule over the first `allowed` columns. Returns false if unbounded.
  bool run(std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(reduced_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      const std::size_t q = *entering;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (sgn(rows_[r][q]) <= 0) continue;
        Rational ratio = rows_[r][width_ - 1] / rows_[r][q];
        if (!leaving || ratio < best || (ratio == best && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, q);
    }
  }

  void pivot(std::size_t p, std::size_t q) {
    ++pivots_;
    auto& prow = rows_[p];
    const Rational scale = prow[q];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < width_; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] /= scale;
        support.push_back(j);
      }
    }
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == p || sgn(rows_[r][q]) == 0) continue;
      const Rational f = rows_[r][q];
      for (auto j : support) rows_[r][j] -= f * prow[j];
    }
    if (sgn(reduced_[q]) != 0) {
      const Rational f = reduced_[q];
      for (auto j : support) {
        if (j + 1 < width_) reduced_[j] -= f * prow[j];
      }
      value_ += f * prow[width_ - 1];
    }
    basis_[p] = q;
  }

  std::size_t n_;
  std::size_t m_ = 0;
  std::size_t width_ = 0;
  bool trivially_infeasible_ = false;
  std::vector<std::size_t> kept_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  Rational value_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  if (lp.rows.size() != lp.rhs.size()) throw std::invalid_argument("solve_lp: rows/rhs size mismatch");
  for (const auto& row : lp.rows) {
    if (row.size() != lp.variable_count()) throw std::invalid_argument("solve_lp: row width mismatch");
  }
  LpSolution out;
  Tableau t(lp);
  if (t.trivially_infeasible()) return out;
  if (sgn(t.phase_one()) != 0) {
    out.pivots = t.pivots();
    return out;
  }
  t.drop_artificials();
  const bool bounded = t.phase_two(lp.cost);
  out.pivots = t.pivots();
  if (!bounded) {
    out.status = LpStatus::unbounded;
    return out;
  }
  out.status = LpStatus::optimal;
  out.objective = t.value();
  out.x = t.solution();
  return out;
}

}  // namespace genericlab

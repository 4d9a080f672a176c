#include "genericlab/type_space.hpp"

namespace genericlab {

namespace {

std::size_t pow_size(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

void check_levels(const std::vector<std::vector<Rational>>& levels, std::size_t alphabet, const char* what) {
  if (levels.empty()) throw std::invalid_argument(std::string(what) + ": needs at least the root level");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k].size() != pow_size(alphabet, k)) {
      throw std::invalid_argument(std::string(what) + ": level " + std::to_string(k) + " has wrong width");
    }
  }
}

std::vector<std::vector<Rational>> zero_levels(std::size_t alphabet, std::size_t depth) {
  std::vector<std::vector<Rational>> levels(depth + 1);
  for (std::size_t k = 0; k <= depth; ++k) levels[k].assign(pow_size(alphabet, k), Rational(0));
  return levels;
}

bool in_unit_interval(const Rational& v) { return sgn(v) >= 0 && v <= 1; }

}  // namespace

TypeTree::TypeTree(std::vector<std::vector<Rational>> levels) : levels_(std::move(levels)) {
  check_levels(levels_, 2, "TypeTree");
}

const Rational& TypeTree::value(std::string_view bits) const {
  std::size_t idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("TypeTree::value: not a binary string");
    idx = 2 * idx + static_cast<std::size_t>(c - '0');
  }
  return value(bits.size(), idx);
}

TypeTree TypeTree::truncate(std::size_t depth) const {
  if (depth > this->depth()) throw std::invalid_argument("TypeTree::truncate: depth exceeds tree depth");
  return TypeTree(std::vector<std::vector<Rational>>(levels_.begin(),
                                                     levels_.begin() + static_cast<std::ptrdiff_t>(depth + 1)));
}

bool validate_si(const TypeTree& t) {
  if (t.value(0, 0) != 1) return false;
  for (std::size_t k = 0; k <= t.depth(); ++k) {
    for (const auto& v : t.level(k)) {
      if (!in_unit_interval(v)) return false;
    }
  }
  for (std::size_t k = 0; k < t.depth(); ++k) {
    const auto here = t.level(k);
    const auto next = t.level(k + 1);
    const std::size_t width = here.size();
    for (std::size_t s = 0; s < width; ++s) {
      if (next[2 * s] + next[2 * s + 1] != here[s]) return false;
      if (next[s] + next[s + width] != here[s]) return false;
    }
  }
  return true;
}

TypeTree type_of(const Event& a, const AlgebraAutomorphism& t, std::size_t depth) {
  require_same_algebra(a.algebra(), t.algebra(), "type_of");
  const auto& algebra = a.algebra();
  const auto inside = a.mask();
  const auto back = inverse(t);
  auto levels = zero_levels(2, depth);
  for (std::size_t x = 0; x < algebra.atom_count(); ++x) {
    const Rational& m = algebra.atom_measure(x);
    levels[0][0] += m;
    std::size_t idx = 0;
    std::size_t y = x;  // τ^{-i} x
    for (std::size_t i = 0; i < depth; ++i) {
      idx = 2 * idx + (inside[y] ? 0 : 1);
      levels[i + 1][idx] += m;
      y = back(y);
    }
  }
  return TypeTree(std::move(levels));
}

Realization realize(const TypeTree& t) {
  if (!validate_si(t)) throw SiViolation("realize: tree is not shift invariant");
  const std::size_t d = t.depth();
  if (d == 0) {
    FiniteAlgebra algebra = FiniteAlgebra::uniform(1);
    return {algebra, {Event::full(algebra)}};
  }
  const auto top = t.level(d);
  const auto mid = t.level(d - 1);
  const std::size_t width = top.size();  // 2^d
  std::vector<std::size_t> strings;
  std::vector<Rational> masses;
  for (std::size_t s = 0; s < 2 * width; ++s) {
    const std::size_t head = s >> 1;          // s_0 … s_{d-1}
    const std::size_t tail = s & (width - 1);  // s_1 … s_d
    const std::size_t inner = head & (width / 2 - 1);
    const Rational& denom = mid[inner];
    if (sgn(denom) == 0) continue;
    Rational m = top[head] * top[tail] / denom;
    if (sgn(m) == 0) continue;
    strings.push_back(s);
    masses.push_back(std::move(m));
  }
  FiniteAlgebra algebra(std::move(masses));
  std::vector<Event> events;
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<std::size_t> atoms;
    for (std::size_t i = 0; i < strings.size(); ++i) {
      if (((strings[i] >> (d - k)) & 1U) == 0) atoms.push_back(i);
    }
    events.emplace_back(algebra, std::move(atoms));
  }
  return {std::move(algebra), std::move(events)};
}

TypeTree window_tree(std::span<const Event> events, std::size_t offset, std::size_t depth) {
  if (offset + depth > events.size()) throw std::invalid_argument("window_tree: window exceeds event list");
  if (events.empty()) throw std::invalid_argument("window_tree: no events");
  const auto& algebra = events.front().algebra();
  std::vector<std::vector<bool>> masks;
  for (std::size_t i = 0; i < depth; ++i) {
    require_same_algebra(events[offset + i].algebra(), algebra, "window_tree");
    masks.push_back(events[offset + i].mask());
  }
  auto levels = zero_levels(2, depth);
  for (std::size_t x = 0; x < algebra.atom_count(); ++x) {
    const Rational& m = algebra.atom_measure(x);
    levels[0][0] += m;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < depth; ++i) {
      idx = 2 * idx + (masks[i][x] ? 0 : 1);
      levels[i + 1][idx] += m;
    }
  }
  return TypeTree(std::move(levels));
}

Rational autodist_profile(const TypeTree& t, std::size_t n) {
  if (n == 0) return Rational(0);
  if (n + 1 > t.depth()) {
    throw std::invalid_argument("autodist_profile: lag " + std::to_string(n) + " needs depth " +
                                std::to_string(n + 1));
  }
  const auto level = t.level(n + 1);
  Rational total = 0;
  for (std::size_t s = 0; s < level.size(); ++s) {
    const std::size_t first = s >> n;
    const std::size_t last = s & 1U;
    if (first != last) total += level[s];
  }
  return total;
}

PairTree::PairTree(std::vector<std::vector<Rational>> levels) : levels_(std::move(levels)) {
  check_levels(levels_, 4, "PairTree");
}

PairTree PairTree::from_top_level(std::size_t depth, std::vector<Rational> top) {
  if (top.size() != pow_size(4, depth)) throw std::invalid_argument("PairTree: top level has wrong width");
  std::vector<std::vector<Rational>> levels(depth + 1);
  levels[depth] = std::move(top);
  for (std::size_t k = depth; k-- > 0;) {
    levels[k].assign(pow_size(4, k), Rational(0));
    for (std::size_t s = 0; s < levels[k + 1].size(); ++s) levels[k][s / 4] += levels[k + 1][s];
  }
  return PairTree(std::move(levels));
}

TypeTree PairTree::marginal(int coordinate) const {
  if (coordinate != 0 && coordinate != 1) throw std::invalid_argument("PairTree::marginal: coordinate is 0 or 1");
  auto levels = zero_levels(2, depth());
  for (std::size_t k = 0; k <= depth(); ++k) {
    for (std::size_t s = 0; s < levels_[k].size(); ++s) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t letter = (s >> (2 * (k - 1 - i))) & 3U;
        const std::size_t bit = coordinate == 0 ? (letter >> 1) : (letter & 1U);
        idx = 2 * idx + bit;
      }
      levels[k][idx] += levels_[k][s];
    }
  }
  return TypeTree(std::move(levels));
}

Rational PairTree::root_disagreement() const {
  if (depth() == 0) throw std::invalid_argument("PairTree::root_disagreement: depth 0 has no root letter");
  return levels_[1][1] + levels_[1][2];
}

bool validate_pair_si(const PairTree& t) {
  if (t.level(0)[0] != 1) return false;
  for (std::size_t k = 0; k <= t.depth(); ++k) {
    for (const auto& v : t.level(k)) {
      if (!in_unit_interval(v)) return false;
    }
  }
  for (std::size_t k = 0; k < t.depth(); ++k) {
    const auto here = t.level(k);
    const auto next = t.level(k + 1);
    const std::size_t width = here.size();
    for (std::size_t s = 0; s < width; ++s) {
      Rational tail = 0;
      Rational head = 0;
      for (std::size_t x = 0; x < 4; ++x) {
        tail += next[4 * s + x];
        head += next[s + x * width];
      }
      if (tail != here[s] || head != here[s]) return false;
    }
  }
  return validate_si(t.marginal(0)) && validate_si(t.marginal(1));
}

PairTree pair_type_of(const Event& a, const Event& b, const AlgebraAutomorphism& t, std::size_t depth) {
  require_same_algebra(a.algebra(), t.algebra(), "pair_type_of");
  require_same_algebra(b.algebra(), t.algebra(), "pair_type_of");
  const auto& algebra = a.algebra();
  const auto in_a = a.mask();
  const auto in_b = b.mask();
  const auto back = inverse(t);
  std::vector<Rational> top(pow_size(4, depth), Rational(0));
  for (std::size_t x = 0; x < algebra.atom_count(); ++x) {
    std::size_t idx = 0;
    std::size_t y = x;
    for (std::size_t i = 0; i < depth; ++i) {
      const std::size_t letter = 2 * (in_a[y] ? 0U : 1U) + (in_b[y] ? 0U : 1U);
      idx = 4 * idx + letter;
      y = back(y);
    }
    top[idx] += algebra.atom_measure(x);
  }
  return PairTree::from_top_level(depth, std::move(top));
}

LinearProgram coupling_program(const TypeTree& p, const TypeTree& q, std::size_t m) {
  if (m == 0) throw std::invalid_argument("coupling_program: depth must be at least 1");
  if (m > p.depth() || m > q.depth()) throw std::invalid_argument("coupling_program: depth exceeds tree depth");
  const std::size_t vars = pow_size(4, m);
  const std::size_t inner = vars / 4;  // 4^{m-1}
  LinearProgram lp;
  lp.cost.assign(vars, Rational(0));
  for (std::size_t s = 0; s < vars; ++s) {
    const std::size_t first = s / inner;
    if (first == 1 || first == 2) lp.cost[s] = 1;
  }
  // stationarity at the top level: Σ_x w(σ'x) = Σ_x w(xσ')
  for (std::size_t s = 0; s < inner; ++s) {
    std::vector<Rational> row(vars, Rational(0));
    for (std::size_t x = 0; x < 4; ++x) {
      row[4 * s + x] += 1;
      row[x * inner + s] -= 1;
    }
    lp.rows.push_back(std::move(row));
    lp.rhs.emplace_back(0);
  }
  const std::size_t binary = pow_size(2, m);
  for (int coordinate = 0; coordinate < 2; ++coordinate) {
    const auto target = (coordinate == 0 ? p : q).level(m);
    std::vector<std::vector<Rational>> rows(binary, std::vector<Rational>(vars, Rational(0)));
    for (std::size_t s = 0; s < vars; ++s) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t letter = (s >> (2 * (m - 1 - i))) & 3U;
        idx = 2 * idx + (coordinate == 0 ? (letter >> 1) : (letter & 1U));
      }
      rows[idx][s] = 1;
    }
    for (std::size_t u = 0; u < binary; ++u) {
      lp.rows.push_back(std::move(rows[u]));
      lp.rhs.push_back(target[u]);
    }
  }
  return lp;
}

CouplingBound coupling_lower_bound(const TypeTree& p, const TypeTree& q, std::size_t m, std::size_t depth_cap) {
  if (m == 0) throw std::invalid_argument("coupling_lower_bound: depth must be at least 1");
  if (m > depth_cap) {
    throw std::invalid_argument("coupling_lower_bound: depth " + std::to_string(m) + " exceeds cap " +
                                std::to_string(depth_cap));
  }
  if (m > p.depth() || m > q.depth()) throw std::invalid_argument("coupling_lower_bound: depth exceeds tree depth");
  if (!validate_si(p.truncate(m)) || !validate_si(q.truncate(m))) {
    throw SiViolation("coupling_lower_bound: marginal is not shift invariant");
  }
  LpSolution sol = solve_lp(coupling_program(p, q, m));
  if (sol.status != LpStatus::optimal) {
    throw std::logic_error("coupling_lower_bound: coupling program unexpectedly infeasible");
  }
  return {sol.objective, PairTree::from_top_level(m, std::move(sol.x)), sol.pivots};
}

LagProfile tree_profile(const TypeTree& t) {
  return [t](std::size_t n) { return autodist_profile(t, n); };
}

LagSeparation best_lag_separation(const LagProfile& p, const LagProfile& q, std::size_t n_max) {
  LagSeparation best{Rational(0), 0};
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational gap = abs(q(n) - p(n)) / 2;
    if (gap > best.bound) best = {std::move(gap), n};
  }
  return best;
}

Rational separation_bound(const TypeTree& p, const TypeTree& q, std::size_t n_max) {
  if (p.depth() < n_max + 1 || q.depth() < n_max + 1) {
    throw std::invalid_argument("separation_bound: trees need depth ≥ n_max + 1");
  }
  return best_lag_separation(tree_profile(p), tree_profile(q), n_max).bound;
}

TypeOverAlgebra::TypeOverAlgebra(FiniteAlgebra base, std::vector<TypeTree> per_atom)
    : base_(std::move(base)), per_atom_(std::move(per_atom)) {
  if (per_atom_.size() != base_.atom_count()) {
    throw std::invalid_argument("TypeOverAlgebra: need one tree per atom of the base algebra");
  }
  for (const auto& tree : per_atom_) {
    if (tree.depth() != per_atom_.front().depth()) throw std::invalid_argument("TypeOverAlgebra: mixed depths");
    if (!validate_si(tree)) throw SiViolation("TypeOverAlgebra: per-atom tree is not shift invariant");
  }
}

TypeTree TypeOverAlgebra::average() const {
  auto levels = zero_levels(2, depth());
  for (std::size_t i = 0; i < per_atom_.size(); ++i) {
    const Rational& w = base_.atom_measure(i);
    for (std::size_t k = 0; k <= depth(); ++k) {
      const auto lv = per_atom_[i].level(k);
      for (std::size_t s = 0; s < lv.size(); ++s) levels[k][s] += w * lv[s];
    }
  }
  return TypeTree(std::move(levels));
}

TypeOverAlgebra type_over_algebra(const Event& b, const AlgebraAutomorphism& t, std::span<const Event> blocks,
                                  std::size_t depth) {
  require_same_algebra(b.algebra(), t.algebra(), "type_over_algebra");
  const auto& algebra = b.algebra();
  if (blocks.empty()) throw std::invalid_argument("type_over_algebra: no blocks");
  std::vector<bool> covered(algebra.atom_count(), false);
  std::vector<Rational> block_measures;
  for (const auto& block : blocks) {
    require_same_algebra(block.algebra(), algebra, "type_over_algebra (block)");
    if (block.is_empty()) throw std::invalid_argument("type_over_algebra: empty block");
    if (apply(t, block) != block) throw std::invalid_argument("type_over_algebra: block is not invariant");
    for (auto x : block.atoms()) {
      if (covered[x]) throw std::invalid_argument("type_over_algebra: blocks overlap");
      covered[x] = true;
    }
    block_measures.push_back(measure(block));
  }
  for (bool c : covered) {
    if (!c) throw std::invalid_argument("type_over_algebra: blocks do not cover the algebra");
  }
  const auto inside = b.mask();
  const auto back = inverse(t);
  std::vector<TypeTree> trees;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto levels = zero_levels(2, depth);
    for (auto x : blocks[i].atoms()) {
      const Rational m = algebra.atom_measure(x) / block_measures[i];
      levels[0][0] += m;
      std::size_t idx = 0;
      std::size_t y = x;
      for (std::size_t k = 0; k < depth; ++k) {
        idx = 2 * idx + (inside[y] ? 0 : 1);
        levels[k + 1][idx] += m;
        y = back(y);
      }
    }
    trees.emplace_back(std::move(levels));
  }
  return TypeOverAlgebra(FiniteAlgebra(std::move(block_measures)), std::move(trees));
}

Rational integral_lower_bound(const TypeOverAlgebra& p, const TypeOverAlgebra& q, const TreeBounder& bound) {
  require_same_algebra(p.base(), q.base(), "integral_lower_bound");
  if (p.depth() != q.depth()) throw std::invalid_argument("integral_lower_bound: depth mismatch");
  return integral_lower_bound(p.base(), p.per_atom(), q.per_atom(), bound);
}

}  // namespace genericlab

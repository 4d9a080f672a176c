#include "genericlab/rotation_types.hpp"

#include <algorithm>
#include <charconv>

namespace genericlab {

RotationParam::RotationParam(Rational value, Rational precision, std::string label)
    : value_(std::move(value)), precision_(std::move(precision)), label_(std::move(label)) {
  if (sgn(value_) < 0 || value_ >= 1) throw std::invalid_argument("rotation parameter must lie in [0, 1)");
  if (sgn(precision_) < 0) throw std::invalid_argument("rotation precision must be nonnegative");
  if (label_.empty()) label_ = to_fraction_string(value_);
}

RotationParam RotationParam::exact(const Rational& alpha) { return RotationParam(frac(alpha), Rational(0), {}); }

RotationParam RotationParam::approximant(const Rational& value, const Rational& precision, std::string label) {
  return RotationParam(value, precision, std::move(label));
}

RotationParam RotationParam::sqrt_frac(unsigned long radicand, unsigned bits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  Integer root;
  const Integer scaled = Integer(radicand) * scale * scale;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  std::string label = "frac(sqrt(" + std::to_string(radicand) + "))";
  const bool perfect = root * root == scaled;
  Rational value(root, scale);
  value.canonicalize();
  if (perfect) return RotationParam(frac(value), Rational(0), std::move(label));
  Rational precision(Integer(1), scale);
  precision.canonicalize();
  return RotationParam(frac(value), std::move(precision), std::move(label));
}

RotationParam RotationParam::parse(const std::string& text) {
  if (text.rfind("sqrt:", 0) == 0) {
    unsigned long n = 0;
    const char* first = text.data() + 5;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr != last || n == 0) throw std::invalid_argument("bad radicand in '" + text + "'");
    return sqrt_frac(n);
  }
  return exact(parse_rational(text));
}

ArcSet half_circle(int bit) {
  return bit == 0 ? ArcSet::interval(Rational(0), Rational(1, 2)) : ArcSet::interval(Rational(1, 2), Rational(1));
}

ArcSet rotation_cell(const Rational& alpha, std::string_view bits) {
  ArcSet cell = ArcSet::full();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw std::invalid_argument("rotation_cell: not a binary string");
    cell = intersect(cell, rotate(half_circle(bits[i] - '0'), -alpha * static_cast<unsigned long>(i)));
  }
  return cell;
}

namespace {

void certify_endpoints(const RotationParam& alpha, std::size_t depth) {
  if (alpha.is_exact() || depth == 0) return;
  std::vector<Rational> points;
  for (std::size_t i = 0; i < depth; ++i) {
    const Rational shift = alpha.value() * static_cast<unsigned long>(i);
    points.push_back(frac(-shift));
    points.push_back(frac(Rational(1, 2) - shift));
  }
  std::sort(points.begin(), points.end());
  Rational gap = points.front() + 1 - points.back();
  for (std::size_t i = 1; i < points.size(); ++i) gap = std::min(gap, Rational(points[i] - points[i - 1]));
  const Rational slack = alpha.precision() * static_cast<unsigned long>(2 * depth);
  if (gap <= slack) {
    throw PrecisionExhausted("rotation_type: precision of " + alpha.label() + " cannot certify depth " +
                             std::to_string(depth));
  }
}

}  // namespace

TypeTree rotation_type(const RotationParam& alpha, std::size_t depth) {
  certify_endpoints(alpha, depth);
  std::vector<std::vector<Rational>> levels{{Rational(1)}};
  std::vector<ArcSet> cells{ArcSet::full()};
  for (std::size_t k = 0; k < depth; ++k) {
    const Rational shift = -alpha.value() * static_cast<unsigned long>(k);
    const ArcSet halves[2] = {rotate(half_circle(0), shift), rotate(half_circle(1), shift)};
    std::vector<ArcSet> next(2 * cells.size());
    std::vector<Rational> values(2 * cells.size());
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
      if (cells[idx].is_empty()) continue;
      for (int bit = 0; bit < 2; ++bit) {
        next[2 * idx + bit] = intersect(cells[idx], halves[bit]);
        values[2 * idx + bit] = measure(next[2 * idx + bit]);
      }
    }
    cells = std::move(next);
    levels.push_back(std::move(values));
  }
  return TypeTree(std::move(levels));
}

Rational lag_distance(const RotationParam& alpha, std::size_t n) {
  return dist_to_integer(alpha.value() * static_cast<unsigned long>(n));
}

LagProfile rotation_profile(const RotationParam& alpha) {
  return [alpha](std::size_t n) { return Rational(2 * lag_distance(alpha, n)); };
}

std::optional<std::size_t> approx_search(const RotationParam& alpha, const RotationParam& beta, std::size_t n_max,
                                         const Rational& eps) {
  if (sgn(eps) <= 0) throw std::invalid_argument("approx_search: eps must be positive");
  Rational a = 0;
  Rational b = 0;
  const Rational half(1, 2);
  for (std::size_t n = 1; n <= n_max; ++n) {
    a += alpha.value();
    b += beta.value();
    if (a >= 1) a -= 1;
    if (b >= 1) b -= 1;
    const Rational slack_a = alpha.precision() * static_cast<unsigned long>(n);
    const Rational slack_b = beta.precision() * static_cast<unsigned long>(n);
    if (dist_to_integer(a) + slack_a < eps && dist_to_integer(b - half) + slack_b < eps) return n;
  }
  return std::nullopt;
}

Rational certified_separation_at(const RotationParam& alpha, const RotationParam& beta, std::size_t n) {
  const Rational gap = abs(Rational(lag_distance(beta, n) - lag_distance(alpha, n)));
  const Rational error = (alpha.precision() + beta.precision()) * static_cast<unsigned long>(n);
  const Rational bound = gap - error;
  return sgn(bound) > 0 ? bound : Rational(0);
}

LagSeparation certified_separation(const RotationParam& alpha, const RotationParam& beta, std::size_t n_max) {
  LagSeparation best{Rational(0), 0};
  Rational a = 0;
  Rational b = 0;
  const Rational error_step = alpha.precision() + beta.precision();
  Rational error = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    a += alpha.value();
    b += beta.value();
    if (a >= 1) a -= 1;
    if (b >= 1) b -= 1;
    error += error_step;
    Rational bound = abs(Rational(dist_to_integer(b) - dist_to_integer(a))) - error;
    if (bound > best.bound) best = {std::move(bound), n};
  }
  return best;
}

std::vector<std::size_t> WitnessTree::node(std::string_view bits) const {
  if (bits.size() > depth) throw std::invalid_argument("WitnessTree::node: string longer than the tree");
  std::size_t idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("WitnessTree::node: not a binary string");
    idx = 2 * idx + static_cast<std::size_t>(c - '0');
  }
  const std::size_t width = std::size_t{1} << (depth - bits.size());
  std::vector<std::size_t> out(width);
  for (std::size_t i = 0; i < width; ++i) out[i] = idx * width + i;
  return out;
}

namespace {

std::vector<unsigned long> first_primes(std::size_t count) {
  std::vector<unsigned long> primes;
  for (unsigned long n = 2; primes.size() < count; ++n) {
    bool prime = true;
    for (auto p : primes) {
      if (p * p > n) break;
      if (n % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(n);
  }
  return primes;
}

}  // namespace

WitnessTree build_witness_tree(std::size_t depth, const WitnessOptions& options) {
  if (depth > options.depth_cap) {
    throw std::invalid_argument("build_witness_tree: depth " + std::to_string(depth) + " exceeds cap " +
                                std::to_string(options.depth_cap));
  }
  WitnessTree tree;
  tree.depth = depth;
  const std::size_t count = std::size_t{1} << depth;
  for (auto p : first_primes(count)) tree.leaves.push_back(RotationParam::sqrt_frac(p));
  tree.separation.assign(count, std::vector<Rational>(count, Rational(0)));
  tree.lag.assign(count, std::vector<std::size_t>(count, 0));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      LagSeparation s = certified_separation(tree.leaves[i], tree.leaves[j], options.lags);
      if (s.bound < options.target) {
        throw WitnessCertificationFailure("build_witness_tree: leaves " + tree.leaves[i].label() + " and " +
                                              tree.leaves[j].label() + " certified only " +
                                              to_decimal_string(s.bound) + " within " +
                                              std::to_string(options.lags) + " lags",
                                          i, j);
      }
      tree.separation[i][j] = tree.separation[j][i] = s.bound;
      tree.lag[i][j] = tree.lag[j][i] = s.lag;
    }
  }
  return tree;
}

WitnessFamily::WitnessFamily(std::shared_ptr<const WitnessTree> tree, std::size_t lambda,
                             std::vector<BranchFunction> thetas)
    : tree_(std::move(tree)),
      lambda_(lambda),
      base_(FiniteAlgebra::uniform(lambda <= kWitnessLambdaCap ? std::size_t{1} << lambda : 1)),
      thetas_(std::move(thetas)) {
  if (lambda == 0 || lambda > kWitnessLambdaCap) {
    throw std::invalid_argument("WitnessFamily: lambda must be in [1, " + std::to_string(kWitnessLambdaCap) + "]");
  }
  if (thetas_.empty()) throw std::invalid_argument("WitnessFamily: no branch functions");
  const std::size_t depth = tree_->depth;
  for (std::size_t m = 0; m < thetas_.size(); ++m) {
    const auto& theta = thetas_[m];
    if (theta.size() > depth) throw std::invalid_argument("WitnessFamily: branch function longer than the tree");
    for (auto c : theta) {
      if (c >= lambda) throw std::invalid_argument("WitnessFamily: branch function value out of range");
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (thetas_[k] == theta) throw std::invalid_argument("WitnessFamily: duplicate branch function " + format_branch(theta));
    }
  }
  const std::size_t atoms = base_.atom_count();
  for (const auto& theta : thetas_) {
    std::vector<std::size_t> leaf(atoms);
    for (std::size_t p = 0; p < atoms; ++p) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < depth; ++i) {
        const std::size_t bit = i < theta.size() ? (p >> theta[i]) & 1U : 0;
        idx = 2 * idx + bit;
      }
      leaf[p] = idx;
    }
    leaf_of_.push_back(std::move(leaf));
  }
}

Event WitnessFamily::coordinate_event(std::size_t i) const {
  if (i >= lambda_) throw std::out_of_range("coordinate_event: index out of range");
  std::vector<std::size_t> atoms;
  for (std::size_t p = 0; p < base_.atom_count(); ++p) {
    if (((p >> i) & 1U) == 0) atoms.push_back(p);
  }
  return Event(base_, std::move(atoms));
}

Event WitnessFamily::branch_event(std::size_t member, std::string_view bits) const {
  const auto& theta = thetas_.at(member);
  if (bits.size() > theta.size()) throw std::invalid_argument("branch_event: string longer than θ");
  Event out = Event::full(base_);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    Event a = coordinate_event(theta[i]);
    out = intersect(out, bits[i] == '0' ? a : complement(a));
  }
  return out;
}

TypeOverAlgebra WitnessFamily::member_type(std::size_t member, std::size_t depth) const {
  std::vector<TypeTree> leaf_trees;
  for (const auto& leaf : tree_->leaves) leaf_trees.push_back(rotation_type(leaf, depth));
  std::vector<TypeTree> per_atom;
  for (auto leaf : leaf_of_.at(member)) per_atom.push_back(leaf_trees[leaf]);
  return TypeOverAlgebra(base_, std::move(per_atom));
}

WitnessFamily build_witness_family(const WitnessTree& tree, std::size_t lambda, std::vector<BranchFunction> thetas) {
  return WitnessFamily(std::make_shared<const WitnessTree>(tree), lambda, std::move(thetas));
}

std::vector<BranchFunction> all_branch_functions(std::size_t depth, std::size_t lambda) {
  std::vector<BranchFunction> out;
  if (lambda == 0) return out;
  BranchFunction theta(depth, 0);
  for (;;) {
    out.push_back(theta);
    std::size_t i = depth;
    while (i > 0 && theta[i - 1] + 1 == lambda) theta[--i] = 0;
    if (i == 0) break;
    ++theta[i - 1];
  }
  return out;
}

FamilySeparationReport verify_family_separation(const WitnessFamily& family, const Rational& target) {
  if (family.size() < 2) throw std::invalid_argument("verify_family_separation: need at least two members");
  FamilySeparationReport report;
  report.target = target;
  const auto& sep = family.tree().separation;
  auto bound = [&](std::size_t a, std::size_t b) { return sep[a][b]; };
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      Rational value = integral_lower_bound(family.base(), family.leaves(i), family.leaves(j), bound);
      const bool pass = value >= target;
      report.all_pass = report.all_pass && pass;
      report.pairs.push_back({i, j, std::move(value), pass});
    }
  }
  return report;
}

std::string format_branch(const BranchFunction& theta) {
  std::string out;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (i > 0) out += '-';
    out += std::to_string(theta[i]);
  }
  return out;
}

BranchFunction parse_branch(std::string_view text) {
  BranchFunction out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t dash = text.find('-', start);
    const std::string_view part = text.substr(start, dash == std::string_view::npos ? dash : dash - start);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
      throw std::invalid_argument("malformed branch function '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (dash == std::string_view::npos) break;
    start = dash + 1;
  }
  return out;
}

}  // namespace genericlab

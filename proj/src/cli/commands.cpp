#include "genericlab/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "genericlab/cli/sampling.hpp"
#include "genericlab/measure_algebra.hpp"
#include "genericlab/oracle/brute_force.hpp"
#include "genericlab/oracle/vertex_lp.hpp"
#include "genericlab/perturbation.hpp"
#include "genericlab/rotation_types.hpp"
#include "genericlab/spectral.hpp"
#include "genericlab/type_space.hpp"

namespace genericlab::cli {

namespace {

Value text(std::string s) { return Value(std::move(s)); }
Value integer(std::size_t v) { return Value(static_cast<std::int64_t>(v)); }

std::string join(const std::vector<std::size_t>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string cycle_type(const AlgebraAutomorphism& t) {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles(t)) lengths.push_back(c.size());
  std::sort(lengths.rbegin(), lengths.rend());
  return join(lengths, '+');
}

std::vector<std::size_t> parse_perm(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_count(item));
  return out;
}

// ---------------------------------------------------------------- rokhlin

Report run_rokhlin(const ExperimentConfig& cfg, Rng& rng) {
  Report r;
  const auto atom_counts = cfg.range("atoms");
  const auto ns = cfg.range("n");
  const std::size_t samples = cfg.count("samples");
  const std::size_t cap = caps_from_environment().atoms;
  for (auto count : atom_counts) {
    if (count == 0) throw ConfigError("atoms must be positive");
    const FiniteAlgebra algebra = FiniteAlgebra::uniform(count);
    std::vector<AlgebraAutomorphism> instances{AlgebraAutomorphism::cyclic_shift(algebra)};
    for (std::size_t s = 0; s < samples; ++s) instances.push_back(random_automorphism(algebra, rng));
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const auto& t = instances[i];
      for (auto n : ns) {
        if (n == 0) throw ConfigError("n must be positive");
        const RokhlinTower tower = rokhlin_tower(t, n);
        const Rational base = measure(tower.base);
        Row row;
        row.add("atoms", integer(count)).add("instance", integer(i)).add("cycles", text(cycle_type(t)));
        row.add("n", integer(n)).add("base", base).add("covered", tower.covered);
        const bool partition = is_n_eps_partition(tower.base, t, n, Rational(1 - tower.covered));
        row.add("partition", partition);
        row.pass = partition && tower.covered == base * static_cast<unsigned long>(n);
        if (count <= cap) {
          const bool optimal = oracle::rokhlin_base_measure(t, n, cap) == base;
          row.add("brute_force_match", optimal);
          row.pass = row.pass && optimal;
        }
        r.rows.push_back(std::move(row));
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------- perturb

Report run_perturb(const ExperimentConfig& cfg, Rng&) {
  Report r;
  const auto ns = cfg.range("n");
  const auto perm = parse_perm(cfg.text("base_perm"));
  if (perm.empty()) throw ConfigError("base_perm must list at least one atom");
  const std::string bound_kind = cfg.text("bound");
  if (bound_kind != "half_over_n" && bound_kind != "one_over_n") {
    throw ConfigError("bound must be half_over_n or one_over_n");
  }
  std::size_t n_max = cfg.count("cycles");
  if (n_max == 0) n_max = *std::max_element(ns.begin(), ns.end());
  if (n_max > 9) throw ConfigError("cycles above 9 make the fresh factor too large");
  const FiniteAlgebra base = FiniteAlgebra::uniform(perm.size());
  AlgebraAutomorphism ta = [&] {
    try {
      return AlgebraAutomorphism(base, perm);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("base_perm: ") + e.what());
    }
  }();
  const PartitionedExtension ext = partitioned_extension(ta, n_max);
  for (auto n : ns) {
    if (n == 0 || n > n_max) throw ConfigError("n = " + std::to_string(n) + " has no marker (cycles = " +
                                               std::to_string(n_max) + ")");
    const Perturbation p = lemma211_perturb(ext, n);
    const Rational bound = bound_kind == "half_over_n" ? Rational(1, 2 * static_cast<unsigned long>(n))
                                                       : Rational(1, static_cast<unsigned long>(n));
    const bool fixes = fixes_base(ext, p.theta2);
    const bool recomposed = compose(p.theta2, compose(p.perturbed, inverse(p.theta2))) == p.model;
    const bool agrees = agrees_below_top_level(ext, p);
    Row row;
    row.add("n", integer(n)).add("base_atoms", integer(base.atom_count()));
    row.add("extension_atoms", integer(ext.algebra().atom_count()));
    row.add("distance", p.distance).add("bound", bound);
    row.add("theta_fixes_base", fixes).add("conjugate_to_model", recomposed).add("agrees_below_top", agrees);
    row.pass = p.distance <= bound && fixes && recomposed && agrees;
    r.rows.push_back(std::move(row));
  }
  return r;
}

// ---------------------------------------------------------------- typedist

Report run_typedist(const ExperimentConfig& cfg, Rng& rng) {
  Report r;
  const std::size_t pairs = cfg.count("pairs");
  const std::size_t atoms = cfg.count("atoms");
  const std::size_t depth = cfg.count("depth");
  const std::size_t lags = cfg.count("lags");
  if (atoms == 0) throw ConfigError("atoms must be positive");
  if (depth == 0 || depth > kDefaultCouplingDepthCap) {
    throw ConfigError("depth must lie in [1, " + std::to_string(kDefaultCouplingDepthCap) + "]");
  }
  const FiniteAlgebra algebra = FiniteAlgebra::uniform(atoms);
  const std::size_t tree_depth = std::max(depth, lags + 1);
  for (std::size_t i = 0; i < pairs; ++i) {
    const AlgebraAutomorphism t = random_automorphism(algebra, rng);
    const Event a = random_event(algebra, rng);
    const Event b = random_event(algebra, rng);
    const TypeTree p = type_of(a, t, tree_depth);
    const TypeTree q = type_of(b, t, tree_depth);
    const Rational measured = sym_diff_distance(a, b);
    Row row;
    row.add("pair", integer(i)).add("measured", measured);
    bool sound = true;
    bool monotone = true;
    Rational previous = 0;
    for (std::size_t m = 1; m <= depth; ++m) {
      const Rational lp = coupling_lower_bound(p, q, m).bound;
      row.add("lp_" + std::to_string(m), lp);
      sound = sound && lp <= measured;
      monotone = monotone && lp >= previous;
      previous = lp;
    }
    const Rational sep = lags > 0 ? separation_bound(p, q, lags) : Rational(0);
    row.add("separation", sep);
    const bool sep_sound = sep <= measured && (depth < lags + 1 || sep <= previous);
    row.add("lp_sound", sound).add("lp_monotone", monotone).add("separation_sound", sep_sound);
    row.pass = sound && monotone && sep_sound;
    r.rows.push_back(std::move(row));
  }
  return r;
}

// ---------------------------------------------------------------- rotation

RotationParam param_key(const ExperimentConfig& cfg, const std::string& key) {
  try {
    return RotationParam::parse(cfg.text(key));
  } catch (const std::exception& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

Report run_rotation(const ExperimentConfig& cfg, Rng&) {
  Report r;
  const RotationParam alpha = param_key(cfg, "alpha");
  const RotationParam beta = param_key(cfg, "beta");
  const Rational eps = cfg.rational("eps");
  const std::size_t n_max = cfg.count("n_max");
  const Rational target = cfg.rational("target");
  const auto found = approx_search(alpha, beta, n_max, eps);
  const LagSeparation best = certified_separation(alpha, beta, n_max);
  Row row;
  row.add("alpha", text(alpha.label())).add("beta", text(beta.label())).add("eps", eps);
  row.add("found", found.has_value());
  if (found) {
    row.add("n", integer(*found));
    row.add("alpha_gap", lag_distance(alpha, *found));
    row.add("beta_gap", Rational(dist_to_integer(beta.value() * static_cast<unsigned long>(*found) - Rational(1, 2))));
    row.add("bound_at_n", certified_separation_at(alpha, beta, *found));
  }
  row.add("best_bound", best.bound).add("best_lag", integer(best.lag)).add("target", target);
  row.pass = found.has_value() && best.bound >= target;
  r.rows.push_back(std::move(row));
  return r;
}

// ---------------------------------------------------------------- witness

Report run_witness(const ExperimentConfig& cfg, Rng&) {
  Report r;
  const std::size_t lambda = cfg.count("lambda");
  const std::size_t depth = cfg.count("depth");
  WitnessOptions options;
  options.lags = cfg.count("lags");
  options.target = cfg.rational("tree_target");
  const Rational target = cfg.rational("target");
  std::vector<BranchFunction> thetas;
  const std::string spec = cfg.text("thetas");
  if (spec == "all") {
    thetas = all_branch_functions(depth, lambda);
  } else {
    std::stringstream in(spec);
    std::string item;
    try {
      while (std::getline(in, item, ';')) thetas.push_back(parse_branch(item));
    } catch (const std::exception& e) {
      throw ConfigError(std::string("thetas: ") + e.what());
    }
  }
  if (thetas.size() < 2) throw ConfigError("need at least two branch functions");
  WitnessTree tree;
  try {
    tree = build_witness_tree(depth, options);
  } catch (const WitnessCertificationFailure& e) {
    Row row;
    row.add("tree_certified", false).add("message", text(e.what()));
    row.pass = false;
    r.rows.push_back(std::move(row));
    return r;
  }
  WitnessFamily family = [&] {
    try {
      return build_witness_family(tree, lambda, thetas);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }();
  const auto report = verify_family_separation(family, target);
  for (const auto& pair : report.pairs) {
    Row row;
    row.add("theta", text(format_branch(family.theta(pair.left))));
    row.add("theta_prime", text(format_branch(family.theta(pair.right))));
    row.add("bound", pair.bound).add("target", target);
    row.pass = pair.pass;
    r.rows.push_back(std::move(row));
  }
  return r;
}

// ---------------------------------------------------------------- spectral

Report run_spectral(const ExperimentConfig& cfg, Rng& rng) {
  Report r;
  const std::size_t samples = cfg.count("samples");
  DatumShape shape;
  shape.max_arcs = cfg.count("max_arcs");
  shape.max_points = cfg.count("max_points");
  shape.grid = cfg.count("grid");
  if (shape.grid < 2) throw ConfigError("grid must be at least 2");
  const std::size_t matching_points = cfg.count("matching_points");
  if (matching_points > caps_from_environment().points) {
    throw ConfigError("matching_points exceeds the brute-force cap");
  }

  auto add = [&](const std::string& check, std::size_t instances, std::size_t failures) {
    Row row;
    row.add("check", text(check)).add("instances", integer(instances)).add("failures", integer(failures));
    row.pass = failures == 0;
    r.rows.push_back(std::move(row));
  };

  std::size_t reflexive = 0, symmetric = 0, transitive = 0, nontrivial = 0, generic = 0, lemma16 = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const SpectralDatum d = random_datum(rng, shape);
    const SpectralDatum v1 = equivalent_variant(d, rng, shape);
    const SpectralDatum v2 = equivalent_variant(d, rng, shape);
    const SpectralDatum other = random_datum(rng, shape);
    if (!aue_decide(d, d)) ++reflexive;
    if (aue_decide(d, other) != aue_decide(other, d) || aue_decide(d, v1) != aue_decide(v1, d)) ++symmetric;
    const SpectralDatum* triple[3] = {&v1, &d, &v2};
    const SpectralDatum* mixed[3] = {&v1, &other, &d};
    for (auto* t : {triple, mixed}) {
      if (aue_decide(*t[0], *t[1]) && aue_decide(*t[1], *t[2])) {
        ++nontrivial;
        if (!aue_decide(*t[0], *t[2])) ++transitive;
      }
    }
    const auto ext = prime_extension(d);
    if (!is_generic(ext ? direct_sum(d, *ext) : d)) ++generic;
    // a sub-datum of d's arcs with no isolated points
    const SpectralDatum inner(ClosedCircleSet(intersect(d.spectrum().arcs(), random_datum(rng, shape).spectrum().arcs())), {});
    if (!lemma16_check(inner, d)) ++lemma16;
  }
  add("aue_reflexive", samples, reflexive);
  add("aue_symmetric", samples, symmetric);
  add("aue_transitive", nontrivial, transitive);
  add("prime_extension_generic", samples, generic);
  add("lemma16_sub_datum", samples, lemma16);

  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t count = 1 + draw_below(rng, std::max<std::size_t>(matching_points, 1));
    const auto a = random_circle_points(count, rng, shape.grid);
    const auto b = random_circle_points(count, rng, shape.grid);
    if (bottleneck_circle_distance(a, b) != oracle::bottleneck_circle_distance(a, b, matching_points)) ++mismatches;
  }
  add("bottleneck_brute_force", samples, mismatches);

  const SpectralDatum square = SpectralDatum::points_only(
      {{Rational(0), 1}, {Rational(1, 4), 1}, {Rational(1, 2), 1}, {Rational(3, 4), 1}});
  const SpectralDatum turned = SpectralDatum::points_only(
      {{Rational(1, 8), 1}, {Rational(3, 8), 1}, {Rational(5, 8), 1}, {Rational(7, 8), 1}});
  const double value = bottleneck_distance(square, turned);
  const double expected = 2 * std::sin(std::numbers::pi / 8);
  Row row;
  row.add("check", text("rotated_square")).add("value", value).add("expected", expected);
  row.pass = std::abs(value - expected) <= 1e-9;
  r.rows.push_back(std::move(row));
  return r;
}

// ---------------------------------------------------------------- oracles

void require_within(std::size_t size, std::size_t cap, const std::string& what) {
  if (size > cap) {
    throw ConfigError(what + " " + std::to_string(size) + " exceeds the brute-force cap " + std::to_string(cap));
  }
}

template <class Check>
Report instance_sweep(const ExperimentConfig& cfg, Rng& rng, const OracleCaps& caps, Check&& check) {
  Report r;
  const auto atom_counts = cfg.range("atoms");
  const std::size_t exhaustive_max = cfg.count("exhaustive_max");
  const std::size_t samples = cfg.count("samples");
  for (auto count : atom_counts) {
    if (count == 0) throw ConfigError("atoms must be positive");
    require_within(count, caps.atoms, "atom count");
    const FiniteAlgebra algebra = FiniteAlgebra::uniform(count);
    std::size_t instances = 0;
    std::size_t mismatches = 0;
    auto visit = [&](const std::vector<std::size_t>& perm) {
      const AlgebraAutomorphism t(algebra, perm);
      const AlgebraAutomorphism other = random_automorphism(algebra, rng);
      auto [n, bad] = check(t, other);
      instances += n;
      mismatches += bad;
    };
    const bool exhaustive = count <= exhaustive_max;
    if (exhaustive) {
      for_each_permutation(count, visit);
    } else {
      for (std::size_t s = 0; s < samples; ++s) visit(random_permutation(count, rng));
    }
    Row row;
    row.add("atoms", integer(count)).add("mode", text(exhaustive ? "exhaustive" : "sampled"));
    row.add("instances", integer(instances)).add("mismatches", integer(mismatches));
    row.pass = mismatches == 0;
    r.rows.push_back(std::move(row));
  }
  return r;
}

Report oracle_distance(const ExperimentConfig& cfg, Rng& rng, const OracleCaps& caps) {
  return instance_sweep(cfg, rng, caps, [&](const AlgebraAutomorphism& t, const AlgebraAutomorphism& other) {
    const auto id = AlgebraAutomorphism::identity(t.algebra());
    std::size_t bad = 0;
    if (uniform_distance(id, t) != oracle::uniform_distance(id, t, caps.atoms)) ++bad;
    if (uniform_distance(t, other) != oracle::uniform_distance(t, other, caps.atoms)) ++bad;
    return std::pair<std::size_t, std::size_t>{2, bad};
  });
}

Report oracle_rokhlin(const ExperimentConfig& cfg, Rng& rng, const OracleCaps& caps) {
  const auto ns = cfg.range("n");
  return instance_sweep(cfg, rng, caps, [&](const AlgebraAutomorphism& t, const AlgebraAutomorphism&) {
    std::size_t bad = 0;
    for (auto n : ns) {
      if (n == 0) throw ConfigError("n must be positive");
      if (measure(rokhlin_tower(t, n).base) != oracle::rokhlin_base_measure(t, n, caps.atoms)) ++bad;
    }
    return std::pair<std::size_t, std::size_t>{ns.size(), bad};
  });
}

Report oracle_bottleneck(const ExperimentConfig& cfg, Rng& rng, const OracleCaps& caps) {
  Report r;
  const std::size_t samples = cfg.count("samples");
  const std::size_t grid = cfg.count("grid");
  if (grid == 0) throw ConfigError("grid must be positive");
  for (auto count : cfg.range("points")) {
    require_within(count, caps.points, "point count");
    std::size_t mismatches = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      const auto a = random_circle_points(count, rng, grid);
      const auto b = random_circle_points(count, rng, grid);
      if (bottleneck_circle_distance(a, b) != oracle::bottleneck_circle_distance(a, b, caps.points)) ++mismatches;
    }
    Row row;
    row.add("points", integer(count)).add("instances", integer(samples)).add("mismatches", integer(mismatches));
    row.pass = mismatches == 0;
    r.rows.push_back(std::move(row));
  }
  return r;
}

Report oracle_lp(const ExperimentConfig& cfg, Rng& rng, const OracleCaps& caps) {
  Report r;
  const std::size_t samples = cfg.count("samples");
  const std::size_t atoms = cfg.count("atoms");
  if (atoms == 0) throw ConfigError("atoms must be positive");
  const FiniteAlgebra algebra = FiniteAlgebra::uniform(atoms);
  for (auto depth : cfg.range("depth")) {
    if (depth == 0) throw ConfigError("depth must be positive");
    std::size_t vars = 1;
    for (std::size_t i = 0; i < depth; ++i) vars *= 4;
    require_within(vars, caps.variables, "LP variable count");
    std::size_t mismatches = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      const AlgebraAutomorphism t = random_automorphism(algebra, rng);
      const TypeTree p = type_of(random_event(algebra, rng), t, depth);
      const TypeTree q = type_of(random_event(algebra, rng), t, depth);
      const Rational fast = coupling_lower_bound(p, q, depth).bound;
      const auto slow = oracle::vertex_lp_minimum(coupling_program(p, q, depth), caps.variables);
      if (!slow || *slow != fast) ++mismatches;
    }
    Row row;
    row.add("depth", integer(depth)).add("variables", integer(vars)).add("instances", integer(samples));
    row.add("mismatches", integer(mismatches));
    row.pass = mismatches == 0;
    r.rows.push_back(std::move(row));
  }
  return r;
}

}  // namespace

const std::vector<CommandSpec>& experiment_commands() {
  static const std::vector<CommandSpec> table = {
      {"rokhlin",
       "Rokhlin towers for the cyclic shift and random permutations of uniform atoms",
       {{"atoms", KeyKind::range, "7", "atom counts (a..b or a,b,c)"},
        {"n", KeyKind::range, "2..4", "tower heights"},
        {"samples", KeyKind::count, "3", "random permutations per atom count"}}},
      {"perturb",
       "explicit perturbation of a partitioned extension toward τ_A ⊗ ρ_n",
       {{"n", KeyKind::range, "2..8", "cycle lengths"},
        {"base_perm", KeyKind::text, "1,0", "automorphism of the uniform base algebra"},
        {"cycles", KeyKind::count, "0", "largest marker of the cycle system (0: max n)"},
        {"bound", KeyKind::text, "half_over_n", "half_over_n or one_over_n"}}},
      {"typedist",
       "coupling LP and lag separation bounds on realized type pairs",
       {{"pairs", KeyKind::count, "10", "random event pairs"},
        {"atoms", KeyKind::count, "8", "uniform atoms per instance"},
        {"depth", KeyKind::count, "3", "largest LP depth"},
        {"lags", KeyKind::count, "2", "lags scanned by the separation bound"}}},
      {"rotation",
       "simultaneous approximation search and certified separation of two rotation types",
       {{"alpha", KeyKind::text, "sqrt:2", "rational, decimal or sqrt:N"},
        {"beta", KeyKind::text, "sqrt:3", "rational, decimal or sqrt:N"},
        {"eps", KeyKind::tolerance, "1/50", "approximation tolerance"},
        {"n_max", KeyKind::count, "10000", "largest lag searched"},
        {"target", KeyKind::tolerance, "9/20", "required certified separation"}}},
      {"witness",
       "pairwise certified distances in the rotation witness family",
       {{"lambda", KeyKind::count, "3", "independent coordinates of the base algebra"},
        {"depth", KeyKind::count, "2", "witness tree depth"},
        {"thetas", KeyKind::text, "all", "all, or branch functions like 0-1;1-0"},
        {"target", KeyKind::tolerance, "1/6", "required pairwise bound"},
        {"tree_target", KeyKind::tolerance, "1/3", "required leaf separation"},
        {"lags", KeyKind::count, "2000", "lags scanned per leaf pair"}}},
      {"spectral",
       "equivalence, completion and matching checks on random spectral data",
       {{"samples", KeyKind::count, "200", "random data per check"},
        {"max_arcs", KeyKind::count, "3", "arcs per essential part"},
        {"max_points", KeyKind::count, "4", "eigenvalues per datum"},
        {"grid", KeyKind::count, "24", "positions are multiples of 1/grid"},
        {"matching_points", KeyKind::count, "6", "largest point list for the matching check"}}},
  };
  return table;
}

const std::vector<CommandSpec>& oracle_commands() {
  static const std::vector<CommandSpec> table = {
      {"distance",
       "uniform distance against enumeration of all events",
       {{"atoms", KeyKind::range, "1..8", "atom counts"},
        {"exhaustive_max", KeyKind::count, "8", "enumerate all permutations up to this size"},
        {"samples", KeyKind::count, "100", "random permutations above it"}}},
      {"rokhlin",
       "tower construction against enumeration of all bases",
       {{"atoms", KeyKind::range, "1..8", "atom counts"},
        {"n", KeyKind::range, "2..4", "tower heights"},
        {"exhaustive_max", KeyKind::count, "8", "enumerate all permutations up to this size"},
        {"samples", KeyKind::count, "100", "random permutations above it"}}},
      {"bottleneck",
       "bottleneck matching against all bijections",
       {{"points", KeyKind::range, "1..6", "point counts"},
        {"samples", KeyKind::count, "200", "random instances per count"},
        {"grid", KeyKind::count, "24", "positions are multiples of 1/grid"}}},
      {"lp",
       "simplex against vertex enumeration on coupling programs",
       {{"depth", KeyKind::range, "1..2", "coupling depths"},
        {"samples", KeyKind::count, "20", "random type pairs per depth"},
        {"atoms", KeyKind::count, "6", "uniform atoms per instance"}}},
  };
  return table;
}

const CommandSpec& find_command(const std::vector<CommandSpec>& table, const std::string& name) {
  for (const auto& c : table) {
    if (c.name == name) return c;
  }
  throw ConfigError("unknown command '" + name + "'");
}

ExperimentConfig make_config(const CommandSpec& spec) { return ExperimentConfig(spec.name, spec.keys); }

std::string describe_keys(const CommandSpec& spec) {
  std::string out = "Config keys (key=value, one per line):\n";
  for (const auto& k : spec.keys) out += "  " + k.name + " = " + k.default_value + "    " + k.help + "\n";
  return out;
}

Report run_experiment(const ExperimentConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  Report r;
  const std::string& name = cfg.command();
  if (name == "rokhlin") {
    r = run_rokhlin(cfg, rng);
  } else if (name == "perturb") {
    r = run_perturb(cfg, rng);
  } else if (name == "typedist") {
    r = run_typedist(cfg, rng);
  } else if (name == "rotation") {
    r = run_rotation(cfg, rng);
  } else if (name == "witness") {
    r = run_witness(cfg, rng);
  } else if (name == "spectral") {
    r = run_spectral(cfg, rng);
  } else {
    throw ConfigError("unknown command '" + name + "'");
  }
  r.command = name;
  r.seed = seed;
  r.config = cfg.effective();
  return r;
}

OracleCaps caps_from_environment() {
  OracleCaps caps;
  if (const char* env = std::getenv("GENERICLAB_CAP"); env != nullptr && *env != '\0') {
    const std::size_t cap = parse_count(env);
    caps.atoms = std::min<std::size_t>(cap, 62);
    caps.points = cap;
    caps.variables = cap;
  }
  return caps;
}

Report run_oracle(const ExperimentConfig& cfg, std::uint64_t seed, const OracleCaps& caps) {
  Rng rng(seed);
  Report r;
  const std::string& name = cfg.command();
  if (name == "distance") {
    r = oracle_distance(cfg, rng, caps);
  } else if (name == "rokhlin") {
    r = oracle_rokhlin(cfg, rng, caps);
  } else if (name == "bottleneck") {
    r = oracle_bottleneck(cfg, rng, caps);
  } else if (name == "lp") {
    r = oracle_lp(cfg, rng, caps);
  } else {
    throw ConfigError("unknown oracle '" + name + "'");
  }
  r.command = "oracle " + name;
  r.seed = seed;
  r.config = cfg.effective();
  return r;
}

}  // namespace genericlab::cli

#include "genericlab/serialization.hpp"

#include <stdexcept>

namespace genericlab {

namespace {

Rational rational_field(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a \"num/den\" string");
  return parse_rational(j.get<std::string>());
}

std::string bits_of(std::size_t idx, std::size_t length) {
  std::string s(length, '0');
  for (std::size_t i = 0; i < length; ++i) {
    if ((idx >> (length - 1 - i)) & 1U) s[i] = '1';
  }
  return s;
}

}  // namespace

Json algebra_to_json(const FiniteAlgebra& algebra) {
  Json measures = Json::array();
  for (const auto& m : algebra.measures()) measures.push_back(to_fraction_string(m));
  return Json{{"measures", std::move(measures)}};
}

FiniteAlgebra algebra_from_json(const Json& j) {
  std::vector<Rational> measures;
  for (const auto& m : j.at("measures")) measures.push_back(rational_field(m));
  return FiniteAlgebra(std::move(measures));
}

Json event_to_json(const Event& e) {
  return Json{{"atoms", std::vector<std::size_t>(e.atoms().begin(), e.atoms().end())}};
}

Event event_from_json(const FiniteAlgebra& algebra, const Json& j) {
  return Event(algebra, j.at("atoms").get<std::vector<std::size_t>>());
}

Json automorphism_to_json(const AlgebraAutomorphism& t) {
  return Json{{"perm", std::vector<std::size_t>(t.perm().begin(), t.perm().end())}};
}

AlgebraAutomorphism automorphism_from_json(const FiniteAlgebra& algebra, const Json& j) {
  return AlgebraAutomorphism(algebra, j.at("perm").get<std::vector<std::size_t>>());
}

Json tree_to_json(const TypeTree& t) {
  Json values = Json::object();
  for (std::size_t k = 0; k <= t.depth(); ++k) {
    const auto level = t.level(k);
    for (std::size_t idx = 0; idx < level.size(); ++idx) values[bits_of(idx, k)] = to_fraction_string(level[idx]);
  }
  return Json{{"depth", t.depth()}, {"values", std::move(values)}};
}

TypeTree tree_from_json(const Json& j) {
  const auto depth = j.at("depth").get<std::size_t>();
  if (depth >= 8 * sizeof(std::size_t)) throw std::invalid_argument("tree depth too large");
  const auto& values = j.at("values");
  std::vector<std::vector<Rational>> levels(depth + 1);
  for (std::size_t k = 0; k <= depth; ++k) {
    levels[k].resize(std::size_t{1} << k);
    for (std::size_t idx = 0; idx < levels[k].size(); ++idx) {
      const std::string key = bits_of(idx, k);
      if (!values.contains(key)) throw std::invalid_argument("tree value for \"" + key + "\" missing");
      levels[k][idx] = rational_field(values.at(key));
    }
  }
  return TypeTree(std::move(levels));
}

Json arcs_to_json(const ArcSet& a) {
  Json out = Json::array();
  for (const auto& arc : a.arcs()) out.push_back(Json::array({to_fraction_string(arc.lo), to_fraction_string(arc.hi)}));
  return out;
}

ArcSet arcs_from_json(const Json& j) {
  std::vector<Arc> arcs;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("arc must be a [lo, hi] pair");
    arcs.push_back({rational_field(pair[0]), rational_field(pair[1])});
  }
  return ArcSet(std::move(arcs));
}

Json spectral_to_json(const SpectralDatum& d) {
  Json points = Json::array();
  for (const auto& [at, mult] : d.eigen()) {
    Json entry{{"at", to_fraction_string(at)}};
    if (mult) {
      entry["mult"] = *mult;
    } else {
      entry["mult"] = "inf";
    }
    points.push_back(std::move(entry));
  }
  return Json{{"arcs", arcs_to_json(d.essential().arcs())}, {"points", std::move(points)}};
}

SpectralDatum spectral_from_json(const Json& j) {
  ArcSet arcs = j.contains("arcs") ? arcs_from_json(j.at("arcs")) : ArcSet();
  std::map<Rational, Multiplicity> eigen;
  if (j.contains("points")) {
    for (const auto& p : j.at("points")) {
      Rational at = rational_field(p.at("at"));
      const auto& mult = p.at("mult");
      Multiplicity m;
      if (mult.is_string()) {
        if (mult.get<std::string>() != "inf") throw std::invalid_argument("multiplicity must be a count or \"inf\"");
        m = kInfinite;
      } else {
        m = mult.get<std::uint64_t>();
      }
      if (!eigen.emplace(std::move(at), m).second) throw std::invalid_argument("duplicate eigenvalue entry");
    }
  }
  return SpectralDatum(ClosedCircleSet(std::move(arcs)), std::move(eigen));
}

}  // namespace genericlab

#pragma once

#include <json.hpp>

#include "genericlab/arcs.hpp"
#include "genericlab/measure_algebra.hpp"
#include "genericlab/spectral.hpp"
#include "genericlab/type_space.hpp"

namespace genericlab {

using Json = nlohmann::ordered_json;

/// {"measures": ["1/2", …]}
Json algebra_to_json(const FiniteAlgebra& algebra);
FiniteAlgebra algebra_from_json(const Json& j);

/// {"atoms": [0, 2, …]}
Json event_to_json(const Event& e);
Event event_from_json(const FiniteAlgebra& algebra, const Json& j);

/// {"perm": [1, 0, …]}
Json automorphism_to_json(const AlgebraAutomorphism& t);
AlgebraAutomorphism automorphism_from_json(const FiniteAlgebra& algebra, const Json& j);

/// {"depth": d, "values": {"": "1/1", "0": "1/2", …}}
Json tree_to_json(const TypeTree& t);
TypeTree tree_from_json(const Json& j);

/// [["0/1","1/2"], …]
Json arcs_to_json(const ArcSet& a);
ArcSet arcs_from_json(const Json& j);

/// {"arcs": […], "points": [{"at": "3/4", "mult": 2}, {"at": "0/1", "mult": "inf"}, …]}
Json spectral_to_json(const SpectralDatum& d);
SpectralDatum spectral_from_json(const Json& j);

}  // namespace genericlab

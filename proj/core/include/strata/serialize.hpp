#pragma once

// JSON interchange for values, lattices, flags and verdicts.

#include <json.hpp>

#include "strata/cyclotomic.hpp"
#include "strata/enumerate.hpp"
#include "strata/identities.hpp"
#include "strata/lattice.hpp"
#include "strata/qpoly.hpp"

namespace strata {

nlohmann::json to_json(const CycInt& value);
nlohmann::json to_json(const ScaledCyc& value);
/// {"n":..., "alpha":[...], "entries":{"i,j":[coeffs]}} with 1-based i < j.
nlohmann::json to_json(const LatticeHNF& lattice);
nlohmann::json to_json(const Flag& flag);
nlohmann::json to_json(const QPoly& poly);
nlohmann::json to_json(const IdentityVerdict& verdict);

CycInt cycint_from_json(const nlohmann::json& j);
ScaledCyc scaledcyc_from_json(const nlohmann::json& j);
/// The prime is not part of the lattice record and must be supplied.
LatticeHNF lattice_from_json(const nlohmann::json& j, std::uint32_t p);

}  // namespace strata

#include "strata/serialize.hpp"

#include <string>

namespace strata {

using nlohmann::json;

json to_json(const CycInt& value) { return json{{"p", value.prime()}, {"coords", value.coords()}}; }

json to_json(const ScaledCyc& value) {
  json j = to_json(value.numerator());
  j["denom_exp"] = value.denom_exp();
  return j;
}

json to_json(const LatticeHNF& lattice) {
  json entries = json::object();
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    for (std::size_t j = i + 1; j < lattice.rank(); ++j)
      entries[std::to_string(i + 1) + "," + std::to_string(j + 1)] = lattice.entry(i, j);
  return json{{"n", lattice.rank()}, {"alpha", lattice.alpha().parts()}, {"entries", entries}};
}

json to_json(const Flag& flag) {
  json arr = json::array();
  for (const auto& l : flag.chain) arr.push_back(to_json(l));
  return arr;
}

json to_json(const QPoly& poly) { return poly.coeffs(); }

json to_json(const IdentityVerdict& v) {
  json j{{"identity", v.identity}, {"n", v.n}, {"d", v.d}, {"p", v.p}};
  if (v.alpha) j["alpha"] = *v.alpha;
  if (v.lambda) j["lambda"] = *v.lambda;
  if (v.mu) j["mu"] = *v.mu;
  if (v.tau) j["tau"] = *v.tau;
  j["value"] = std::visit([](const auto& x) { return to_json(x); }, v.value);
  j["expected"] = v.expected;
  j["ok"] = v.ok;
  return j;
}

CycInt cycint_from_json(const json& j) {
  return CycInt(j.at("p").get<std::uint32_t>(), j.at("coords").get<std::vector<std::int64_t>>());
}

ScaledCyc scaledcyc_from_json(const json& j) {
  return ScaledCyc(cycint_from_json(j), j.value("denom_exp", 0u));
}

LatticeHNF lattice_from_json(const json& j, std::uint32_t p) {
  const auto n = j.at("n").get<std::size_t>();
  auto alpha = j.at("alpha").get<std::vector<int>>();
  if (alpha.size() != n) throw PreconditionError("lattice record: alpha length differs from n");
  std::vector<std::vector<std::vector<std::uint32_t>>> entries(n, std::vector<std::vector<std::uint32_t>>(n));
  if (j.contains("entries")) {
    for (const auto& [key, coeffs] : j.at("entries").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw PreconditionError("lattice record: bad entry key '" + key + "'");
      const auto i = std::stoul(key.substr(0, comma));
      const auto jj = std::stoul(key.substr(comma + 1));
      if (i < 1 || jj <= i || jj > n) throw PreconditionError("lattice record: entry key out of range '" + key + "'");
      entries[i - 1][jj - 1] = coeffs.get<std::vector<std::uint32_t>>();
    }
  }
  return LatticeHNF(p, Composition(std::move(alpha)), std::move(entries));
}

}  // namespace strata

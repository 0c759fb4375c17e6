#pragma once

// JSON forms of the library's objects.
//   multipartition: [[2,1],[1,1],[1,1,1],[2]]
//   residue:        3 when k = 1, else {"orbit": o, "value": r}
//   Fock vector:    [{"multipartition": mp, "coeff": [[exp, c], ...]}, ...]

#include "kleshchev/counting.hpp"
#include "kleshchev/fock.hpp"

#include <nlohmann/json.hpp>

namespace kleshchev {

using nlohmann::json;

json to_json(const Multipartition &mp);
/// Throws ParameterError on malformed input or a component-count mismatch
/// (when expected_p > 0).
Multipartition multipartition_from_json(const json &j, int expected_p = 0);

json to_json(const Residue &r, const ParamEnv &env);
Residue residue_from_json(const json &j, const ParamEnv &env);

json to_json(const LaurentPoly &poly);
LaurentPoly laurent_from_json(const json &j);

json to_json(const FockVector &x);
/// Accepts the Fock vector form or a bare multipartition (coefficient 1).
FockVector fock_from_json(const json &j, int expected_p = 0);

json to_json(const CrystalLattice &lattice);
json to_json(const OrbitPartition &orbits);
json to_json(const CountReport &report);

} // namespace kleshchev

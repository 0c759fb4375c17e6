#include "kleshchev/json_io.hpp"

namespace kleshchev {

json to_json(const Multipartition &mp) {
  json out = json::array();
  for (const auto &part : mp.components())
    out.push_back(part.parts());
  return out;
}

Multipartition multipartition_from_json(const json &j, int expected_p) {
  if (!j.is_array())
    throw ParameterError("multipartition must be a JSON array of arrays");
  std::vector<Partition> comps;
  for (const auto &c : j) {
    if (!c.is_array())
      throw ParameterError("multipartition component must be an array");
    std::vector<int> parts;
    for (const auto &x : c) {
      if (!x.is_number_integer())
        throw ParameterError("partition parts must be integers");
      parts.push_back(x.get<int>());
    }
    if (!parts.empty() && parts.back() == 0)
      throw ParameterError("partition parts must be positive");
    comps.emplace_back(std::move(parts));
  }
  if (comps.empty())
    throw ParameterError("multipartition needs at least one component");
  if (expected_p > 0 && static_cast<int>(comps.size()) != expected_p)
    throw ParameterError("multipartition has " + std::to_string(comps.size()) +
                         " components, expected " + std::to_string(expected_p));
  return Multipartition(std::move(comps));
}

json to_json(const Residue &r, const ParamEnv &env) {
  if (env.k() == 1)
    return r.value;
  return json{{"orbit", r.orbit}, {"value", r.value}};
}

Residue residue_from_json(const json &j, const ParamEnv &env) {
  Residue r;
  if (j.is_number_integer()) {
    if (env.k() != 1)
      throw ParameterError("bare integer residues need k = 1");
    r = {0, j.get<int>()};
  } else if (j.is_object() && j.contains("orbit") && j.contains("value")) {
    r = {j.at("orbit").get<int>(), j.at("value").get<int>()};
  } else {
    throw ParameterError("malformed residue");
  }
  if (r.orbit < 0 || r.orbit >= env.k() || r.value < 0 || r.value >= env.e())
    throw ParameterError("residue out of range");
  return r;
}

json to_json(const LaurentPoly &poly) {
  json out = json::array();
  for (const auto &[e, c] : poly.terms())
    out.push_back(json::array({e, c}));
  return out;
}

LaurentPoly laurent_from_json(const json &j) {
  if (j.is_number_integer())
    return LaurentPoly(j.get<LaurentPoly::Coeff>());
  if (!j.is_array())
    throw ParameterError("coefficient must be an array of [exp, coeff] pairs");
  LaurentPoly out;
  for (const auto &term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() ||
        !term[1].is_number_integer())
      throw ParameterError("coefficient term must be [exp, coeff]");
    out.add_term(term[0].get<int>(), term[1].get<LaurentPoly::Coeff>());
  }
  return out;
}

json to_json(const FockVector &x) {
  json out = json::array();
  for (const auto &[mp, c] : x.terms())
    out.push_back({{"multipartition", to_json(mp)}, {"coeff", to_json(c)}});
  return out;
}

FockVector fock_from_json(const json &j, int expected_p) {
  if (!j.is_array())
    throw ParameterError("Fock vector must be a JSON array");
  FockVector out;
  const bool bare = !j.empty() && j.front().is_array();
  if (bare) {
    out.add(multipartition_from_json(j, expected_p), LaurentPoly(1));
    return out;
  }
  for (const auto &term : j) {
    if (!term.is_object() || !term.contains("multipartition"))
      throw ParameterError("Fock vector term needs a multipartition");
    const LaurentPoly c = term.contains("coeff")
                              ? laurent_from_json(term.at("coeff"))
                              : LaurentPoly(1);
    out.add(multipartition_from_json(term.at("multipartition"), expected_p), c);
  }
  return out;
}

json to_json(const CrystalLattice &lattice) {
  json levels = json::array();
  for (const auto &level : lattice.levels) {
    json row = json::array();
    for (const auto &mp : level)
      row.push_back(to_json(mp));
    levels.push_back(std::move(row));
  }
  json edges = json::array();
  for (const auto &step : lattice.edges) {
    json row = json::array();
    for (const auto &e : step)
      row.push_back({{"from", e.from},
                     {"to", e.to},
                     {"residue", to_json(e.residue, lattice.env)}});
    edges.push_back(std::move(row));
  }
  return {{"levels", std::move(levels)}, {"edges", std::move(edges)}};
}

json to_json(const OrbitPartition &orbits) {
  std::vector<const OrbitReport *> all;
  for (const auto &o : orbits.free_orbits)
    all.push_back(&o);
  for (const auto &o : orbits.non_free_orbits)
    all.push_back(&o);
  std::ranges::sort(all, [](const auto *a, const auto *b) {
    return a->representative < b->representative;
  });
  json out = json::array();
  for (const auto *o : all) {
    json orbit = json::array();
    for (const auto &mp : o->orbit)
      orbit.push_back(to_json(mp));
    out.push_back(std::move(orbit));
  }
  return {{"orbits", std::move(out)}};
}

json to_json(const CountReport &report) {
  auto table = [](const std::map<int, Count> &m) {
    json out = json::object();
    for (const auto &[k, v] : m)
      out[std::to_string(k)] = v;
    return out;
  };
  json out = {{"n_tilde", table(report.n_tilde)},
              {"n_exact", table(report.n_exact)},
              {"irr_pn", report.irr_pn},
              {"irr_ppn", report.irr_ppn},
              {"cross_checked", report.cross_checked}};
  if (report.cross_checked) {
    out["oracle"] = {{"n_tilde", table(report.n_tilde_oracle)},
                     {"orbit_sum", report.orbit_sum},
                     {"pass", report.oracle_agrees}};
  }
  return out;
}

} // namespace kleshchev

#include "kleshchev/cli.hpp"

#include "kleshchev/json_io.hpp"
#include "kleshchev/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace kleshchev::cli {

namespace {

struct RunConfig {
  int p = 0;
  int k = 1;
  int ell = 0;
  int n = 0;
  int m = 0;
  std::string format = "table";
  bool check = false;
  std::uint64_t seed = verify::GridConfig{}.seed;
  int max_n = 4;
  bool lattice = false;
  std::string state;
  std::string word;
  std::string out_file;
};

void add_env_flags(CLI::App &sub, RunConfig &cfg) {
  sub.add_option("--p", cfg.p, "number of components")
      ->required()
      ->check(CLI::PositiveNumber);
  sub.add_option("--k", cfg.k, "number of q-orbits (divides p)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub.add_option("--ell", cfg.ell, "exponent with eps^k = q^ell")
      ->required()
      ->check(CLI::PositiveNumber);
}

void add_format_flag(CLI::App &sub, RunConfig &cfg) {
  sub.add_option("--format", cfg.format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"table", "json"}));
  sub.add_option("--out", cfg.out_file, "write output to a file");
}

bool json_out(const RunConfig &cfg) { return cfg.format == "json"; }

int cmd_enumerate(const RunConfig &cfg, std::ostream &out) {
  const ParamEnv env(cfg.p, cfg.k, cfg.ell);
  const CrystalLattice lat = generate_lattice(env, cfg.n);
  if (json_out(cfg)) {
    if (cfg.lattice) {
      out << to_json(lat).dump() << '\n';
    } else {
      json level = json::array();
      for (const auto &mp : lat.levels.back())
        level.push_back(to_json(mp));
      out << level.dump() << '\n';
    }
    return kOk;
  }
  const auto &level = lat.levels.back();
  for (std::size_t i = 0; i < level.size(); ++i)
    out << std::setw(5) << i + 1 << "  " << to_string(level[i]) << '\n';
  out << "# |K_" << cfg.n << "| = " << level.size() << '\n';
  return kOk;
}

int cmd_hmap(const RunConfig &cfg, std::ostream &out) {
  const ParamEnv env(cfg.p, cfg.k, cfg.ell);
  const CrystalLattice lat = generate_lattice(env, cfg.n);
  const OrbitPartition orbits = partition_orbits(lat);
  if (json_out(cfg)) {
    json doc = to_json(orbits);
    json table = json::array();
    for (const auto &mp : lat.levels.back())
      table.push_back(json::array({to_json(mp), to_json(h_map(env, mp))}));
    doc["map"] = std::move(table);
    out << doc.dump() << '\n';
    return kOk;
  }
  for (const auto &mp : lat.levels.back())
    out << to_string(mp) << "  ->  " << to_string(h_map(env, mp)) << '\n';
  out << "# orbits\n";
  json ordered = to_json(orbits).at("orbits");
  for (const auto &orbit : ordered) {
    std::string line;
    for (const auto &mp : orbit) {
      if (!line.empty())
        line += " -> ";
      line += to_string(multipartition_from_json(mp));
    }
    out << line << "  [order " << orbit.size() << ", stabilizer "
        << cfg.p / static_cast<int>(orbit.size()) << "]\n";
  }
  out << "# free orbits: " << orbits.free_orbits.size()
      << ", non-free orbits: " << orbits.non_free_orbits.size() << '\n';
  return kOk;
}

int cmd_count(const RunConfig &cfg, std::ostream &out) {
  const ParamEnv env(cfg.p, cfg.k, cfg.ell);
  const CountReport rep = build_count_report(env, cfg.n, cfg.check);
  if (json_out(cfg)) {
    out << to_json(rep).dump() << '\n';
  } else {
    out << std::setw(6) << "m" << std::setw(14) << "N~(m)" << std::setw(14)
        << "N(m)";
    if (cfg.check)
      out << std::setw(14) << "oracle N~(m)";
    out << '\n';
    for (const auto &[m, nt] : rep.n_tilde) {
      out << std::setw(6) << m << std::setw(14) << nt << std::setw(14)
          << rep.n_exact.at(m);
      if (cfg.check)
        out << std::setw(14) << rep.n_tilde_oracle.at(m);
      out << '\n';
    }
    out << "irr_pn  = " << rep.irr_pn << '\n';
    out << "irr_ppn = " << rep.irr_ppn << '\n';
    if (cfg.check) {
      out << "orbit_sum = " << rep.orbit_sum << '\n';
      out << (rep.oracle_agrees ? "PASS" : "FAIL") << '\n';
    }
  }
  return rep.oracle_agrees ? kOk : kVerifyFailed;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
  verify::GridConfig grid;
  grid.max_n = cfg.max_n;
  grid.seed = cfg.seed;
  const auto results = verify::run_grid(grid);
  std::size_t failed = 0;
  json doc = json::array();
  for (const auto &r : results) {
    failed += r.passed ? 0 : 1;
    if (json_out(cfg)) {
      doc.push_back({{"name", r.name},
                     {"passed", r.passed},
                     {"cases", r.cases},
                     {"witness", r.witness}});
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.cases
          << " cases]";
      if (!r.passed)
        out << "\n     witness: " << r.witness;
      out << '\n';
    }
  }
  if (json_out(cfg))
    out << json{{"checks", doc}, {"failed", failed}}.dump() << '\n';
  else
    out << "# " << results.size() - failed << "/" << results.size()
        << " checks passed (max-n " << cfg.max_n << ", seed " << cfg.seed
        << ")\n";
  return failed == 0 ? kOk : kVerifyFailed;
}

int cmd_fock(const RunConfig &cfg, std::ostream &out) {
  const ParamEnv env(cfg.p, cfg.k, cfg.ell);
  if (env.k() != 1)
    throw ParameterError("fock needs k = 1");
  json state;
  try {
    state = json::parse(cfg.state);
  } catch (const json::parse_error &e) {
    throw ParameterError(std::string("--state is not valid JSON: ") +
                         e.what());
  }
  const FockVector x = fock_from_json(state, env.p());
  const auto word = parse_operator_word(cfg.word);
  const FockVector y = apply_word(env, word, x);
  if (json_out(cfg)) {
    out << to_json(y).dump() << '\n';
  } else {
    if (y.is_zero())
      out << "0\n";
    for (const auto &[mp, c] : y.terms())
      out << "(" << to_string(c) << ") " << to_string(mp) << '\n';
  }
  return kOk;
}

int cmd_eta(const RunConfig &cfg, std::ostream &out) {
  const ParamEnv env(cfg.p, cfg.k, cfg.ell);
  if (env.k() != 1)
    throw ParameterError("eta needs k = 1");
  if (cfg.m < 1 || env.p() % cfg.m != 0)
    throw ParameterError("--m must divide p");
  json rows = json::array();
  if ((cfg.n * cfg.m) % env.p() == 0) {
    const auto small = generate_lattice(ParamEnv(cfg.m, 1, env.ell()),
                                        cfg.n * cfg.m / env.p());
    for (const auto &s : small.levels.back()) {
      const auto big = eta_map(env, cfg.m, s);
      if (json_out(cfg))
        rows.push_back(json::array({to_json(s), to_json(big)}));
      else
        out << to_string(s) << "  ->  " << to_string(big) << '\n';
    }
  }
  if (json_out(cfg))
    out << rows.dump() << '\n';
  else if (rows.empty() && (cfg.n * cfg.m) % env.p() != 0)
    out << "# p does not divide n*m: no fixed points\n";
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Kleshchev multipartitions, the hbar automorphism and simple "
               "module counts for H_q(p,p,n)",
               "kleshchev"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto *enumerate =
      app.add_subcommand("enumerate", "list the Kleshchev multipartitions K_n");
  add_env_flags(*enumerate, cfg);
  add_format_flag(*enumerate, cfg);
  enumerate->add_option("--n", cfg.n)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--lattice", cfg.lattice,
                      "with --format json, export all levels and edges");

  auto *hmap = app.add_subcommand("hmap", "tabulate hbar on K_n");
  add_env_flags(*hmap, cfg);
  add_format_flag(*hmap, cfg);
  hmap->add_option("--n", cfg.n)->required()->check(CLI::NonNegativeNumber);

  auto *count = app.add_subcommand("count", "count simple H_q(p,p,n)-modules");
  add_env_flags(*count, cfg);
  add_format_flag(*count, cfg);
  count->add_option("--n", cfg.n)->required()->check(CLI::NonNegativeNumber);
  count->add_flag("--check", cfg.check, "cross-check against enumeration");

  auto *verify_cmd =
      app.add_subcommand("verify", "run the property grid; exit 2 on failure");
  add_format_flag(*verify_cmd, cfg);
  verify_cmd->add_option("--max-n", cfg.max_n)
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", cfg.seed)->capture_default_str();

  auto *fock = app.add_subcommand("fock", "apply E/F/K words to a Fock vector");
  add_env_flags(*fock, cfg);
  add_format_flag(*fock, cfg);
  fock->add_option("--state", cfg.state,
                   "Fock vector or bare multipartition as JSON")
      ->required();
  fock->add_option("--word", cfg.word, "operator word, e.g. \"F0 F2 E0\"")
      ->required();

  auto *eta = app.add_subcommand("eta", "tabulate the path-expansion bijection");
  add_env_flags(*eta, cfg);
  add_format_flag(*eta, cfg);
  eta->add_option("--m", cfg.m)->required()->check(CLI::PositiveNumber);
  eta->add_option("--n", cfg.n)->required()->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (*enumerate)
      code = cmd_enumerate(cfg, buffer);
    else if (*hmap)
      code = cmd_hmap(cfg, buffer);
    else if (*count)
      code = cmd_count(cfg, buffer);
    else if (*verify_cmd)
      code = cmd_verify(cfg, buffer);
    else if (*fock)
      code = cmd_fock(cfg, buffer);
    else if (*eta)
      code = cmd_eta(cfg, buffer);
  } catch (const ParameterError &e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError &e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kVerifyFailed;
  }

  if (cfg.out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_file);
    if (!file) {
      err << "error: cannot open " << cfg.out_file << '\n';
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

} // namespace kleshchev::cli

#include "fermient/cli.hpp"

#include "fermient/correlations.hpp"
#include "fermient/entanglement.hpp"
#include "fermient/errors.hpp"
#include "fermient/protocols.hpp"
#include "fermient/state_io.hpp"
#include "fermient/transforms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <ostream>

namespace fermient::cli {

using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string state_path;
  int samples = 1000;
  std::uint64_t seed = 1;
  std::vector<std::string> tolerance_overrides;
  std::map<std::string, double> tolerances{
      {"norm", tol::norm}, {"zero", tol::zero}, {"compare", tol::compare}};
  std::string output = "json";
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FERMI_ENT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_argument, std::string("FERMI_ENT_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

void apply_tolerances(RunConfig& cfg) {
  for (const std::string& kv : cfg.tolerance_overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::invalid_argument, "--tol expects key=value, got '" + kv + "'");
    }
    const std::string key = kv.substr(0, eq);
    if (!cfg.tolerances.count(key)) {
      throw Error(ErrorCode::invalid_argument, "unknown tolerance '" + key + "'");
    }
    double value = 0.0;
    try {
      value = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_argument, "tolerance '" + key + "' is not a number");
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw Error(ErrorCode::invalid_argument, "tolerance '" + key + "' must be positive");
    }
    cfg.tolerances[key] = value;
  }
}

json conventions(const RunConfig& cfg) {
  json tols = json::object();
  for (const auto& [k, v] : cfg.tolerances) tols[k] = v;
  return {{"bit_order", "mode k is bit k of the mask; mode 0 is least significant"},
          {"basis", "mask {i1<...<ik} is c+_{i1}...c+_{ik}|0>"},
          {"sign_rule", "c_k and c+_k pick up (-1)^(occupied modes below k)"},
          {"one_body", "rho[i][j] = <c+_j c_i>, kappa[i][j] = <c_j c_i>"},
          {"log_base", 2},
          {"tolerances", tols}};
}

json matrix_json(const Matrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array(), s = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      r.push_back(m(i, j).real());
      s.push_back(m(i, j).imag());
    }
    re.push_back(r);
    im.push_back(s);
  }
  return {{"re", re}, {"im", im}};
}

json vector_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json amplitudes_json(const FockState& s) {
  json out = json::array();
  for (Mask m = 0; m < s.dim(); ++m) {
    if (std::abs(s[m]) <= tol::zero) continue;
    out.push_back({{"mask", m}, {"re", s[m].real()}, {"im", s[m].imag()}});
  }
  return out;
}

bool all_finite(const json& j) {
  if (j.is_number_float()) return std::isfinite(j.get<double>());
  if (j.is_structured()) {
    for (const auto& v : j) {
      if (!all_finite(v)) return false;
    }
  }
  return true;
}

std::vector<int> parse_modes(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_argument, "bad mode list '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

json entropy_report(const FockState& s) {
  const auto vn = entropy_function(EntropyKind::von_neumann);
  const auto quad = entropy_function(EntropyKind::quadratic);
  return {{"S_sp", sp_entropy(s, vn)},
          {"S_qsp", qsp_entropy(s, vn)},
          {"S_rho_sp", sp_trace_entropy(s, vn)},
          {"S_sp_quadratic", sp_entropy(s, quad)},
          {"S_qsp_quadratic", qsp_entropy(s, quad)}};
}

json majorization_json(const MajorizationReport& r) {
  json ents = json::object();
  for (const auto& e : r.entropies) {
    ents[e.name] = {{"S_A", e.s_a}, {"quarter_S_qsp", e.quarter_s_qsp}, {"holds", e.holds}};
  }
  return {{"lambda_max", r.lambda_max},
          {"f_plus", r.f_plus},
          {"f_minus", r.f_minus},
          {"entropies", ents},
          {"holds", r.holds}};
}

std::vector<ModePartition> sweep_partitions() {
  std::vector<ModePartition> parts;
  for (int other : {1, 2, 3}) parts.push_back(ModePartition::from_side_a(4, {0, other}));
  for (int m = 0; m < 4; ++m) parts.push_back(ModePartition::from_side_a(4, {m}));
  return parts;
}

struct Outcome {
  json report;
  int code = ok;
};

Outcome run_rho_sp(const RunConfig& cfg) {
  const FockState s = read_state_file(cfg.state_path);
  const OneBodyDensity ob = one_body(s);
  return {{{"rho", matrix_json(ob.rho)},
           {"kappa", matrix_json(ob.kappa)},
           {"eigenvalues", vector_json(hermitian_eigensystem(ob.rho).eigenvalues)}}};
}

Outcome run_rho_qsp(const RunConfig& cfg) {
  const FockState s = read_state_file(cfg.state_path);
  const ExtendedDensity ed = extended_density(s);
  return {{{"rho_qsp", matrix_json(ed.m)},
           {"eigenvalues", vector_json(hermitian_eigensystem(ed.m).eigenvalues)}}};
}

Outcome run_entropy(const RunConfig& cfg) {
  return {entropy_report(read_state_file(cfg.state_path))};
}

Outcome run_concurrence(const RunConfig& cfg) {
  const FockState s = read_state_file(cfg.state_path);
  const double c = concurrence(s);
  const Eigen::VectorXd spec = qsp_spectrum(s).eigenvalues;
  // f+ f- = C^2/4; stays well conditioned near C = 1 where f+- is not
  const double lp = spec[0];
  const double lm = spec[spec.size() - 1];
  const double dev = std::max(std::abs(lp + lm - 1.0), std::abs(4.0 * lp * lm - c * c));
  Outcome o{{{"parity", s.parity() == Parity::even ? "even" : "odd"},
             {"C", c},
             {"f_plus", f_plus(c)},
             {"f_minus", f_minus(c)},
             {"qsp_eigenvalues", vector_json(spec)},
             {"spectrum_deviation", dev}}};
  if (dev > cfg.tolerances.at("compare")) o.code = verification_failure;
  return o;
}

Outcome run_normal_form(const RunConfig& cfg) {
  const FockState s = read_state_file(cfg.state_path);
  const SchmidtForm nf = normal_form(s);
  return {{{"alpha_plus", nf.alpha_plus},
           {"alpha_minus", nf.alpha_minus},
           {"concurrence", 2.0 * nf.alpha_plus * nf.alpha_minus},
           {"U", matrix_json(nf.map.U())},
           {"V", matrix_json(nf.map.V())},
           {"transformed", amplitudes_json(nf.coordinates)},
           {"odd_pairing", nf.odd_pairing},
           {"even_pairing", nf.even_pairing},
           {"residual", nf.residual}}};
}

Outcome run_bipartition(const RunConfig& cfg, const std::string& side_a) {
  const FockState s = read_state_file(cfg.state_path);
  const ModePartition part = ModePartition::from_side_a(s.n_modes(), parse_modes(side_a));
  const ReducedDensity ra = reduced_state(s, part, Side::A);
  const auto vn = entropy_function(EntropyKind::von_neumann);
  const auto quad = entropy_function(EntropyKind::quadratic);
  const Eigen::VectorXd la = reduced_spectrum(ra);
  const Eigen::VectorXd lb = reduced_spectrum(reduced_state(s, part, Side::B));
  Outcome o{{{"side_a", part.side_a()},
             {"side_b", part.side_b()},
             {"rho_A_eigenvalues", vector_json(la)},
             {"S_A", trace_entropy(la, vn)},
             {"S_B", trace_entropy(lb, vn)},
             {"S_A_quadratic", trace_entropy(la, quad)},
             {"S_qsp", qsp_entropy(s)}}};
  if (std::abs(trace_entropy(la, vn) - trace_entropy(lb, vn)) > cfg.tolerances.at("compare")) {
    o.code = verification_failure;
  }
  if (s.n_modes() == 4) {
    const MajorizationReport mr = majorization_check(s, part);
    o.report["majorization"] = majorization_json(mr);
    if (!mr.holds) o.code = verification_failure;
    if (s.parity() == Parity::even && part.side_a().size() == 2) {
      const LocalParitySplit lp = local_parity_split(s, part);
      o.report["local_parity"] = {{"p_minus", lp.p_minus},
                                  {"p_plus", lp.p_plus},
                                  {"C_minus", lp.c_minus},
                                  {"C_plus", lp.c_plus},
                                  {"C", lp.concurrence},
                                  {"sandwich_holds", lp.sandwich_holds}};
      if (!lp.sandwich_holds) o.code = verification_failure;
    }
  }
  return o;
}

Outcome run_check_sweep(const RunConfig& cfg) {
  const double margin = cfg.tolerances.at("compare");
  const auto parts = sweep_partitions();
  long long checked = 0, violations = 0;
  double worst_lambda = -1.0;
  double worst_entropy = -1.0;
  for (int i = 0; i < cfg.samples; ++i) {
    const Parity p = (i % 2 == 0) ? Parity::even : Parity::odd;
    const FockState s = random_state(4, p, derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
    for (const auto& part : parts) {
      const MajorizationReport r = majorization_check(s, part);
      ++checked;
      bool ok_here = r.lambda_max <= r.f_plus + margin;
      worst_lambda = std::max(worst_lambda, r.lambda_max - r.f_plus);
      for (const auto& e : r.entropies) {
        ok_here = ok_here && e.s_a >= e.quarter_s_qsp - margin;
        worst_entropy = std::max(worst_entropy, e.quarter_s_qsp - e.s_a);
      }
      if (!ok_here) ++violations;
    }
  }
  Outcome o{{{"samples", cfg.samples},
             {"seed", cfg.seed},
             {"partitions_per_state", parts.size()},
             {"pairs_checked", checked},
             {"violations", violations},
             {"max_lambda_excess", worst_lambda},
             {"max_entropy_deficit", worst_entropy}}};
  if (violations > 0) o.code = verification_failure;
  return o;
}

Outcome run_random_state(const RunConfig& cfg, int n, const std::string& parity) {
  if (parity != "even" && parity != "odd") {
    throw Error(ErrorCode::invalid_argument, "parity must be even or odd");
  }
  const FockState s = random_state(n, parity == "even" ? Parity::even : Parity::odd, cfg.seed);
  json doc = json::parse(format_state(s));
  doc["seed"] = cfg.seed;
  return {doc};
}

PairKind parse_kind(const std::string& k) {
  if (k == "odd") return PairKind::odd;
  if (k == "even") return PairKind::even;
  throw Error(ErrorCode::invalid_argument, "kind must be odd or even");
}

Outcome run_teleport(const RunConfig& cfg, Complex alpha, Complex beta, const std::string& kind,
                     int branch) {
  if (branch < -1 || branch > 3) throw Error(ErrorCode::invalid_argument, "branch must be 0..3");
  const TeleportReport r = run_teleportation(alpha, beta, parse_kind(kind));
  Outcome o{{{"kind", kind},
             {"alpha", {{"re", alpha.real()}, {"im", alpha.imag()}}},
             {"beta", {{"re", beta.real()}, {"im", beta.imag()}}}}};
  json branches = json::array();
  for (std::size_t k = 0; k < r.branches.size(); ++k) {
    if (branch >= 0 && static_cast<int>(k) != branch) continue;
    const TeleportBranch& b = r.branches[k];
    branches.push_back({{"branch", k},
                        {"bits", std::to_string(b.input_bit) + std::to_string(b.bell_bit)},
                        {"probability", b.probability},
                        {"fidelity", b.fidelity},
                        {"leakage", b.leakage},
                        {"bob_qubit", matrix_json(b.bob_qubit)}});
    if (b.fidelity < 1.0 - cfg.tolerances.at("compare") ||
        std::abs(b.probability - 0.25) > cfg.tolerances.at("compare")) {
      o.code = verification_failure;
    }
  }
  o.report["branches"] = branches;
  return o;
}

Outcome run_sdc(const RunConfig& cfg, const std::string& message, const std::string& seed_name) {
  SeedState seed;
  if (seed_name == "psi00") {
    seed = SeedState::psi00;
  } else if (seed_name == "psi00prime") {
    seed = SeedState::psi00_prime;
  } else {
    throw Error(ErrorCode::invalid_argument, "seed state must be psi00 or psi00prime");
  }
  const FockState s = superdense_encode(message, seed);
  const std::string decoded = superdense_decode(s, seed);
  const ModePartition part = ModePartition::from_side_a(4, {0, 1});
  Outcome o{{{"message", message},
             {"seed_state", seed_name},
             {"decoded", decoded},
             {"S_A", bipartite_entropy(s, part, entropy_function(EntropyKind::von_neumann))},
             {"C", concurrence(s)},
             {"encoded", amplitudes_json(s)}}};
  if (decoded != message) o.code = verification_failure;
  (void)cfg;
  return o;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::hermiticity_defect:
    case ErrorCode::no_convergence:
    case ErrorCode::lift_failure:
    case ErrorCode::side_mismatch:
      return verification_failure;
    default:
      return input_error;
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.seed = default_seed();
  } catch (const Error& e) {
    err << e.what() << '\n';
    return input_error;
  }

  CLI::App app{"Exact fermionic Fock-space entanglement toolkit", "fermi-ent"};
  app.require_subcommand(1);
  app.add_option("--output", cfg.output, "json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));
  app.add_option("--tol", cfg.tolerance_overrides, "tolerance override key=value (norm, zero, compare)");

  auto state_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("state", cfg.state_path, "state JSON file")->required();
    return sub;
  };
  CLI::App* rho_sp = state_command("rho-sp", "one-body density matrix and its spectrum");
  CLI::App* rho_qsp = state_command("rho-qsp", "extended one-body density matrix and its spectrum");
  CLI::App* entropy = state_command("entropy", "one-body entropies");
  CLI::App* conc = state_command("concurrence", "fermionic concurrence (four modes)");
  CLI::App* nf = state_command("normal-form", "quasiparticle normal form (four modes)");
  CLI::App* bip = state_command("bipartition", "reduced state of a mode bipartition");
  std::string side_a;
  bip->add_option("--a", side_a, "comma-separated modes of side A")->required();

  CLI::App* sweep = app.add_subcommand("check-lemma2", "random sweep of the bipartition bounds");
  sweep->add_option("--samples", cfg.samples)->check(CLI::PositiveNumber);
  sweep->add_option("--seed", cfg.seed);

  CLI::App* rnd = app.add_subcommand("random-state", "sample a random definite-parity state");
  int n_modes = 4;
  std::string parity = "even";
  rnd->add_option("--n", n_modes);
  rnd->add_option("--parity", parity);
  rnd->add_option("--seed", cfg.seed);

  CLI::App* tele = app.add_subcommand("teleport", "teleport a pair-encoded qubit");
  double are = 1.0, aim = 0.0, bre = 0.0, bim = 0.0;
  std::string kind = "odd";
  int branch = -1;
  tele->add_option("--alpha-re", are);
  tele->add_option("--alpha-im", aim);
  tele->add_option("--beta-re", bre);
  tele->add_option("--beta-im", bim);
  tele->add_option("--kind", kind);
  tele->add_option("--branch", branch);

  CLI::App* sdc = app.add_subcommand("sdc", "superdense-code a three-bit message");
  std::string message;
  std::string seed_state = "psi00";
  sdc->add_option("--message", message)->required();
  sdc->add_option("--seed-state", seed_state);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  Outcome o;
  try {
    apply_tolerances(cfg);
    if (rho_sp->parsed()) o = run_rho_sp(cfg);
    else if (rho_qsp->parsed()) o = run_rho_qsp(cfg);
    else if (entropy->parsed()) o = run_entropy(cfg);
    else if (conc->parsed()) o = run_concurrence(cfg);
    else if (nf->parsed()) o = run_normal_form(cfg);
    else if (bip->parsed()) o = run_bipartition(cfg, side_a);
    else if (sweep->parsed()) o = run_check_sweep(cfg);
    else if (rnd->parsed()) o = run_random_state(cfg, n_modes, parity);
    else if (tele->parsed()) o = run_teleport(cfg, {are, aim}, {bre, bim}, kind, branch);
    else if (sdc->parsed()) o = run_sdc(cfg, message, seed_state);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e);
  }

  if (!all_finite(o.report)) {
    err << "report contains a non-finite value\n";
    return verification_failure;
  }
  o.report["conventions"] = conventions(cfg);
  out << o.report.dump(cfg.output == "pretty" ? 2 : -1) << '\n';
  return o.code;
}

}  // namespace fermient::cli

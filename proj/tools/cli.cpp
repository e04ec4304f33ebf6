#include "cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"
#include "latmeans/generators.hpp"
#include "latmeans/json_io.hpp"
#include "latmeans/means.hpp"
#include "latmeans/partitions.hpp"
#include "latmeans/polynomial.hpp"
#include "latmeans/theorems.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

namespace latmeans::cli {

using nlohmann::json;
using verify::ClaimId;
using verify::Outcome;
using verify::VerificationReport;

namespace {

/// Raised for argument combinations CLI11 cannot express.
class UsageError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "human") return OutputFormat::human;
  throw UsageError("unknown output format \"" + text + "\"");
}

json parts_json(const std::vector<int>& parts) { return json(parts); }

// partitions ---------------------------------------------------------------

struct PartitionsArgs {
  std::vector<int> parts;
  int s = 0;
  int bound = partitions::kDefaultEnumerationBound;
};

int cmd_partitions_check(const PartitionsArgs& a, std::ostream& out) {
  const int s = a.s > 0 ? a.s : std::accumulate(a.parts.begin(), a.parts.end(), 0);
  const bool complete = partitions::is_complete(a.parts, s);
  json j{{"s", s}, {"parts", parts_json(a.parts)}, {"complete", complete}};
  if (complete) {
    json w = json::array();
    const auto w_exact = partitions::WeightVector::from_parts(a.parts);
    for (const auto& t : w_exact.exact()) {
      w.push_back(format_rational(t));
    }
    j["weights"] = w;
  }
  emit(out, j);
  return complete ? kSuccess : kVerificationFailure;
}

int cmd_partitions_list(const PartitionsArgs& a, std::ostream& out) {
  json list = json::array();
  for (const auto& cp : partitions::enumerate_complete(a.s, a.bound)) list.push_back(cp.parts());
  emit(out, json{{"s", a.s}, {"partitions", list}});
  return kSuccess;
}

// means --------------------------------------------------------------------

struct MeansArgs {
  std::string mean;
  std::string method = "closed";
  int s = 0;
  std::vector<int> weights;
  int resolution = 64;
  std::string inputs;
};

json result_json(const json& value, means::Method method, std::optional<double> bound) {
  return {{"value", value},
          {"method", std::string(means::to_string(method))},
          {"residual_bound", bound ? json(*bound) : json(nullptr)}};
}

void require_arity(const MeansArgs& a, std::size_t count) {
  if (a.s > 0 && static_cast<std::size_t>(a.s) != count) {
    throw UsageError("--s " + std::to_string(a.s) + " does not match the " +
                     std::to_string(count) + " input vectors");
  }
}

int cmd_means_eval(const MeansArgs& a, std::ostream& out) {
  const json input = io::read_json_file(a.inputs);
  const auto method = means::parse_method(a.method);

  if (io::has_rational_entries(input)) {
    if (a.mean != "hm" || method != means::Method::closed_form) {
      throw UsageError("exact rational inputs are supported for --mean hm --method closed only");
    }
    const auto fs = io::positive_rational_vectors_from_json(input);
    require_arity(a, fs.size());
    const auto value = means::harmonic_mean<Rational>(fs);
    emit(out, result_json(io::to_json(value.vec()), method, std::nullopt));
    return kSuccess;
  }

  const auto fs = io::positive_vectors_from_json(input);
  if (a.mean == "rmp" || a.mean == "gm") {
    if (method != means::Method::closed_form) {
      throw UsageError("--mean " + a.mean + " only supports --method closed");
    }
    if (a.mean == "rmp") {
      if (a.s < 1) throw UsageError("--mean rmp needs --s >= 1");
      emit(out, result_json(io::to_json(means::root_mean_power(a.s, fs).vec()), method, {}));
    } else {
      require_arity(a, fs.size());
      emit(out, result_json(io::to_json(means::geometric_mean(fs).vec()), method, {}));
    }
    return kSuccess;
  }

  if (a.mean == "hm") {
    require_arity(a, fs.size());
    if (method == means::Method::closed_form) {
      emit(out, result_json(io::to_json(means::harmonic_mean<double>(fs).vec()), method, {}));
      return kSuccess;
    }
    const auto spec = means::InfimumSpec::harmonic(static_cast<int>(fs.size()), a.resolution);
    const auto r = means::harmonic_mean_via_infimum(fs, spec, method);
    emit(out, result_json(io::to_json(r.value.vec()), r.method, r.residual_bound));
    return kSuccess;
  }

  if (a.mean == "wgm") {
    if (a.weights.empty()) throw UsageError("--mean wgm needs --weights r1,..,rp");
    const int total = std::accumulate(a.weights.begin(), a.weights.end(), 0);
    if (a.s > 0 && a.s != total) {
      throw UsageError("--s " + std::to_string(a.s) + " does not equal the sum of --weights (" +
                       std::to_string(total) + ")");
    }
    const auto w = partitions::WeightVector::from_parts(a.weights);
    if (method == means::Method::closed_form) {
      emit(out, result_json(io::to_json(means::weighted_geometric_mean(w, fs).vec()), method, {}));
      return kSuccess;
    }
    const auto spec = means::InfimumSpec::weighted_geometric(w, a.resolution);
    const auto r = means::wgm_via_infimum(w, fs, spec, method);
    emit(out, result_json(io::to_json(r.value.vec()), r.method, r.residual_bound));
    return kSuccess;
  }
  throw UsageError("unknown mean \"" + a.mean + "\"");
}

// poly ---------------------------------------------------------------------

struct PolyArgs {
  std::string poly;
  std::string point;
  std::string inputs;
  int trials = 1000;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  bool sign_mixed = false;
};

std::vector<lattice::LatticeVector> lattice_inputs(const std::string& path) {
  const json j = io::read_json_file(path);
  const json& list = j.is_object() && j.contains("vectors") ? j.at("vectors") : j;
  if (!list.is_array() || list.empty()) throw io::JsonError("$", "expected an array of vectors");
  std::vector<lattice::LatticeVector> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    out.push_back(io::vector_from_json(list[k], "$[" + std::to_string(k) + "]"));
  }
  return out;
}

int cmd_poly_eval(const PolyArgs& a, std::ostream& out) {
  const auto p = io::polynomial_from_json(io::read_json_file(a.poly));
  const auto f = io::vector_from_json(io::read_json_file(a.point), "$");
  emit(out, json{{"value", p.eval(f)}});
  return kSuccess;
}

int cmd_poly_multilinear(const PolyArgs& a, std::ostream& out) {
  const auto p = io::polynomial_from_json(io::read_json_file(a.poly));
  const auto fs = lattice_inputs(a.inputs);
  emit(out, json{{"value", p.eval_multilinear(fs)}});
  return kSuccess;
}

int cmd_poly_polarize(const PolyArgs& a, std::ostream& out) {
  const auto p = io::polynomial_from_json(io::read_json_file(a.poly));
  const auto fs = lattice_inputs(a.inputs);
  const auto polarized = poly::polarize_blackbox(
      [&p](const lattice::LatticeVector& f) { return p.eval(f); }, p.degree(), fs);
  const auto direct = p.eval_multilinear(fs);
  emit(out, json{{"value", polarized},
                 {"multilinear", direct},
                 {"residual", verify::residual(polarized, direct)}});
  return kSuccess;
}

int cmd_poly_oa(const PolyArgs& a, std::ostream& out) {
  const auto p = io::polynomial_from_json(io::read_json_file(a.poly));
  VerificationReport r;
  if (a.exhaustive) {
    r = poly::check_positive_oa_exhaustive(p, a.seed);
  } else if (a.sign_mixed) {
    r = poly::is_orthogonally_additive(p, a.trials, a.seed);
  } else {
    r = poly::is_positively_orthogonally_additive(p, a.trials, a.seed);
  }
  emit(out, verify::to_json(r));
  return exit_code_for(r);
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  std::string claim;
  int s = 2;
  bool s_given = false;
  std::size_t n = 3;
  std::size_t d = 1;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::vector<int> partition;
  std::string poly;
  int r = 3;
  std::size_t budget = 10000;
  double mixed_fraction = 0.5;
  std::string format = "json";
  std::string csv_path;
};

std::vector<partitions::CompletePartition> partitions_for(const VerifyArgs& a, int s) {
  if (!a.partition.empty()) {
    const int total = std::accumulate(a.partition.begin(), a.partition.end(), 0);
    if (total != s) {
      throw UsageError("--partition sums to " + std::to_string(total) + " but s = " +
                       std::to_string(s));
    }
    return {partitions::CompletePartition(a.partition, s)};
  }
  return partitions::enumerate_complete(s);
}

poly::HomogeneousPolynomial polynomial_for(const VerifyArgs& a, Rng& rng, int& s) {
  if (!a.poly.empty()) {
    auto p = io::polynomial_from_json(io::read_json_file(a.poly));
    if (a.s_given && a.s != p.degree()) {
      throw UsageError("--s " + std::to_string(a.s) + " does not match the polynomial degree " +
                       std::to_string(p.degree()));
    }
    s = p.degree();
    return p;
  }
  return poly::random_diagonal(rng, s, a.n, a.d);
}

VerificationReport merge_partitions(ClaimId claim, double tol,
                                    const std::vector<partitions::CompletePartition>& cps,
                                    const std::function<VerificationReport(
                                        const partitions::CompletePartition&)>& run_one) {
  verify::ReportAccumulator acc(claim, verify::Mode::forward, tol);
  for (const auto& cp : cps) acc.absorb(run_one(cp));
  return acc.finish();
}

// A witness is required for every partition; the smallest witness residual is reported.
VerificationReport merge_falsification(const std::vector<VerificationReport>& parts) {
  VerificationReport out = parts.front();
  out.trials = 0;
  out.max_residual = std::numeric_limits<double>::infinity();
  out.detail.clear();
  for (const auto& r : parts) {
    out.trials += r.trials;
    out.max_residual = std::min(out.max_residual, r.max_residual);
    if (r.outcome == Outcome::precondition_violated) {
      out.outcome = r.outcome;
    } else if (r.outcome == Outcome::inconclusive && out.outcome == Outcome::pass) {
      out.outcome = r.outcome;
    }
  }
  out.detail = std::to_string(parts.size()) + " partitions searched";
  return out;
}

VerificationReport run_claim(const VerifyArgs& a, ClaimId claim, Rng& rng) {
  int s = a.s;
  verify::SweepSetup setup{s, a.n, a.trials, {}};
  switch (claim) {
    case ClaimId::SCHUR:
      return verify::sweep_schur(setup, rng);
    case ClaimId::ORTHO:
      if (s < 2) throw UsageError("verify ortho needs --s >= 2");
      return verify::sweep_ortho(setup, rng);
    case ClaimId::GEOS: {
      const auto cps = partitions_for(a, s);
      return merge_partitions(claim, setup.tol.lemma_rel, cps, [&](const auto& cp) {
        return verify::sweep_geos(cp, setup, rng);
      });
    }
    default:
      break;
  }

  const auto p = polynomial_for(a, rng, s);
  setup.s = s;
  setup.n = p.domain_dim();
  switch (claim) {
    case ClaimId::RMP:
      return verify::sweep_rmp(p, a.r, setup, rng);
    case ClaimId::GM:
      return verify::sweep_gm(p, setup, rng);
    case ClaimId::HM:
      if (s < 2) throw UsageError("verify hm needs s >= 2");
      return verify::sweep_hm(p, setup, rng);
    case ClaimId::WGM: {
      const auto cps = partitions_for(a, s);
      return merge_partitions(claim, setup.tol.identity_rel, cps, [&](const auto& cp) {
        return verify::sweep_wgm(p, cp, setup, rng);
      });
    }
    case ClaimId::CROSS_TERMS:
      return verify::sweep_cross(p, setup, rng);
    default:
      break;
  }
  throw UsageError("claim " + std::string(verify::to_string(claim)) + " is not runnable here");
}

int cmd_verify_claim(const VerifyArgs& a, std::ostream& out) {
  Rng rng(a.seed);
  const auto r = run_claim(a, verify::parse_claim(a.claim), rng);
  emit(out, verify::to_json(r));
  return exit_code_for(r);
}

int cmd_verify_falsify(const VerifyArgs& a, std::ostream& out) {
  Rng rng(a.seed);
  const ClaimId claim = verify::parse_claim(a.claim);
  int s = a.s;
  const auto p = a.poly.empty() ? poly::random_polynomial(rng, s, a.n, a.d, a.mixed_fraction)
                                : polynomial_for(a, rng, s);
  std::optional<partitions::CompletePartition> cp;
  if (claim == ClaimId::WGM) {
    if (a.partition.empty()) {
      cp = partitions::CompletePartition(std::vector<int>(static_cast<std::size_t>(s), 1), s);
    } else {
      cp = partitions_for(a, s).front();
    }
  }
  verify::FalsifyOptions opts{a.budget, rng.next(), 2};
  const auto r = verify::falsify(p, claim, cp, opts);
  json j = verify::to_json(r);
  j["polynomial"] = io::to_json(p);
  emit(out, j);
  return exit_code_for(r);
}

void write_human(std::ostream& out, const std::vector<VerificationReport>& reports) {
  out << std::left << std::setw(16) << "claim" << std::setw(10) << "trials" << std::setw(16)
      << "max_residual" << std::setw(12) << "tolerance" << "outcome\n";
  for (const auto& r : reports) {
    std::string name(verify::to_string(r.claim));
    if (r.mode == verify::Mode::falsification) name += "_CONVERSE";
    std::ostringstream res;
    res << std::setprecision(3) << r.max_residual;
    std::ostringstream tol;
    tol << std::setprecision(3) << r.tolerance;
    out << std::setw(16) << name << std::setw(10) << r.trials << std::setw(16) << res.str()
        << std::setw(12) << tol.str() << verify::to_string(r.outcome) << '\n';
  }
}

int cmd_verify_all(const VerifyArgs& a, std::ostream& out) {
  if (a.s < 2) throw UsageError("verify all needs --s >= 2");
  if (a.n < 2) throw UsageError("verify all needs --n >= 2");
  const OutputFormat format = parse_format(a.format);
  Rng rng(a.seed);
  const verify::Tolerances tol;
  const int s = a.s;
  verify::SweepSetup setup{s, a.n, a.trials, tol};

  const auto p = poly::random_diagonal(rng, s, a.n, a.d);
  const auto cps = partitions::enumerate_complete(s);
  std::vector<VerificationReport> reports;
  reports.push_back(verify::sweep_rmp(p, a.r, setup, rng));
  reports.push_back(verify::sweep_gm(p, setup, rng));
  reports.push_back(verify::sweep_schur(setup, rng));
  reports.push_back(verify::sweep_ortho(setup, rng));
  reports.push_back(verify::sweep_hm(p, setup, rng));
  reports.push_back(merge_partitions(ClaimId::GEOS, tol.lemma_rel, cps, [&](const auto& cp) {
    return verify::sweep_geos(cp, setup, rng);
  }));
  reports.push_back(merge_partitions(ClaimId::WGM, tol.identity_rel, cps, [&](const auto& cp) {
    return verify::sweep_wgm(p, cp, setup, rng);
  }));
  reports.push_back(verify::sweep_cross(p, setup, rng));
  reports.push_back(poly::is_positively_orthogonally_additive(p, static_cast<int>(a.trials),
                                                              rng.next(), tol.identity_rel));

  const auto non_oa = poly::random_polynomial(rng, s, a.n, a.d, a.mixed_fraction);
  verify::FalsifyOptions opts{a.budget, rng.next(), 2};
  reports.push_back(verify::falsify(non_oa, ClaimId::HM, std::nullopt, opts, tol));
  std::vector<VerificationReport> wgm_converse;
  for (const auto& cp : cps) {
    wgm_converse.push_back(verify::falsify(non_oa, ClaimId::WGM, cp, opts, tol));
  }
  reports.push_back(merge_falsification(wgm_converse));

  std::ostringstream csv;
  csv << verify::csv_header() << '\n';
  for (const auto& r : reports) csv << verify::to_csv_row(r) << '\n';

  if (!a.csv_path.empty()) {
    std::ofstream file(a.csv_path);
    if (!file) throw UsageError("cannot write " + a.csv_path);
    file << csv.str();
  }

  switch (format) {
    case OutputFormat::json: {
      json summary = json::array();
      json details = json::array();
      for (const auto& r : reports) {
        const json full = verify::to_json(r);
        summary.push_back({{"claim_id", full["claim_id"]},
                           {"mode", full["mode"]},
                           {"trials", full["trials"]},
                           {"max_residual", full["max_residual"]},
                           {"tolerance", full["tolerance"]},
                           {"passed", full["passed"]}});
        details.push_back(full);
      }
      emit(out, json{{"config",
                      {{"s", s}, {"n", a.n}, {"d", a.d}, {"trials", a.trials}, {"seed", a.seed}}},
                     {"summary", summary},
                     {"reports", details},
                     {"partitions", cps.size()}});
      break;
    }
    case OutputFormat::csv:
      out << csv.str();
      break;
    case OutputFormat::human:
      write_human(out, reports);
      break;
  }

  bool failed = false;
  bool inconclusive = false;
  for (const auto& r : reports) {
    failed |= r.outcome == Outcome::fail || r.outcome == Outcome::precondition_violated;
    inconclusive |= r.outcome == Outcome::inconclusive;
  }
  if (failed) return kVerificationFailure;
  return inconclusive ? kInconclusive : kSuccess;
}

}  // namespace

int exit_code_for(const VerificationReport& r) {
  switch (r.outcome) {
    case Outcome::pass:
      return kSuccess;
    case Outcome::fail:
      return kVerificationFailure;
    case Outcome::precondition_violated:
      return kUsageError;
    case Outcome::inconclusive:
      return kInconclusive;
  }
  return kVerificationFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vector-lattice means, complete partitions and orthogonally additive polynomials",
               "latmeans"};
  app.require_subcommand(1);

  PartitionsArgs pa;
  auto* partitions_cmd = app.add_subcommand("partitions", "Complete partitions");
  partitions_cmd->require_subcommand(1);
  auto* p_check = partitions_cmd->add_subcommand("check", "Test a tuple for completeness");
  p_check->add_option("--parts", pa.parts, "Parts r1,..,rp")->required()->delimiter(',');
  p_check->add_option("--s", pa.s, "Target (defaults to the sum of the parts)");
  auto* p_list = partitions_cmd->add_subcommand("list", "Enumerate complete partitions of s");
  p_list->add_option("--s", pa.s, "Target")->required();
  p_list->add_option("--bound", pa.bound, "Largest admissible s");

  MeansArgs ma;
  auto* means_cmd = app.add_subcommand("means", "Evaluate means");
  means_cmd->require_subcommand(1);
  auto* m_eval = means_cmd->add_subcommand("eval", "Evaluate a mean on input vectors");
  m_eval->add_option("--mean", ma.mean, "rmp | gm | hm | wgm")
      ->required()
      ->check(CLI::IsMember({"rmp", "gm", "hm", "wgm"}));
  m_eval->add_option("--method", ma.method, "closed | lagrange | grid")
      ->check(CLI::IsMember({"closed", "lagrange", "grid"}));
  m_eval->add_option("--s", ma.s, "Power (rmp) or arity (gm, hm, wgm)");
  m_eval->add_option("--weights", ma.weights, "Parts r1,..,rp giving weights r_k/s")
      ->delimiter(',');
  m_eval->add_option("--m", ma.resolution, "Grid resolution")->check(CLI::PositiveNumber);
  m_eval->add_option("--inputs", ma.inputs, "JSON file with the input vectors")->required();

  PolyArgs pya;
  auto* poly_cmd = app.add_subcommand("poly", "Homogeneous polynomials");
  poly_cmd->require_subcommand(1);
  auto* py_eval = poly_cmd->add_subcommand("eval", "Evaluate P at a vector");
  py_eval->add_option("--poly", pya.poly, "Polynomial JSON file")->required();
  py_eval->add_option("--point", pya.point, "Vector JSON file")->required();
  auto* py_multi = poly_cmd->add_subcommand("multilinear", "Evaluate the symmetric s-linear map");
  py_multi->add_option("--poly", pya.poly, "Polynomial JSON file")->required();
  py_multi->add_option("--inputs", pya.inputs, "JSON file with s vectors")->required();
  auto* py_polar = poly_cmd->add_subcommand("polarize", "Polarize P as a black box");
  py_polar->add_option("--poly", pya.poly, "Polynomial JSON file")->required();
  py_polar->add_option("--inputs", pya.inputs, "JSON file with s vectors")->required();
  auto* py_oa = poly_cmd->add_subcommand("oa", "Test orthogonal additivity");
  py_oa->add_option("--poly", pya.poly, "Polynomial JSON file")->required();
  py_oa->add_option("--trials", pya.trials, "Random disjoint pairs")->check(CLI::PositiveNumber);
  py_oa->add_option("--seed", pya.seed, "Seed");
  py_oa->add_flag("--exhaustive", pya.exhaustive, "Every support bipartition");
  py_oa->add_flag("--signed", pya.sign_mixed, "Sign-mixed disjoint pairs");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Randomized identity verification");
  verify_cmd->require_subcommand(1);
  auto add_common = [&va](CLI::App* cmd) {
    cmd->add_option("--s", va.s, "Degree / arity s");
    cmd->add_option("--n", va.n, "Lattice dimension")->check(CLI::Range(1, 64));
    cmd->add_option("--d", va.d, "Codomain dimension")->check(CLI::Range(1, 16));
    cmd->add_option("--trials", va.trials, "Trials")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", va.seed, "Seed");
    cmd->add_option("--r", va.r, "Number of arguments for the root mean power")
        ->check(CLI::Range(2, 64));
  };
  std::vector<std::pair<std::string, CLI::App*>> claim_cmds;
  for (const char* name : {"rmp", "gm", "schur", "ortho", "hm", "geos", "wgm", "cross"}) {
    auto* cmd = verify_cmd->add_subcommand(name, std::string("Verify claim ") + name);
    add_common(cmd);
    cmd->add_option("--partition", va.partition, "Complete partition r1,..,rp")->delimiter(',');
    cmd->add_option("--poly", va.poly, "Polynomial JSON file (default: random diagonal)");
    claim_cmds.emplace_back(name, cmd);
  }
  auto* v_falsify = verify_cmd->add_subcommand("falsify", "Search for a converse witness");
  add_common(v_falsify);
  v_falsify->add_option("--claim", va.claim, "hm | wgm")
      ->required()
      ->check(CLI::IsMember({"hm", "wgm"}));
  v_falsify->add_option("--partition", va.partition, "Complete partition r1,..,rp")
      ->delimiter(',');
  v_falsify->add_option("--poly", va.poly, "Polynomial JSON file (default: random non-OA)");
  v_falsify->add_option("--budget", va.budget, "Identity evaluations")->check(CLI::PositiveNumber);
  v_falsify->add_option("--mixed", va.mixed_fraction, "Mixed coefficient mass of the random P")
      ->check(CLI::Range(1e-6, 1.0));
  auto* v_all = verify_cmd->add_subcommand("all", "Run every claim and print a summary");
  add_common(v_all);
  v_all->add_option("--budget", va.budget, "Falsification budget")->check(CLI::PositiveNumber);
  v_all->add_option("--format", va.format, "json | csv | human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  v_all->add_option("--csv", va.csv_path, "Also write the CSV summary to this file");
  v_all->add_option("--mixed", va.mixed_fraction, "Mixed coefficient mass of the converse P")
      ->check(CLI::Range(1e-6, 1.0));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  for (auto* cmd : {verify_cmd}) {
    for (auto* sub : cmd->get_subcommands()) {
      if (sub->count("--s") > 0) va.s_given = true;
    }
  }

  try {
    if (*p_check) return cmd_partitions_check(pa, out);
    if (*p_list) return cmd_partitions_list(pa, out);
    if (*m_eval) return cmd_means_eval(ma, out);
    if (*py_eval) return cmd_poly_eval(pya, out);
    if (*py_multi) return cmd_poly_multilinear(pya, out);
    if (*py_polar) return cmd_poly_polarize(pya, out);
    if (*py_oa) return cmd_poly_oa(pya, out);
    if (*v_falsify) return cmd_verify_falsify(va, out);
    if (*v_all) return cmd_verify_all(va, out);
    for (const auto& [name, cmd] : claim_cmds) {
      if (*cmd) {
        va.claim = name;
        return cmd_verify_claim(va, out);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  err << "error: no command given\n";
  return kUsageError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace latmeans::cli

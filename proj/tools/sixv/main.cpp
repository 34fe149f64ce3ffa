#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace sixv;
using namespace sixv::cli;

namespace {

int fail(const RunConfig& cfg, const std::string& command, const std::string& message, int code) {
  std::cerr << "sixv: " << message << '\n';
  std::string backend = cfg.backend;
  try {
    backend = cfg.resolved_backend() == Backend::rational ? "rational" : "float";
  } catch (const Error&) {
  }
  Record r{{{"command", command}}, backend, "error", message, false, std::nullopt};
  try {
    emit({r}, cfg.format == "csv" ? "csv" : "json", cfg.output);
  } catch (const std::exception&) {
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Six-vertex model with domain wall boundary conditions: partition functions, row configuration "
               "probabilities, emptiness formation probability and identity checks."};
  app.set_config("--config", "", "TOML config file with default flag values")->envname("SIXV_CONFIG");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string weights, angles, lambda, nu, eta;
  app.add_option("--weights", weights, "Rational weight triple a,b,c");
  app.add_option("--angles", angles, "Decimal angle pair lambda,eta (a = sin(lambda+eta), b = sin(lambda-eta))");
  app.add_option("--lambda", lambda, "Comma-separated decimal lambda_1..lambda_N");
  app.add_option("--nu", nu, "Comma-separated decimal nu_1..nu_N");
  app.add_option("--eta", eta, "Decimal crossing parameter for --lambda/--nu");
  app.add_option("--backend", cfg.backend, "rational, float or auto")
      ->check(CLI::IsMember({"auto", "rational", "float"}))
      ->capture_default_str();
  app.add_option("--digits", cfg.digits, "Float working precision in decimal digits (>= 30)")->capture_default_str();
  app.add_option("--qism-max", cfg.bounds.qism_max, "Largest N for the QISM oracle")->capture_default_str();
  app.add_option("--dfs-max", cfg.bounds.dfs_max, "Largest N for the ice-rule enumerator")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed for sample points")->capture_default_str();
  app.add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", cfg.output, "Output file (default stdout)");
  app.add_flag("--timing", cfg.timing, "Record runtime_ms (otherwise null)");

  PartitionArgs pa;
  auto* part = app.add_subcommand("partition", "Partition function Z_N");
  part->add_option("--N", pa.n, "Lattice size")->required();
  part->add_option("--route", pa.route, "oracle, determinant or both")->capture_default_str();

  RowProbArgs ra;
  std::string positions;
  auto* rowp = app.add_subcommand("rowprob", "Row configuration probabilities H_{N,s}");
  rowp->add_option("--N", ra.n, "Lattice size")->required();
  rowp->add_option("--s", ra.s, "Row index")->required();
  rowp->add_option("--positions", positions, "Up-arrow positions r_1,...,r_s (default: full table)");
  rowp->add_option("--route", ra.route, "formula, oracle or both")->capture_default_str();

  EfpArgs ea;
  auto* efp = app.add_subcommand("efp", "Emptiness formation probability F_N^{(r,s)}");
  efp->add_option("--N", ea.n, "Lattice size")->required();
  efp->add_option("--r", ea.r, "Column extent")->required();
  efp->add_option("--s", ea.s, "Row extent")->required();
  efp->add_option("--route", ea.routes, "Comma-separated routes from oracle,row-sum,rep1,rep2,double")
      ->capture_default_str();

  VerifyArgs va;
  std::size_t wr = 0;
  auto* ver = app.add_subcommand("verify", "Identity and cross-route verification suites");
  ver->add_option("suite", va.suite, "identity1, identity2, sum-identity, w-lemma or cross-check")->required();
  ver->add_option("--s", va.s, "Number of variables")->capture_default_str();
  ver->add_option("--trials", va.trials, "Random-point trials")->capture_default_str();
  ver->add_option("--degree", va.degree, "Truncation degree for sum-identity")->capture_default_str();
  ver->add_option("--Nmax", va.n_max, "Largest N for cross-check")->capture_default_str();
  auto* r_opt = ver->add_option("--r", wr, "Power of w_j in the w-lemma (default s+1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!weights.empty()) cfg.weights = weights;
  if (!angles.empty()) cfg.angles = angles;
  if (!lambda.empty()) cfg.lambda = lambda;
  if (!nu.empty()) cfg.nu = nu;
  if (!eta.empty()) cfg.eta = eta;
  if (!positions.empty()) ra.positions = positions;
  if (r_opt->count() > 0) va.r = wr;

  std::string command = "unknown";
  try {
    if (cfg.resolved_backend() == Backend::real) {
      if (cfg.digits < 30) throw UsageError("float backend needs --digits >= 30");
      set_working_digits(cfg.digits);
    }
    CommandResult res;
    if (part->parsed()) {
      command = "partition";
      res = cmd_partition(cfg, pa);
    } else if (rowp->parsed()) {
      command = "rowprob";
      res = cmd_rowprob(cfg, ra);
    } else if (efp->parsed()) {
      command = "efp";
      res = cmd_efp(cfg, ea);
    } else {
      command = "verify";
      res = cmd_verify(cfg, va);
    }
    emit(res.records, cfg.format, cfg.output);
    return res.exit_code;
  } catch (const UsageError& e) {
    return fail(cfg, command, e.what(), 2);
  } catch (const DomainError& e) {
    return fail(cfg, command, e.what(), 2);
  } catch (const BudgetError& e) {
    return fail(cfg, command, e.what(), 2);
  } catch (const std::exception& e) {
    return fail(cfg, command, e.what(), 1);
  }
}

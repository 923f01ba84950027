#include "superint/duality.hpp"
#include "superint/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace superint;

namespace {

std::vector<Rational> parse_list(const std::string& text, const char* flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw ConfigError(std::string(flag) + ": cannot parse '" + item + "' as p/q");
    }
  }
  if (out.empty()) throw ConfigError(std::string(flag) + ": empty list");
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write failed for " + path);
}

struct Flags {
  RunConfig config;
  std::string gamma, beta;
  std::size_t rank = 0;
  unsigned lattice = 0;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--dim", f.config.d, "dimension d")->capture_default_str();
  cmd->add_option("--degree", f.config.degree, "maximal polynomial degree n")->capture_default_str();
  cmd->add_option("--rank", f.rank, "Racah rank k (default d-1)");
  cmd->add_option("--lattice-size", f.lattice, "Racah lattice size N (default degree+1)");
  cmd->add_option("--gamma", f.gamma, "explicit gamma_1..gamma_{d+1} as p/q,...");
  cmd->add_option("--beta", f.beta, "explicit beta_0..beta_{k+1} as p/q,...");
  cmd->add_option("--samples", f.config.samples, "number of sampled parameter vectors")->capture_default_str();
  cmd->add_option("--seed", f.config.seed, "sampler seed")->capture_default_str();
  cmd->add_option("--out", f.config.out, "output file (default stdout)");
  cmd->add_option("--format", f.config.format, "json or csv")->capture_default_str();
  cmd->add_option("--jobs", f.config.jobs, "worker threads")->capture_default_str();
}

RunConfig finish(Flags& f, CLI::App* cmd) {
  RunConfig c = f.config;
  if (cmd->count("--rank")) c.rank = f.rank;
  if (cmd->count("--lattice-size")) c.lattice_size = f.lattice;
  if (!f.gamma.empty()) c.gamma = parse_list(f.gamma, "--gamma");
  if (!f.beta.empty()) c.beta = parse_list(f.beta, "--beta");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the superintegrable simplex system and its Racah duality"};
  app.require_subcommand(1);

  Flags verify_flags, transition_flags, basis_flags, racah_flags;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  add_common(verify, verify_flags);
  auto* transition = app.add_subcommand("transition", "export the transition matrix of one degree");
  add_common(transition, transition_flags);
  auto* basis = app.add_subcommand("basis", "export the Jacobi basis up to a degree");
  add_common(basis, basis_flags);
  auto* racah_tab = app.add_subcommand("racah-tab", "tabulate Racah polynomials and weights");
  add_common(racah_tab, racah_flags);
  racah_flags.config.format = "csv";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      RunConfig c = finish(verify_flags, verify);
      c.suite = suite;
      const VerificationReport rep = run_suite(c);
      emit(c.out, c.format == "csv" ? report_csv(rep) : rep.to_json().dump(2) + "\n");
      std::cerr << rep.suite() << ": " << rep.passed() << "/" << rep.cases().size() << " cases passed"
                << (rep.pass() ? "" : ", FAIL") << "\n";
      return rep.pass() ? 0 : 1;
    }
    if (transition->parsed()) {
      RunConfig c = finish(transition_flags, transition);
      c.suite = "transition";
      validate(c);
      if (c.format != "json") throw ConfigError("transition export supports --format json only");
      const SymmetryContext ctx(c.d, export_gamma(c));
      emit(c.out, transition_json(ctx, transition_direct(ctx, c.degree)).dump(2) + "\n");
      return 0;
    }
    if (basis->parsed()) {
      RunConfig c = finish(basis_flags, basis);
      c.suite = "orthogonality";
      validate(c);
      if (c.format != "json") throw ConfigError("basis export supports --format json only");
      const SymmetryContext ctx(c.d, export_gamma(c));
      emit(c.out, basis_export(ctx, c.degree).dump(2) + "\n");
      return 0;
    }
    RunConfig c = finish(racah_flags, racah_tab);
    c.suite = "racah";
    validate(c);
    const std::size_t k = c.racah_rank();
    const auto rows = racah_table(k, c.racah_lattice(), export_beta(c));
    emit(c.out, c.format == "csv" ? racah_table_csv(k, rows) : racah_table_json(rows).dump(2) + "\n");
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

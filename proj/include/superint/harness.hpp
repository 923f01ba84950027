#pragma once

#include "superint/racah.hpp"
#include "superint/report.hpp"
#include "superint/symmetry.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace superint {

/// Invalid run configuration; the CLI maps it to exit status 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Seeded generator of admissible parameters. Values are a/b with
/// 1 <= b <= 16 and |a| <= 32; every rejected draw is logged.
class ParameterSampler {
 public:
  explicit ParameterSampler(std::uint64_t seed) : rng_(seed) {}

  /// γ_1..γ_{d+1} with γ_i > -1 and γ_i != ±1.
  GammaVector gamma(int d);
  /// β_0 > -1, 0 < β_1 < ... < β_{k+1}, with 2β_j non-integral for j >= 1.
  BetaVector beta(std::size_t k);

  const std::vector<std::string>& rejections() const { return log_; }

 private:
  Rational draw();
  Rational draw_positive();

  std::mt19937_64 rng_;
  std::vector<std::string> log_;
};

struct RunConfig {
  std::string suite = "all";
  int d = 3;
  unsigned degree = 2;
  std::optional<std::size_t> rank;
  std::optional<unsigned> lattice_size;
  std::optional<std::vector<Rational>> gamma;
  std::optional<std::vector<Rational>> beta;
  unsigned samples = 3;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  unsigned jobs = 1;

  /// Racah rank k; defaults to d - 1.
  std::size_t racah_rank() const;
  /// Racah lattice size N; defaults to degree + 1.
  unsigned racah_lattice() const;
};

/// kohno-drinfeld, fourth-order, gaudin, spectral, orthogonality, selfadjoint,
/// racah, transition, thm53, thm55, duality, all.
const std::vector<std::string>& suite_names();

/// Throws ConfigError when the configuration cannot be run.
void validate(const RunConfig& config);

/// Runs the selected suite(s) over the explicit or sampled parameters.
/// Deterministic for a fixed configuration regardless of the worker count.
VerificationReport run_suite(const RunConfig& config);

/// The γ used by single-context exports: explicit, or the first sample.
GammaVector export_gamma(const RunConfig& config);
BetaVector export_beta(const RunConfig& config);

/// [{nu, poly, norm_sq}] for |ν| <= n.
nlohmann::json basis_export(const SymmetryContext& ctx, unsigned n);

/// One row per (lattice point, index): z_1..z_{k+1}, ν_1..ν_k, R, weight.
struct RacahRow {
  LatticePoint z;
  RacahIndex nu;
  Rational value;
  Rational weight;
};
std::vector<RacahRow> racah_table(std::size_t k, unsigned N, const BetaVector& beta);
std::string racah_table_csv(std::size_t k, const std::vector<RacahRow>& rows);
nlohmann::json racah_table_json(const std::vector<RacahRow>& rows);

/// suite,case,pass,witness
std::string report_csv(const VerificationReport& report);

}  // namespace superint

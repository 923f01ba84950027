#include "superint/harness.hpp"

#include "superint/duality.hpp"
#include "superint/simplex.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

namespace superint {

Rational ParameterSampler::draw() {
  std::uniform_int_distribution<int> num(-32, 32), den(1, 16);
  const int a = num(rng_);
  return Rational(a) / Rational(den(rng_));
}

Rational ParameterSampler::draw_positive() {
  std::uniform_int_distribution<int> num(1, 32), den(1, 16);
  const int a = num(rng_);
  return Rational(a) / Rational(den(rng_));
}

GammaVector ParameterSampler::gamma(int d) {
  std::vector<Rational> g;
  for (int i = 1; i <= d + 1; ++i) {
    for (;;) {
      const Rational v = draw();
      std::string why;
      if (v <= Rational(-1)) why = "not > -1";
      else if (v == Rational(1)) why = "equals 1";
      if (why.empty()) {
        g.push_back(v);
        break;
      }
      log_.push_back("rejected gamma_" + std::to_string(i) + " = " + v.str() + " (" + why + ")");
    }
  }
  return GammaVector(std::move(g));
}

BetaVector ParameterSampler::beta(std::size_t k) {
  std::vector<Rational> b;
  for (;;) {
    const Rational v = draw();
    if (v > Rational(-1)) {
      b.push_back(v);
      break;
    }
    log_.push_back("rejected beta_0 = " + v.str() + " (not > -1)");
  }
  for (std::size_t j = 1; j <= k + 1; ++j) {
    const Rational floor = j == 1 ? std::max(Rational(0), b[0]) : b.back();
    for (;;) {
      const Rational v = floor + draw_positive();
      if (!(v + v).is_integer()) {
        b.push_back(v);
        break;
      }
      log_.push_back("rejected beta_" + std::to_string(j) + " = " + v.str() + " (2 beta integral)");
    }
  }
  return BetaVector(std::move(b));
}

std::size_t RunConfig::racah_rank() const { return rank.value_or(static_cast<std::size_t>(std::max(d - 1, 1))); }

unsigned RunConfig::racah_lattice() const { return lattice_size.value_or(degree + 1); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"kohno-drinfeld", "fourth-order", "gaudin",  "spectral",
                                                 "orthogonality",  "selfadjoint",  "racah",   "transition",
                                                 "thm53",          "thm55",        "duality", "all"};
  return names;
}

namespace {

bool runs(const RunConfig& c, const std::string& suite) { return c.suite == "all" || c.suite == suite; }

std::vector<std::array<int, 4>> fourth_order_assignments(int d) {
  std::vector<std::array<int, 4>> out;
  if (d == 3) {
    std::array<int, 4> p{1, 2, 3, 4};
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  } else if (d >= 4) {
    out = {{1, 2, 3, 4}, {2, 5, 1, 3}, {1, 5, 2, 4}, {5, 3, 4, 1}, {3, 4, 5, 2}, {4, 1, 3, 5}};
  }
  return out;
}

using Task = std::function<VerificationReport()>;

VerificationReport guarded(const std::string& suite, const nlohmann::json& params, const Task& task) {
  try {
    return task();
  } catch (const std::exception& e) {
    VerificationReport r(suite);
    r.record("suite aborted", params, false, e.what());
    return r;
  }
}

std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<VerificationReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
  };
  const unsigned n = std::min<unsigned>(std::max(jobs, 1u), static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  return out;
}

}  // namespace

void validate(const RunConfig& c) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), c.suite) == names.end()) throw ConfigError("unknown suite: " + c.suite);
  if (c.d < 2 || c.d > 8) throw ConfigError("--dim must lie in 2..8");
  if (c.suite == "fourth-order" && c.d < 3) throw ConfigError("fourth-order needs --dim >= 3");
  if (c.format != "json" && c.format != "csv") throw ConfigError("--format must be json or csv");
  if (c.jobs < 1) throw ConfigError("--jobs must be positive");
  if (!c.gamma && c.samples < 1) throw ConfigError("--samples must be positive");
  if (c.gamma) {
    if (c.gamma->size() != static_cast<std::size_t>(c.d + 1))
      throw ConfigError("--gamma needs d+1 = " + std::to_string(c.d + 1) + " values");
    for (const auto& g : *c.gamma) {
      if (g <= Rational(-1)) throw ConfigError("--gamma entries must exceed -1, got " + g.str());
      if (runs(c, "fourth-order") && g == Rational(1))
        throw ConfigError("fourth-order needs gamma != 1, got " + g.str());
    }
  }
  const std::size_t k = c.racah_rank();
  if (k < 1 || k > 4) throw ConfigError("--rank must lie in 1..4");
  if (c.racah_lattice() > 12) throw ConfigError("--lattice-size must be at most 12");
  if (c.beta && c.beta->size() != k + 2)
    throw ConfigError("--beta needs rank+2 = " + std::to_string(k + 2) + " values");
}

VerificationReport run_suite(const RunConfig& c) {
  validate(c);
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report(c.suite);

  ParameterSampler sampler(c.seed);
  std::vector<GammaVector> gammas;
  std::vector<BetaVector> betas;
  if (c.gamma) {
    gammas.emplace_back(*c.gamma);
  } else {
    for (unsigned s = 0; s < c.samples; ++s) gammas.push_back(sampler.gamma(c.d));
  }
  const std::size_t k = c.racah_rank();
  const unsigned N = c.racah_lattice();
  if (c.beta) {
    betas.emplace_back(*c.beta);
  } else {
    for (unsigned s = 0; s < c.samples; ++s) betas.push_back(sampler.beta(k));
  }
  for (const auto& r : sampler.rejections()) report.add_note("sampler: " + r);

  std::vector<Task> tasks;
  auto add = [&](const std::string& suite, const nlohmann::json& params, Task t) {
    tasks.push_back([suite, params, t] { return guarded(suite, params, t); });
  };
  for (const auto& g : gammas) {
    const SymmetryContext ctx(c.d, g);
    const auto params = context_params(ctx);
    const unsigned n = c.degree;
    if (runs(c, "kohno-drinfeld")) add("kohno-drinfeld", params, [ctx] { return check_kohno_drinfeld(ctx); });
    if (runs(c, "fourth-order")) {
      const auto assignments = fourth_order_assignments(c.d);
      if (assignments.empty()) report.add_note("fourth-order skipped: needs d >= 3");
      for (const auto& a : assignments)
        add("fourth-order", params, [ctx, a] { return check_fourth_order(ctx, a[0], a[1], a[2], a[3]); });
    }
    if (runs(c, "gaudin")) add("gaudin", params, [ctx] { return check_gaudin_commutativity(ctx); });
    if (runs(c, "spectral")) add("spectral", params, [ctx, n] { return check_spectral(ctx, n); });
    if (runs(c, "orthogonality")) add("orthogonality", params, [ctx, n] { return check_orthogonality(ctx, n); });
    if (runs(c, "selfadjoint")) add("selfadjoint", params, [ctx, n] { return check_selfadjoint(ctx, n); });
    if (runs(c, "transition")) add("transition", params, [ctx, n] { return check_transition(ctx, n); });
    if (runs(c, "thm53")) add("thm53", params, [ctx, n] { return check_prop51_thm53(ctx, n); });
    if (runs(c, "thm55")) add("thm55", params, [ctx] { return check_thm55(ctx); });
    if (runs(c, "duality")) add("duality", params, [ctx, n] { return check_duality(ctx, n); });
  }
  if (runs(c, "racah"))
    for (const auto& b : betas) {
      const nlohmann::json params = {{"k", k}, {"N", N}, {"beta", rationals_json(b.values())}};
      add("racah", params, [k, N, b] { return check_racah_suite(k, N, b); });
    }

  for (const auto& r : run_tasks(tasks, c.jobs)) report.merge(r);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

GammaVector export_gamma(const RunConfig& c) {
  if (c.gamma) return GammaVector(*c.gamma);
  ParameterSampler sampler(c.seed);
  return sampler.gamma(c.d);
}

BetaVector export_beta(const RunConfig& c) {
  if (c.beta) return BetaVector(*c.beta);
  ParameterSampler sampler(c.seed);
  return sampler.beta(c.racah_rank());
}

nlohmann::json basis_export(const SymmetryContext& ctx, unsigned n) {
  require_dirichlet_parameters(ctx);
  auto arr = nlohmann::json::array();
  for (const auto& nu : jacobi_indices_up_to_degree(ctx.vars(), n))
    arr.push_back({{"nu", index_json(nu)},
                   {"poly", jacobi_basis(ctx, nu).str()},
                   {"norm_sq", jacobi_norm_sq(ctx, nu).str()}});
  return arr;
}

std::vector<RacahRow> racah_table(std::size_t k, unsigned N, const BetaVector& beta) {
  if (beta.size() != k + 2) throw std::invalid_argument("racah_table: beta needs k+2 entries");
  std::vector<RacahRow> rows;
  const auto indices = racah_indices(k, N);
  for (const auto& z : lattice_points(k, N)) {
    const Rational w = racah_weight(z, beta);
    for (const auto& nu : indices) rows.push_back({z, nu, racah_value(k, nu, z, beta), w});
  }
  return rows;
}

std::string racah_table_csv(std::size_t k, const std::vector<RacahRow>& rows) {
  std::ostringstream os;
  for (std::size_t i = 1; i <= k + 1; ++i) os << 'z' << i << ',';
  for (std::size_t i = 1; i <= k; ++i) os << "nu" << i << ',';
  os << "R,weight\n";
  for (const auto& r : rows) {
    for (const auto& z : r.z) os << z << ',';
    for (unsigned v : r.nu) os << v << ',';
    os << r.value << ',' << r.weight << '\n';
  }
  return os.str();
}

nlohmann::json racah_table_json(const std::vector<RacahRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"z", rationals_json(r.z)}, {"nu", r.nu}, {"R", r.value.str()}, {"weight", r.weight.str()}});
  return arr;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

}  // namespace

std::string report_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "suite,case,pass,witness\n";
  for (const auto& c : report.cases())
    os << csv_field(c.suite) << ',' << csv_field(c.id) << ',' << (c.pass ? "true" : "false") << ','
       << csv_field(c.witness.value_or("")) << '\n';
  return os.str();
}

}  // namespace superint

#include "superint/racah.hpp"

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace superint {

BetaVector::BetaVector(std::vector<Rational> values)
    : values_(std::move(values)), tangent_(generic_tangent(values_.size())) {}

BetaVector::BetaVector(std::vector<Rational> values, std::vector<Rational> tangent)
    : values_(std::move(values)), tangent_(std::move(tangent)) {
  if (tangent_.size() != values_.size()) throw std::invalid_argument("BetaVector: tangent length mismatch");
}

std::vector<Rational> BetaVector::generic_tangent(std::size_t n) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  std::vector<Rational> t;
  for (std::size_t i = 0; i < n; ++i) t.emplace_back(1, primes[i % 12] * static_cast<int>(1 + i / 12));
  return t;
}

namespace racah_detail {

std::string factor_label(const std::string& name, std::size_t i, int bit, std::size_t j, const ShiftVector& nu) {
  std::ostringstream os;
  os << name << '_' << i << '^' << bit << " in C_{" << j << ",(";
  for (std::size_t m = 0; m < nu.size(); ++m) os << (m ? "," : "") << nu[m];
  os << ")}";
  return os.str();
}

std::vector<EpsPoly> lift(const std::vector<Rational>& values) {
  return std::vector<EpsPoly>(values.begin(), values.end());
}

std::vector<EpsPoly> lift(const BetaVector& beta) {
  std::vector<EpsPoly> out;
  for (std::size_t i = 0; i < beta.size(); ++i) out.push_back(EpsPoly::linear(beta[i], beta.tangent()[i]));
  return out;
}

}  // namespace racah_detail

using namespace racah_detail;

namespace {

std::string point_str(const LatticePoint& z) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < z.size(); ++i) os << (i ? "," : "") << z[i];
  os << ')';
  return os.str();
}

template <class V>
std::string vec_str(const V& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

void check_beta_size(const BetaVector& beta, std::size_t needed, const char* where) {
  if (beta.size() < needed)
    throw std::invalid_argument(std::string(where) + ": need beta_0..beta_" + std::to_string(needed - 1));
}

std::vector<int> integer_point(const LatticePoint& z) {
  std::vector<int> zi;
  for (const auto& v : z) {
    if (!v.is_integer()) throw std::invalid_argument("racah_weight: lattice point must be integral");
    zi.push_back(static_cast<int>(v.to_int()));
  }
  return zi;
}

}  // namespace

Rational w_vars(const LatticePoint& z, const BetaVector& beta, std::size_t s) {
  if (s < 1) throw std::out_of_range("w_vars: s must be >= 1");
  const Rational& zs = z.at(s - 1);
  return zs * (zs + beta[s]);
}

Rational B_coeff(std::size_t i, int j, int k, const LatticePoint& z, const BetaVector& beta) {
  return B(i, j, k, z, beta.values());
}

Rational b_coeff(std::size_t i, int bit, const LatticePoint& z, const BetaVector& beta) {
  if (i < 1) throw std::out_of_range("b_coeff: i must be >= 1");
  return b(i, bit, z, beta.values());
}

Rational C_coeff(std::size_t j, const ShiftVector& nu, const LatticePoint& z, const BetaVector& beta) {
  if (nu.size() != j) throw std::invalid_argument("C_coeff: shift length must equal j");
  if (z.size() < j + 1) throw std::invalid_argument("C_coeff: need z_1..z_{j+1}");
  check_beta_size(beta, j + 2, "C_coeff");
  for (int v : nu)
    if (v < -1 || v > 1) throw std::invalid_argument("C_coeff: shift entries must be -1, 0 or 1");
  const auto exact = C(j, nu, z, beta.values());
  try {
    return resolve_fraction(exact, [&] { return C(j, nu, lift(z), lift(beta)); });
  } catch (const DegeneracyError& e) {
    throw DegeneracyError(e.detail() + " at z = " + point_str(z));
  }
}

Rational L_constant(std::size_t j, const LatticePoint& z, const BetaVector& beta) {
  const Rational& zj1 = z.at(j);
  return zj1 * (zj1 + beta[j + 1]) + (beta[0] + Rational(1)) * (beta[j + 1] - Rational(1)) / Rational(2);
}

std::vector<ShiftTerm> L_terms(std::size_t j, const LatticePoint& z, const BetaVector& beta) {
  std::vector<ShiftTerm> out;
  ShiftVector nu(j, -1);
  while (true) {
    out.push_back({nu, C_coeff(j, nu, z, beta)});
    std::size_t m = j;
    while (m > 0 && nu[m - 1] == 1) nu[--m] = -1;
    if (m == 0) break;
    ++nu[m - 1];
  }
  return out;
}

Rational apply_L(std::size_t j, const LatticeFunction& f, const LatticePoint& z, const BetaVector& beta) {
  Rational s = -L_constant(j, z, beta) * f(z);
  LatticePoint shifted = z;
  for (const auto& term : L_terms(j, z, beta)) {
    if (term.coeff.is_zero()) continue;
    for (std::size_t m = 0; m < j; ++m) shifted[m] = z[m] + Rational(term.shift[m]);
    s += term.coeff * f(shifted);
  }
  return s;
}

Rational lambda_eig(std::size_t j, const Rational& s, const BetaVector& beta) {
  return -s * (s + beta[j + 1] - beta[0] - Rational(1));
}

Rational racah_value(std::size_t k, const RacahIndex& nu, const LatticePoint& z, const BetaVector& beta) {
  if (nu.size() != k) throw std::invalid_argument("racah_value: index length must equal k");
  if (z.size() < k + 1) throw std::invalid_argument("racah_value: need z_1..z_{k+1}");
  check_beta_size(beta, k + 2, "racah_value");
  return racah(k, nu, z, beta.values());
}

Rational racah_weight(const LatticePoint& z, const BetaVector& beta) {
  check_beta_size(beta, z.size() + 1, "racah_weight");
  const auto zi = integer_point(z);
  return resolve_fraction(weight(zi, beta.values()), [&] { return weight(zi, lift(beta)); });
}

Rational racah_norm_sq(std::size_t k, const RacahIndex& nu, unsigned N, const BetaVector& beta) {
  if (nu.size() != k) throw std::invalid_argument("racah_norm_sq: index length must equal k");
  check_beta_size(beta, k + 2, "racah_norm_sq");
  return resolve_fraction(norm_sq(k, nu, N, beta.values()), [&] { return norm_sq(k, nu, N, lift(beta)); });
}

std::vector<LatticePoint> lattice_points(std::size_t k, unsigned N) {
  std::vector<LatticePoint> out;
  std::vector<unsigned> z(k, 0);
  while (true) {
    LatticePoint p;
    for (unsigned v : z) p.emplace_back(static_cast<int>(v));
    p.emplace_back(static_cast<int>(N));
    out.push_back(std::move(p));
    // advance the last coordinate that can grow, resetting the ones after it
    std::size_t m = k;
    while (m > 0 && z[m - 1] == N) --m;
    if (m == 0) break;
    ++z[m - 1];
    for (std::size_t i = m; i < k; ++i) z[i] = z[m - 1];
  }
  return out;
}

std::vector<RacahIndex> racah_indices(std::size_t k, unsigned N) {
  std::vector<RacahIndex> out;
  for (unsigned n = 0; n <= N; ++n) {
    RacahIndex nu(k, 0);
    // graded-lex within degree n: first entry largest first
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
      if (pos + 1 == k) {
        nu[pos] = left;
        out.push_back(nu);
        return;
      }
      for (unsigned v = left + 1; v-- > 0;) {
        nu[pos] = v;
        rec(pos + 1, left - v);
      }
    };
    if (k == 0) {
      if (n == 0) out.push_back(nu);
    } else {
      rec(0, n);
    }
  }
  return out;
}

namespace {

unsigned head_sum(const RacahIndex& nu, std::size_t j) {
  unsigned s = 0;
  for (std::size_t i = 0; i < j && i < nu.size(); ++i) s += nu[i];
  return s;
}

nlohmann::json suite_params(std::size_t k, unsigned N, const BetaVector& beta) {
  return {{"k", k}, {"N", N}, {"beta", rationals_json(beta.values())}};
}

// Values of a lattice function on z + {-1,0,1}^k, memoized by point.
class PointCache {
 public:
  explicit PointCache(LatticeFunction f) : f_(std::move(f)) {}
  Rational operator()(const LatticePoint& z) {
    const std::string key = point_str(z);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Rational v = f_(z);
    cache_.emplace(key, v);
    return v;
  }

 private:
  LatticeFunction f_;
  std::map<std::string, Rational> cache_;
};

void check_eigen(VerificationReport& rep, std::size_t k, unsigned N, const BetaVector& beta) {
  const auto points = lattice_points(k, N);
  // L_j coefficients per lattice point, shared by all ν
  std::vector<std::vector<std::vector<ShiftTerm>>> terms(points.size());
  std::vector<std::string> term_errors(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    try {
      for (std::size_t j = 1; j <= k; ++j) terms[p].push_back(L_terms(j, points[p], beta));
    } catch (const DegeneracyError& e) {
      term_errors[p] = e.what();
    }
  }
  for (const auto& nu : racah_indices(k, N)) {
    PointCache R([&](const LatticePoint& z) { return racah_value(k, nu, z, beta); });
    for (std::size_t j = 1; j <= k; ++j) {
      const Rational lam = lambda_eig(j, Rational(static_cast<int>(head_sum(nu, j))), beta);
      std::string witness;
      for (std::size_t p = 0; p < points.size() && witness.empty(); ++p) {
        const auto& z = points[p];
        if (!term_errors[p].empty()) {
          witness = term_errors[p];
          break;
        }
        Rational lhs = -L_constant(j, z, beta) * R(z);
        LatticePoint shifted = z;
        for (const auto& t : terms[p][j - 1]) {
          if (t.coeff.is_zero()) continue;
          for (std::size_t m = 0; m < j; ++m) shifted[m] = z[m] + Rational(t.shift[m]);
          lhs += t.coeff * R(shifted);
        }
        const Rational rhs = lam * R(z);
        if (lhs != rhs) witness = "at z = " + point_str(z) + ": L R = " + lhs.str() + ", lambda R = " + rhs.str();
      }
      auto params = suite_params(k, N, beta);
      params["nu"] = nu;
      params["j"] = j;
      params["lambda"] = lam.str();
      rep.record("eigen L" + std::to_string(j) + " R" + vec_str(nu), params, witness.empty(), witness);
    }
  }
}

void check_commutativity(VerificationReport& rep, std::size_t k, unsigned N, const BetaVector& beta) {
  if (k < 2) return;
  std::mt19937_64 rng(0xc0ffee + k * 131 + N);
  std::uniform_int_distribution<int> num(1, 60), den(2, 13);
  const std::size_t kPoints = 20;
  std::vector<LatticePoint> pts;
  // b denominators at z and its unit shifts are products of 2z_m + β_m + δ, |δ| <= 3
  auto off_poles = [&](const LatticePoint& z) {
    for (std::size_t m = 1; m <= k; ++m)
      for (int d = -3; d <= 3; ++d)
        if ((z[m - 1] + z[m - 1] + beta[m] + Rational(d)).is_zero()) return false;
    return true;
  };
  while (pts.size() < kPoints) {
    LatticePoint z;
    for (std::size_t i = 0; i <= k; ++i) z.emplace_back(num(rng), den(rng));
    if (off_poles(z)) pts.push_back(std::move(z));
  }
  // exponent vectors of the monomials w^e with |e| <= N
  const auto exps = racah_indices(k, N);
  std::map<std::string, std::vector<std::vector<ShiftTerm>>> coeff_cache;
  auto coeffs_at = [&](const LatticePoint& z) -> const std::vector<std::vector<ShiftTerm>>& {
    const std::string key = point_str(z);
    auto it = coeff_cache.find(key);
    if (it == coeff_cache.end()) {
      std::vector<std::vector<ShiftTerm>> all;
      for (std::size_t j = 1; j <= k; ++j) all.push_back(L_terms(j, z, beta));
      it = coeff_cache.emplace(key, std::move(all)).first;
    }
    return it->second;
  };
  auto apply_cached = [&](std::size_t j, const std::function<Rational(const LatticePoint&)>& f,
                          const LatticePoint& z) {
    Rational s = -L_constant(j, z, beta) * f(z);
    LatticePoint shifted = z;
    for (const auto& t : coeffs_at(z)[j - 1]) {
      if (t.coeff.is_zero()) continue;
      for (std::size_t m = 0; m < j; ++m) shifted[m] = z[m] + Rational(t.shift[m]);
      s += t.coeff * f(shifted);
    }
    return s;
  };

  for (std::size_t j = 1; j <= k; ++j)
    for (std::size_t l = j + 1; l <= k; ++l) {
      std::string witness;
      try {
        for (const auto& e : exps) {
          auto f = [&](const LatticePoint& z) {
            Rational v(1);
            for (std::size_t s = 1; s <= k; ++s) v *= pow(w_vars(z, beta, s), static_cast<int>(e[s - 1]));
            return v;
          };
          auto Lj_f = [&](const LatticePoint& z) { return apply_cached(j, f, z); };
          auto Ll_f = [&](const LatticePoint& z) { return apply_cached(l, f, z); };
          for (const auto& z : pts) {
            const Rational a = apply_cached(j, Ll_f, z), b2 = apply_cached(l, Lj_f, z);
            if (a != b2) {
              witness = "w^" + vec_str(e) + " at z = " + point_str(z) + ": L" + std::to_string(j) + " L" +
                        std::to_string(l) + " f = " + a.str() + " but L" + std::to_string(l) + " L" +
                        std::to_string(j) + " f = " + b2.str();
              break;
            }
          }
          if (!witness.empty()) break;
        }
      } catch (const DegeneracyError& err) {
        witness = err.what();
      }
      auto params = suite_params(k, N, beta);
      params["points"] = kPoints;
      params["monomials"] = exps.size();
      rep.record("commute L" + std::to_string(j) + " L" + std::to_string(l), params, witness.empty(), witness);
    }
}

void check_orthogonal(VerificationReport& rep, std::size_t k, unsigned N, const BetaVector& beta) {
  const auto points = lattice_points(k, N);
  const auto indices = racah_indices(k, N);
  std::vector<Rational> rho;
  std::string rho_error;
  try {
    for (const auto& z : points) rho.push_back(racah_weight(z, beta));
  } catch (const DegeneracyError& e) {
    rho_error = e.what();
  }
  if (!rho_error.empty()) {
    rep.record("weight", suite_params(k, N, beta), false, rho_error);
    return;
  }
  std::string nonpositive;
  for (std::size_t p = 0; p < points.size(); ++p)
    if (rho[p] <= Rational(0)) nonpositive += "rho" + point_str(points[p]) + " = " + rho[p].str() + "; ";
  rep.record("weight positivity", suite_params(k, N, beta), nonpositive.empty(), nonpositive);

  std::vector<std::vector<Rational>> values;
  for (const auto& nu : indices) {
    std::vector<Rational> row;
    for (const auto& z : points) row.push_back(racah_value(k, nu, z, beta));
    values.push_back(std::move(row));
  }
  for (std::size_t a = 0; a < indices.size(); ++a) {
    auto params = suite_params(k, N, beta);
    params["nu"] = indices[a];
    std::string bad;
    for (std::size_t b2 = a; b2 < indices.size(); ++b2) {
      Rational s(0);
      for (std::size_t p = 0; p < points.size(); ++p) s += rho[p] * values[a][p] * values[b2][p];
      if (a == b2) {
        Rational closed;
        try {
          closed = racah_norm_sq(k, indices[a], N, beta);
        } catch (const DegeneracyError& e) {
          bad += std::string(e.what()) + "; ";
          continue;
        }
        params["norm_sq"] = closed.str();
        if (s != closed) bad += "lattice sum " + s.str() + " vs closed form " + closed.str() + "; ";
      } else if (!s.is_zero()) {
        bad += "<R" + vec_str(indices[a]) + ", R" + vec_str(indices[b2]) + "> = " + s.str() + "; ";
      }
    }
    rep.record("orthogonality row R" + vec_str(indices[a]), params, bad.empty(), bad);
  }
}

}  // namespace

VerificationReport check_racah_suite(std::size_t k, unsigned N, const BetaVector& beta) {
  VerificationReport rep("racah");
  if (k < 1) throw std::invalid_argument("check_racah_suite: k must be >= 1");
  check_beta_size(beta, k + 2, "check_racah_suite");
  rep.add_note("4F3 numerator parameter |nu_{j-1}| - x_j is read as |nu_{j-1}| - z_j");

  const std::size_t expected_terms = [&] {
    std::size_t t = 1;
    for (std::size_t i = 0; i < k; ++i) t *= 3;
    return t;
  }();
  LatticePoint probe;
  for (std::size_t i = 0; i <= k; ++i) probe.emplace_back(static_cast<int>(2 * i + 3), 7);
  const std::size_t count = L_terms(k, probe, beta).size();
  auto params = suite_params(k, N, beta);
  params["terms"] = count;
  rep.record("L" + std::to_string(k) + " shift terms = " + std::to_string(expected_terms), params,
             count == expected_terms, "enumerated " + std::to_string(count));
  rep.add_note("L" + std::to_string(k) + " enumerates " + std::to_string(count) + " shift terms");

  check_eigen(rep, k, N, beta);
  check_commutativity(rep, k, N, beta);
  check_orthogonal(rep, k, N, beta);
  return rep;
}

}  // namespace superint

#pragma once

#include "superint/eps_poly.hpp"
#include "superint/pochhammer.hpp"
#include "superint/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace superint {

/// Parameters β_0, ..., β_{k+1}, indexed from 0.
///
/// The tangent is the direction used when an evaluation hits a vanishing
/// denominator: the quantity is recomputed at β + ε·tangent and the limit
/// ε → 0 is taken. Parameter vectors derived from γ carry the image of a
/// γ-direction so that limits agree with the γ-continuous quantities.
class BetaVector {
 public:
  BetaVector() = default;
  explicit BetaVector(std::vector<Rational> values);
  BetaVector(std::vector<Rational> values, std::vector<Rational> tangent);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_.at(i); }
  const std::vector<Rational>& values() const { return values_; }
  const std::vector<Rational>& tangent() const { return tangent_; }

  /// A default direction with distinct nonzero entries.
  static std::vector<Rational> generic_tangent(std::size_t n);

 private:
  std::vector<Rational> values_;
  std::vector<Rational> tangent_;
};

/// z_1, ..., z_m stored 0-based: point[i] is z_{i+1}. z_0 = 0 by convention.
using LatticePoint = std::vector<Rational>;
/// ν ∈ {-1, 0, 1}^j.
using ShiftVector = std::vector<int>;
/// Racah polynomial index ν ∈ ℕ_0^k.
using RacahIndex = std::vector<unsigned>;

/// w_s = z_s(z_s + β_s).
Rational w_vars(const LatticePoint& z, const BetaVector& beta, std::size_t s);

/// B_i^{j,k}, i >= 0, (j,k) ∈ {0,1}^2.
Rational B_coeff(std::size_t i, int j, int k, const LatticePoint& z, const BetaVector& beta);
/// b_i^{bit}, i >= 1.
Rational b_coeff(std::size_t i, int bit, const LatticePoint& z, const BetaVector& beta);

/// C_{j,ν}(z). Mixed-sign ν evaluate the nonnegative formula for |ν| at the
/// point reflected by z_m -> -z_m - β_m on the negative coordinates.
Rational C_coeff(std::size_t j, const ShiftVector& nu, const LatticePoint& z, const BetaVector& beta);

struct ShiftTerm {
  ShiftVector shift;
  Rational coeff;
};

/// The 3^j shift terms of L_j at z, in lexicographic order of the shift.
std::vector<ShiftTerm> L_terms(std::size_t j, const LatticePoint& z, const BetaVector& beta);
/// z_{j+1}(z_{j+1} + β_{j+1}) + (β_0 + 1)(β_{j+1} - 1)/2, subtracted in L_j.
Rational L_constant(std::size_t j, const LatticePoint& z, const BetaVector& beta);

using LatticeFunction = std::function<Rational(const LatticePoint&)>;

/// (L_j f)(z).
Rational apply_L(std::size_t j, const LatticeFunction& f, const LatticePoint& z, const BetaVector& beta);

/// λ_j(s; β) = -s(s + β_{j+1} - β_0 - 1).
Rational lambda_eig(std::size_t j, const Rational& s, const BetaVector& beta);

/// R_k(ν; z; β) as the product of terminating ₄F₃ factors times their
/// Pochhammer prefactors. The prefactor cancels every ₄F₃ denominator, so the
/// evaluation never divides by a parameter-dependent quantity.
Rational racah_value(std::size_t k, const RacahIndex& nu, const LatticePoint& z, const BetaVector& beta);

/// ρ_k(z; β) for z ∈ V_{k+1,N}.
Rational racah_weight(const LatticePoint& z, const BetaVector& beta);
/// Closed-form ||R_k(ν; ·; β)||² on V_{k+1,N}.
Rational racah_norm_sq(std::size_t k, const RacahIndex& nu, unsigned N, const BetaVector& beta);

/// V_{k+1,N} = {z ∈ ℕ_0^{k+1} : 0 <= z_1 <= ... <= z_k <= z_{k+1} = N}.
std::vector<LatticePoint> lattice_points(std::size_t k, unsigned N);
/// All ν ∈ ℕ_0^k with |ν| <= N, graded-lex.
std::vector<RacahIndex> racah_indices(std::size_t k, unsigned N);

/// Eigen-equations on V_{k+1,N}, commutativity of L_1..L_k on monomials in
/// w_1..w_k at generic points, orthogonality with closed-form norms, weight
/// positivity, and the shift-term count of L_k.
VerificationReport check_racah_suite(std::size_t k, unsigned N, const BetaVector& beta);

/// The generic fractions behind the public evaluators, exposed so that
/// callers can combine them before taking a limit.
namespace racah_detail {

template <class F>
F zc(const std::vector<F>& z, std::size_t i) {
  return i == 0 ? F(0) : z.at(i - 1);
}

template <class F>
F B(std::size_t i, int j, int k, const std::vector<F>& z, const std::vector<F>& b) {
  const F zi = zc(z, i), zi1 = zc(z, i + 1);
  const F& bi = b.at(i);
  const F& bi1 = b.at(i + 1);
  if (j == 0 && k == 0) {
    F half = (bi + F(1)) * (bi1 - F(1));
    half /= Rational(2);
    return zi * (zi + bi) + zi1 * (zi1 + bi1) + half;
  }
  if (j == 0 && k == 1) return (zi1 + zi + bi1) * (zi1 - zi + bi1 - bi);
  if (j == 1 && k == 0) return (zi1 - zi) * (zi1 + zi + bi1);
  return (zi1 + zi + bi1) * (zi1 + zi + bi1 + F(1));
}

template <class F>
F b(std::size_t i, int bit, const std::vector<F>& z, const std::vector<F>& beta) {
  const F two_z = zc(z, i) + zc(z, i);
  const F& bi = beta.at(i);
  if (bit == 0) {
    F r = (two_z + bi + F(1)) * (two_z + bi - F(1));
    r /= Rational(2);
    return r;
  }
  return (two_z + bi + F(1)) * (two_z + bi);
}

std::string factor_label(const std::string& name, std::size_t i, int bit, std::size_t j, const ShiftVector& nu);

template <class F>
Fraction<F> C(std::size_t j, const ShiftVector& nu, std::vector<F> z, const std::vector<F>& beta) {
  std::vector<int> abs_nu(j + 2, 0);
  for (std::size_t m = 1; m <= j; ++m) {
    const int v = nu.at(m - 1);
    abs_nu[m] = v < 0 ? -v : v;
    if (v < 0) z.at(m - 1) = -z.at(m - 1) - beta.at(m);
  }
  Fraction<F> r;
  for (std::size_t m = 0; m <= j; ++m) r.mul(B(m, abs_nu[m], abs_nu[m + 1], z, beta));
  for (std::size_t m = 1; m <= j; ++m) r.div(b(m, abs_nu[m], z, beta), factor_label("b", m, abs_nu[m], j, nu));
  return r;
}

/// ρ_k at an integer lattice point; the coordinates only enter as Pochhammer lengths.
template <class F>
Fraction<F> weight(const std::vector<int>& zi, const std::vector<F>& beta) {
  const std::size_t k = zi.size() - 1;
  auto zint = [&](std::size_t i) { return i == 0 ? 0 : zi[i - 1]; };
  Fraction<F> r;
  for (std::size_t j = 0; j <= k; ++j) {
    const int diff = zint(j + 1) - zint(j), sum = zint(j + 1) + zint(j);
    if (diff < 0) throw std::invalid_argument("racah_weight: lattice point is not weakly increasing");
    r.mul(rising(beta.at(j + 1) - beta.at(j), static_cast<unsigned>(diff)));
    r.mul(rising(beta.at(j + 1), static_cast<unsigned>(sum)));
    r.div(F(factorial(static_cast<unsigned>(diff))), "(z_{j+1}-z_j)!");
    r.div(rising(beta.at(j) + F(1), static_cast<unsigned>(sum)),
          "(beta_" + std::to_string(j) + "+1)_{" + std::to_string(sum) + "}");
  }
  for (std::size_t j = 1; j <= k; ++j) {
    const auto len = static_cast<unsigned>(zint(j));
    F half = beta.at(j);
    half /= Rational(2);
    r.mul(rising(half + F(1), len));
    r.div(rising(half, len), "(beta_" + std::to_string(j) + "/2)_{" + std::to_string(len) + "}");
  }
  return r;
}

template <class F>
F racah(std::size_t k, const RacahIndex& nu, const std::vector<F>& z, const std::vector<F>& beta) {
  F result(1);
  unsigned head = 0;  // |ν_{j-1}|
  for (std::size_t j = 1; j <= k; ++j) {
    const unsigned n = nu.at(j - 1);
    const F h(static_cast<int>(head));
    const F A = h + h + beta.at(j) - beta.at(0);
    const F Bp = h + beta.at(j + 1) + zc(z, j + 1);
    const F Cp = h - zc(z, j + 1);
    const F top2 = F(static_cast<int>(n)) + h + h + beta.at(j + 1) - beta.at(0) - F(1);
    const F top3 = h - zc(z, j);
    const F top4 = h + beta.at(j) + zc(z, j);
    F sum(0);
    for (unsigned m = 0; m <= n; ++m) {
      F term = rising(F(-static_cast<int>(n)), m) * rising(top2, m) * rising(top3, m) * rising(top4, m);
      term *= rising(A + F(static_cast<int>(m)), n - m) * rising(Bp + F(static_cast<int>(m)), n - m) *
              rising(Cp + F(static_cast<int>(m)), n - m);
      term /= factorial(m);
      sum += term;
    }
    result *= sum;
    head += n;
  }
  return result;
}

template <class F>
Fraction<F> norm_sq(std::size_t k, const RacahIndex& nu, unsigned N, const std::vector<F>& beta) {
  unsigned total = 0;
  for (unsigned v : nu) total += v;
  if (total > N) throw std::invalid_argument("racah_norm_sq: |nu| exceeds N");
  const F NF(static_cast<int>(N)), T(static_cast<int>(total));
  Fraction<F> r;
  r.mul(rising(beta.at(k + 1), N + total));
  r.mul(rising(-NF, total));
  r.mul(rising(-NF - beta.at(0), total));
  r.mul(rising(T + T + beta.at(k + 1) - beta.at(0), N - total));
  r.div(F(factorial(N)), "N!");
  r.div(rising(beta.at(0) + F(1), N), "(beta_0+1)_N");
  unsigned head = 0;
  for (std::size_t j = 1; j <= k; ++j) {
    const unsigned n = nu.at(j - 1);
    const F h(static_cast<int>(head)), hj(static_cast<int>(head + n));
    r.mul(F(factorial(n)));
    r.mul(rising(beta.at(j + 1) - beta.at(j), n));
    r.mul(rising(h + h + beta.at(j) - beta.at(0), n));
    r.mul(rising(hj + h + beta.at(j + 1) - beta.at(0) - F(1), n));
    head += n;
  }
  return r;
}

std::vector<EpsPoly> lift(const std::vector<Rational>& values);
std::vector<EpsPoly> lift(const BetaVector& beta);

}  // namespace racah_detail

}  // namespace superint

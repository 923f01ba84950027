#pragma once

#include "superint/multipoly.hpp"
#include "superint/report.hpp"
#include "superint/symmetry.hpp"

#include <map>
#include <vector>

namespace superint {

/// ν = (ν_1, ..., ν_d); |ν| is the total degree of P_ν.
using JacobiIndex = std::vector<unsigned>;

/// All ν with |ν| = n (or <= n), graded-lex, matching Monomial order.
std::vector<JacobiIndex> jacobi_indices_of_degree(std::size_t d, unsigned n);
std::vector<JacobiIndex> jacobi_indices_up_to_degree(std::size_t d, unsigned n);

unsigned index_sum(const JacobiIndex& nu);
/// |ν^j| = ν_j + ... + ν_d, 1-based; zero for j > d.
unsigned index_tail(const JacobiIndex& nu, std::size_t j);
/// |ν_j| = ν_1 + ... + ν_j; zero for j = 0.
unsigned index_head(const JacobiIndex& nu, std::size_t j);

nlohmann::json index_json(const JacobiIndex& nu);
std::string index_str(const JacobiIndex& nu);

/// Throws std::domain_error unless every γ_j > -1.
void require_dirichlet_parameters(const SymmetryContext& ctx);

/// Exact Dirichlet moments ∫ x^μ W_γ, with per-coordinate rising factorials cached.
class DirichletMoments {
 public:
  explicit DirichletMoments(const SymmetryContext& ctx);
  Rational operator()(const Monomial& mu);
  Rational inner_product(const MultiPoly& p, const MultiPoly& q);

 private:
  const Rational& rise(std::size_t slot, unsigned n);

  SymmetryContext ctx_;
  // slot d holds the rising factorials of |γ| + d + 1
  std::vector<std::vector<Rational>> rising_;
};

Rational dirichlet_moment(const SymmetryContext& ctx, const Monomial& mu);
Rational inner_product(const SymmetryContext& ctx, const MultiPoly& p, const MultiPoly& q);

/// Coefficients (low to high in t) of p_n^{(α,β)}(t), normalized by
/// (α+1)_n/(β+1)_n · ₂F₁(-n, n+α+β+1; α+1; (1-t)/2).
std::vector<Rational> jacobi_1d(unsigned n, const Rational& alpha, const Rational& beta);

/// (a_1, ..., a_d) with a_j = |γ^{j+1}| + 2|ν^{j+1}| + d - j.
std::vector<Rational> a_params(const SymmetryContext& ctx, const JacobiIndex& nu);

MultiPoly jacobi_basis(const SymmetryContext& ctx, const JacobiIndex& nu);
/// Closed-form ⟨P_ν, P_ν⟩.
Rational jacobi_norm_sq(const SymmetryContext& ctx, const JacobiIndex& nu);

/// How τ acts on the coordinates (x_1, ..., x_d, x_{d+1} = 1 - |x|).
enum class TauOrientation {
  Forward,   // x_i -> x_{τ(i)}
  Backward,  // x_i -> x_{τ^{-1}(i)}
};

const char* orientation_name(TauOrientation o);

/// P_ν built with parameters τ∘γ, then evaluated at the τ-image of the coordinates.
MultiPoly tau_basis(const SymmetryContext& ctx, const JacobiIndex& nu,
                    TauOrientation orientation = TauOrientation::Forward);
/// ⟨P^τ_ν, P^τ_ν⟩ via the closed form with permuted parameters.
Rational tau_norm_sq(const SymmetryContext& ctx, const JacobiIndex& nu);

/// Tries both orientations at d = 2 against the τ-transported spectral
/// equations and returns the unique one that satisfies them. The result is
/// computed once and cached.
TauOrientation probe_tau_orientation();

using BasisExpansion = std::map<JacobiIndex, Rational>;

/// p = Σ_{|μ|<=n} c_μ P_μ. Zero coefficients are omitted.
BasisExpansion expand_in_basis(const SymmetryContext& ctx, const MultiPoly& p, unsigned n);
BasisExpansion expand_in_tau_basis(const SymmetryContext& ctx, const MultiPoly& p, unsigned n);

/// Eigen-equations of M_j on P_ν, and of M^τ_j on P^τ_ν, for all |ν| <= n;
/// triangular action of M_1 on monomials; degree filtration of each t_{i,j}.
VerificationReport check_spectral(const SymmetryContext& ctx, unsigned n);

/// ⟨t_{i,j} x^μ, x^ρ⟩ = ⟨x^μ, t_{i,j} x^ρ⟩ for all generators and |μ|, |ρ| <= n.
VerificationReport check_selfadjoint(const SymmetryContext& ctx, unsigned n);

/// Gram matrices of {P_ν} and {P^τ_ν} for |ν| <= n are diagonal with the
/// closed-form norms; τ-invariance of the measure on sample polynomials.
VerificationReport check_orthogonality(const SymmetryContext& ctx, unsigned n);

}  // namespace superint

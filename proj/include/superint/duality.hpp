#pragma once

#include "superint/racah.hpp"
#include "superint/simplex.hpp"
#include "superint/symmetry.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace superint {

/// Racah data attached to P^τ_ν: parameters β̂, the lattice point ν̂ and,
/// when a column index μ is given, the Racah index μ̄ = (μ_d, ..., μ_2).
struct HatData {
  BetaVector beta_hat;
  std::vector<unsigned> nu_hat;
  RacahIndex mu_bar;
};

/// Racah data attached to P_μ in degree n: parameters β̃(n) and the lattice point μ̃.
struct TildeData {
  BetaVector beta_tilde;
  std::vector<unsigned> mu_tilde;
  unsigned n = 0;
};

/// β̂_j = γ_1 + |γ^{d+2-j}| + j and ν̂ = (|ν^d|, ..., |ν^1|). The tangent of
/// β̂ is the image of a fixed generic γ-direction.
HatData hat_params(const SymmetryContext& ctx, const JacobiIndex& nu);
HatData hat_params(const SymmetryContext& ctx, const JacobiIndex& nu, const JacobiIndex& mu);
/// β̃_0 = γ_1, β̃_j(n) = -|γ^{j+1}| - 2n - d + j, μ̃ = (|μ_1|, ..., |μ_d|). Requires |μ| = n.
TildeData tilde_params(const SymmetryContext& ctx, const JacobiIndex& mu, unsigned n);

/// g_d(μ; γ) = (1+γ_1)_{μ_1} / (|γ| + 2|μ| + d - μ_1)_{μ_1}.
Rational g_factor(const SymmetryContext& ctx, const JacobiIndex& mu);

/// A real number sign·√square with rational square.
struct SignedSquare {
  int sign = 0;
  Rational square;

  SignedSquare() = default;
  SignedSquare(int s, Rational sq);

  std::string str() const;
  friend bool operator==(const SignedSquare&, const SignedSquare&) = default;
};

/// Normalized inner products ⟨P̂^τ_ν, P̂_μ⟩ over |ν| = |μ| = n; entries[a][b]
/// pairs indices[a] (for ν) with indices[b] (for μ).
struct TransitionMatrix {
  int d = 0;
  unsigned n = 0;
  std::vector<JacobiIndex> indices;
  std::vector<std::vector<SignedSquare>> entries;
};

/// Gram computation with moment integrals only.
TransitionMatrix transition_direct(const SymmetryContext& ctx, unsigned n);
/// The entry through R_{d-1}(μ̄; ν̂; β̂) on the lattice with z_d = n.
SignedSquare transition_via_56(const SymmetryContext& ctx, const JacobiIndex& nu, const JacobiIndex& mu);
/// The entry through R_{d-1}((ν_1..ν_{d-1}); μ̃; β̃(n)).
SignedSquare transition_via_57(const SymmetryContext& ctx, const JacobiIndex& nu, const JacobiIndex& mu);

/// {d, n, gamma, entries: [{nu, mu, sign, square}]}.
nlohmann::json transition_json(const SymmetryContext& ctx, const TransitionMatrix& m);

enum class IndexSide { Hat, Tilde };

/// Applies L_{d+1-j}(ν̂; β̂) (Hat) or L_{j-1}(μ̃; β̃(n)) (Tilde), 2 <= j <= d,
/// to Σ c_ν (basis element ν) as a difference operator on the indices:
/// basis element ν goes to Σ_s C_s · (basis element ν + shift(s)) minus the
/// constant term. A shift E_{z_l} moves one unit from ν_{d-l} to ν_{d+1-l}
/// on the hat side and from μ_{l+1} to μ_l on the tilde side. Throws
/// std::logic_error if a shift leaving ℕ_0^d carries a nonzero coefficient.
BasisExpansion index_operator_apply(const SymmetryContext& ctx, IndexSide side, int j, const BasisExpansion& c,
                                    unsigned n);

/// Orthogonality of the direct transition matrices, agreement of both Racah
/// formulas with them, and ||P^τ_ν||² ρ_{d-1}(ν̂; β̂) = 1, for degrees 0..n.
VerificationReport check_transition(const SymmetryContext& ctx, unsigned n);

/// Eigenvalues of M_1, M_j on P_μ and M^τ_j on P^τ_ν through the Racah data,
/// and the non-diagonal actions of M_j on P^τ_ν and M^τ_j on P_μ compared
/// with the index-side Racah operators, for degrees 0..n.
VerificationReport check_prop51_thm53(const SymmetryContext& ctx, unsigned n);

/// ⟨N P^τ_ν, P_μ⟩ = ⟨P^τ_ν, N P_μ⟩ for the generators of both Gaudin
/// subalgebras, and the resulting difference equations in ν and μ for the
/// transition coefficients, for degrees 0..n.
VerificationReport check_duality(const SymmetryContext& ctx, unsigned n);

}  // namespace superint

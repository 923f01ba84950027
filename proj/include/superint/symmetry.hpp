#pragma once

#include "superint/rational.hpp"
#include "superint/report.hpp"
#include "superint/weyl_op.hpp"

#include <vector>

namespace superint {

/// Parameters γ_1..γ_{d+1}. Indexing through operator() is 1-based to match
/// the usual labelling of the generators t_{i,j}.
class GammaVector {
 public:
  GammaVector() = default;
  explicit GammaVector(std::vector<Rational> values) : v_(std::move(values)) {}

  std::size_t size() const { return v_.size(); }
  const Rational& operator()(std::size_t j) const { return v_.at(j - 1); }
  const std::vector<Rational>& values() const { return v_; }

  /// |γ| = γ_1 + ... + γ_{d+1}.
  Rational sum() const;
  /// |γ^j| = γ_j + ... + γ_{d+1}; zero when j exceeds the length.
  Rational tail_sum(std::size_t j) const;

  friend bool operator==(const GammaVector&, const GammaVector&) = default;

 private:
  std::vector<Rational> v_;
};

/// A permutation of {1, ..., n}, stored as its images: sigma(p) = images[p-1].
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// The cycle 1 -> 2 -> ... -> n -> 1.
  static Permutation cycle(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int p) const { return images_.at(static_cast<std::size_t>(p - 1)); }
  Permutation inverse() const;
  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (σ∘γ)_a = γ_{σ(a)}.
GammaVector permute(const GammaVector& gamma, const Permutation& sigma);

struct SymmetryContext {
  int d = 2;
  GammaVector gamma;

  SymmetryContext() = default;
  SymmetryContext(int dim, GammaVector g);

  std::size_t vars() const { return static_cast<std::size_t>(d); }
};

/// The normalized symmetry generator t_{i,j} (1 <= i != j <= d+1) acting on
/// polynomials in x_1..x_d, with x_{d+1} = 1 - |x|.
WeylOp make_t(const SymmetryContext& ctx, int i, int j);

/// Jucys–Murphy sum M_j = Σ_{j<=k<l<=d+1} t_{k,l}; the zero operator for j > d.
WeylOp make_M(const SymmetryContext& ctx, int j);
/// M^σ_j = Σ_{j<=k<l<=d+1} t_{σ(k),σ(l)}; zero for j > d.
WeylOp make_M_sigma(const SymmetryContext& ctx, int j, const Permutation& sigma);

/// Potential strengths b_i = 1/4 - γ_i².
std::vector<Rational> gamma_to_b(const GammaVector& gamma);

/// Caches t_{i,j} for one context so that suites do not rebuild generators.
class GeneratorTable {
 public:
  explicit GeneratorTable(const SymmetryContext& ctx);
  const WeylOp& t(int i, int j) const;
  const SymmetryContext& context() const { return ctx_; }

 private:
  SymmetryContext ctx_;
  std::vector<WeylOp> table_;
};

/// Both sides of the fourth-order relation expressing (1-γ_k²)(1-γ_l²) t_{i,j}
/// through t_{i,k}, t_{i,l}, t_{j,k}, t_{j,l}, t_{k,l}.
struct FourthOrderSides {
  WeylOp lhs;
  WeylOp rhs;
};
FourthOrderSides fourth_order_sides(const SymmetryContext& ctx, int i, int j, int k, int l);

nlohmann::json context_params(const SymmetryContext& ctx);

/// [t_{i,j}, t_{k,l}] = 0 for disjoint pairs and [t_{i,j}, t_{i,k} + t_{j,k}] = 0
/// for distinct triples, as exact operator identities.
VerificationReport check_kohno_drinfeld(const SymmetryContext& ctx);

/// Throws std::invalid_argument if γ_k or γ_l is ±1 or the indices are not distinct.
VerificationReport check_fourth_order(const SymmetryContext& ctx, int i, int j, int k, int l);

/// [M_i, M_j] = 0 for all i, j (and the same for the τ-transported sums).
VerificationReport check_gaudin_commutativity(const SymmetryContext& ctx);

/// Expressions of t_{1,j} and t_{i,d+1} through the three Gaudin families,
/// the reachability of the generator set {t_{1,j}} ∪ {t_{i,d+1}} from
/// {M_j} ∪ {M^τ_j} ∪ {M^{τ^{-1}}_j}, and for d = 2, 3 the explicit linear
/// recovery of every t_{i,j}.
VerificationReport check_thm55(const SymmetryContext& ctx);

}  // namespace superint

#pragma once

#include "superint/multipoly.hpp"

#include <map>
#include <string>

namespace superint {

/// Differential operator with polynomial coefficients, Σ_α c_α(x) ∂^α,
/// kept in normal form (coefficients to the left of derivatives).
///
/// Because the normal form is canonical, operator identities are decided by
/// structural equality rather than by sampling their action.
class WeylOp {
 public:
  using TermMap = std::map<Monomial, MultiPoly, GradedLex>;

  WeylOp() = default;
  explicit WeylOp(std::size_t dim) : dim_(dim) {}

  static WeylOp identity(std::size_t dim);
  /// Multiplication by p.
  static WeylOp multiplication(const MultiPoly& p);
  /// ∂/∂x_{var+1}.
  static WeylOp derivative(std::size_t dim, std::size_t var);
  /// c · ∂^alpha.
  static WeylOp term(const Monomial& alpha, const MultiPoly& c);

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// max |α| over the stored terms; -1 for the zero operator.
  int order() const;
  /// Largest total degree of any coefficient; -1 for the zero operator.
  int max_coeff_degree() const;

  void add_term(const Monomial& alpha, const MultiPoly& c);

  WeylOp operator-() const;
  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  WeylOp& operator*=(const Rational& c);

  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator*(WeylOp a, const Rational& c) { return a *= c; }
  friend WeylOp operator*(const Rational& c, WeylOp a) { return a *= c; }
  /// Composition A∘B.
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);

  friend bool operator==(const WeylOp& a, const WeylOp& b);

  std::string str() const;

 private:
  std::size_t dim_ = 0;
  TermMap terms_;
};

MultiPoly weyl_apply(const WeylOp& op, const MultiPoly& p);
WeylOp weyl_compose(const WeylOp& a, const WeylOp& b);
WeylOp weyl_commutator(const WeylOp& a, const WeylOp& b);
WeylOp weyl_anticommutator(const WeylOp& a, const WeylOp& b);
/// Exact operator identity (identical normal forms).
bool weyl_equal(const WeylOp& a, const WeylOp& b);

}  // namespace superint

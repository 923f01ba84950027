#pragma once

#include "superint/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace superint {

/// Largest number of variables supported by Monomial's inline storage.
inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector x_1^{e_1}...x_d^{e_d}. Also used as a derivative
/// multi-index by WeylOp. Slots are 0-based: slot i holds the exponent of x_{i+1}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t dim);
  Monomial(std::size_t dim, std::initializer_list<unsigned> exps);
  Monomial(std::size_t dim, std::span<const unsigned> exps);

  std::size_t dim() const { return dim_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned v);
  unsigned degree() const;
  std::vector<unsigned> exponents() const;

  Monomial operator+(const Monomial& o) const;
  /// True when every slot of *this is <= the corresponding slot of o.
  bool divides(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t dim_ = 0;
};

/// Graded-lex ordering: total degree first, then exponents lexicographically.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Enumerates all exponent vectors of dimension dim with total degree exactly n,
/// in graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t dim, unsigned n);
/// All exponent vectors with total degree <= n, graded-lex.
std::vector<Monomial> monomials_up_to_degree(std::size_t dim, unsigned n);

/// Sparse multivariate polynomial over Rational in x_1..x_d.
/// Zero coefficients are never stored, so structural equality is exact equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLex>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t dim) : dim_(dim) {}

  static MultiPoly constant(std::size_t dim, const Rational& c);
  /// The coordinate function x_{var+1}.
  static MultiPoly variable(std::size_t dim, std::size_t var);
  static MultiPoly monomial(const Monomial& m, const Rational& c = Rational(1));
  /// 1 - (x_1 + ... + x_k), the projective denominator for the first k variables.
  static MultiPoly one_minus_sum(std::size_t dim, std::size_t k);

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  Rational coeff(const Monomial& m) const;

  /// Adds c·m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Human-readable form, highest graded-lex term first, e.g. "3*x1^2 - 2*x2 + 1".
  std::string str() const;

 private:
  std::size_t dim_ = 0;
  TermMap terms_;
};

void check_same_dim(std::size_t a, std::size_t b, const char* where);

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
/// Partial derivative with respect to x_{var+1}.
MultiPoly poly_partial(const MultiPoly& p, std::size_t var);
/// Applies ∂^alpha (alpha a derivative multi-index).
MultiPoly poly_derivative(const MultiPoly& p, const Monomial& alpha);
Rational poly_eval(const MultiPoly& p, std::span<const Rational> point);
MultiPoly poly_pow(const MultiPoly& p, unsigned n);

/// den^m · q(num/den) for a univariate q (coefficients low to high) with deg q <= m.
/// The result is a polynomial: term t^k contributes q_k · num^k · den^{m-k}.
MultiPoly poly_compose_projective(std::span<const Rational> q, const MultiPoly& num,
                                  const MultiPoly& den, unsigned m);

/// Replaces x_{i+1} by images[i] and expands. The images may live in any
/// common dimension; the result has that dimension.
MultiPoly poly_substitute_vars(const MultiPoly& p, std::span<const MultiPoly> images);

}  // namespace superint

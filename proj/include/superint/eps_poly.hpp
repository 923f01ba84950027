#pragma once

#include "superint/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace superint {

/// Exact polynomial in a perturbation parameter ε. Used to evaluate rational
/// expressions along a line β + ε·t through a parameter point where some
/// factor vanishes, so that removable singularities can be resolved exactly.
class EpsPoly {
 public:
  EpsPoly() = default;
  EpsPoly(int c) : EpsPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  EpsPoly(const Rational& c) {              // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(c);
  }
  /// c0 + c1·ε.
  static EpsPoly linear(const Rational& c0, const Rational& c1);

  bool is_zero() const { return c_.empty(); }
  /// Lowest power of ε with a nonzero coefficient; throws on zero.
  std::size_t order() const;
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational at_zero() const { return coeff(0); }

  EpsPoly operator-() const;
  EpsPoly& operator+=(const EpsPoly& o);
  EpsPoly& operator-=(const EpsPoly& o);
  EpsPoly& operator*=(const EpsPoly& o);
  friend EpsPoly operator+(EpsPoly a, const EpsPoly& b) { return a += b; }
  friend EpsPoly operator-(EpsPoly a, const EpsPoly& b) { return a -= b; }
  friend EpsPoly operator*(EpsPoly a, const EpsPoly& b) { return a *= b; }
  friend bool operator==(const EpsPoly& a, const EpsPoly& b) { return a.c_ == b.c_; }

  /// Division by a nonzero rational constant (exact).
  EpsPoly& operator/=(const Rational& r);
  friend EpsPoly operator/(EpsPoly a, const Rational& r) { return a /= r; }

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const EpsPoly& p) { return p.is_zero(); }

/// Raised when a quantity has a genuine pole at the requested parameters.
class DegeneracyError : public std::domain_error {
 public:
  explicit DegeneracyError(const std::string& detail)
      : std::domain_error("parameter degeneracy: " + detail), detail_(detail) {}
  /// The message without the common prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
};

/// A product of factors kept as numerator and denominator. In the Rational
/// instantiation the label of the first vanishing denominator factor is kept,
/// which both signals that a limit is needed and names the factor if the
/// singularity turns out not to be removable.
template <class F>
struct Fraction {
  F num = F(1);
  F den = F(1);
  std::string zero_factor;

  void mul(const F& f) { num *= f; }
  void div(const F& f, const std::string& label) {
    if (zero_factor.empty() && is_zero(f)) zero_factor = label;
    den *= f;
  }
  void mul(const Fraction& o) {
    num *= o.num;
    den *= o.den;
    if (zero_factor.empty()) zero_factor = o.zero_factor;
  }
  void div(const Fraction& o, const std::string& label) {
    num *= o.den;
    den *= o.num;
    if (zero_factor.empty()) zero_factor = !o.zero_factor.empty() ? o.zero_factor : (is_zero(o.num) ? label : "");
  }
  bool singular() const { return !zero_factor.empty(); }
};

/// lim_{ε→0} num/den. Throws DegeneracyError naming `label` if it diverges.
Rational eps_limit(const Fraction<EpsPoly>& f, const std::string& label);

/// Evaluates a fraction exactly, falling back to the ε-limit only when a
/// denominator factor vanishes. `perturbed` recomputes the same fraction over EpsPoly.
template <class Perturbed>
Rational resolve_fraction(const Fraction<Rational>& exact, Perturbed&& perturbed) {
  if (!exact.singular()) return exact.num / exact.den;
  return eps_limit(perturbed(), exact.zero_factor);
}

}  // namespace superint

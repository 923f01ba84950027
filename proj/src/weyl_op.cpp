#include "superint/weyl_op.hpp"
#include "superint/pochhammer.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace superint {

WeylOp WeylOp::identity(std::size_t dim) { return multiplication(MultiPoly::constant(dim, Rational(1))); }

WeylOp WeylOp::multiplication(const MultiPoly& p) { return term(Monomial(p.dim()), p); }

WeylOp WeylOp::derivative(std::size_t dim, std::size_t var) {
  if (var >= dim) throw std::out_of_range("WeylOp::derivative: index out of range");
  Monomial alpha(dim);
  alpha.set(var, 1);
  return term(alpha, MultiPoly::constant(dim, Rational(1)));
}

WeylOp WeylOp::term(const Monomial& alpha, const MultiPoly& c) {
  WeylOp op(alpha.dim());
  op.add_term(alpha, c);
  return op;
}

int WeylOp::order() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

int WeylOp::max_coeff_degree() const {
  int d = -1;
  for (const auto& [a, c] : terms_) d = std::max(d, c.degree());
  return d;
}

void WeylOp::add_term(const Monomial& alpha, const MultiPoly& c) {
  check_same_dim(dim_, alpha.dim(), "WeylOp::add_term");
  check_same_dim(dim_, c.dim(), "WeylOp::add_term");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylOp WeylOp::operator-() const {
  WeylOp r(*this);
  for (auto& [a, c] : r.terms_) c = -c;
  return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  check_same_dim(dim_, o.dim_, "WeylOp::operator+=");
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
  check_same_dim(dim_, o.dim_, "WeylOp::operator-=");
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

WeylOp& WeylOp::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, p] : terms_) p *= c;
  return *this;
}

bool operator==(const WeylOp& a, const WeylOp& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

WeylOp operator*(const WeylOp& a, const WeylOp& b) { return weyl_compose(a, b); }

std::string WeylOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    for (std::size_t i = 0; i < dim_; ++i) {
      if (it->first[i] == 0) continue;
      os << "*D" << (i + 1);
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

MultiPoly weyl_apply(const WeylOp& op, const MultiPoly& p) {
  check_same_dim(op.dim(), p.dim(), "weyl_apply");
  MultiPoly r(p.dim());
  for (const auto& [alpha, c] : op.terms()) {
    MultiPoly d = poly_derivative(p, alpha);
    if (!d.is_zero()) r += poly_mul(c, d);
  }
  return r;
}

namespace {
// all κ with κ <= alpha componentwise
void sub_indices(const Monomial& alpha, std::size_t slot, Monomial& cur, std::vector<Monomial>& out) {
  if (slot == alpha.dim()) {
    out.push_back(cur);
    return;
  }
  for (unsigned v = 0; v <= alpha[slot]; ++v) {
    cur.set(slot, v);
    sub_indices(alpha, slot + 1, cur, out);
  }
}
}  // namespace

WeylOp weyl_compose(const WeylOp& a, const WeylOp& b) {
  check_same_dim(a.dim(), b.dim(), "weyl_compose");
  const std::size_t dim = a.dim();
  WeylOp r(dim);
  // (c ∂^α)(e ∂^β) = c Σ_{κ<=α} binom(α,κ) (∂^κ e) ∂^{α-κ+β}
  for (const auto& [alpha, c] : a.terms()) {
    std::vector<Monomial> kappas;
    Monomial cur(dim);
    sub_indices(alpha, 0, cur, kappas);
    for (const auto& kappa : kappas) {
      Rational weight(1);
      Monomial rest(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        weight *= binomial(alpha[i], kappa[i]);
        rest.set(i, alpha[i] - kappa[i]);
      }
      for (const auto& [beta, e] : b.terms()) {
        MultiPoly de = poly_derivative(e, kappa);
        if (de.is_zero()) continue;
        r.add_term(rest + beta, poly_mul(c, de) * weight);
      }
    }
  }
  return r;
}

WeylOp weyl_commutator(const WeylOp& a, const WeylOp& b) { return weyl_compose(a, b) - weyl_compose(b, a); }

WeylOp weyl_anticommutator(const WeylOp& a, const WeylOp& b) {
  return weyl_compose(a, b) + weyl_compose(b, a);
}

bool weyl_equal(const WeylOp& a, const WeylOp& b) {
  check_same_dim(a.dim(), b.dim(), "weyl_equal");
  return a == b;
}

}  // namespace superint

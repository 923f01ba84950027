#include "superint/eps_poly.hpp"

#include <sstream>

namespace superint {

EpsPoly EpsPoly::linear(const Rational& c0, const Rational& c1) {
  EpsPoly p;
  p.c_ = {c0, c1};
  p.trim();
  return p;
}

std::size_t EpsPoly::order() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return k;
  throw std::domain_error("EpsPoly::order of the zero polynomial");
}

void EpsPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

EpsPoly EpsPoly::operator-() const {
  EpsPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

EpsPoly& EpsPoly::operator+=(const EpsPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& o) { return *this += -o; }

EpsPoly& EpsPoly::operator*=(const EpsPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

EpsPoly& EpsPoly::operator/=(const Rational& r) {
  for (auto& c : c_) c /= r;
  return *this;
}

std::string EpsPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c_[k] << ')';
    if (k > 0) os << "*eps^" << k;
  }
  return os.str();
}

Rational eps_limit(const Fraction<EpsPoly>& f, const std::string& label) {
  if (f.den.is_zero()) throw DegeneracyError(label + " vanishes identically along the perturbation");
  if (f.num.is_zero()) return Rational(0);
  const std::size_t on = f.num.order(), od = f.den.order();
  if (on < od) throw DegeneracyError(label + " is a pole, not a removable zero");
  if (on > od) return Rational(0);
  return f.num.coeff(on) / f.den.coeff(od);
}

}  // namespace superint

#include "superint/multipoly.hpp"
#include "superint/pochhammer.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superint {

Rational factorial(unsigned n) { return rising(Rational(1), n); }

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(mpq_class(r));
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t dim) : dim_(static_cast<std::uint8_t>(dim)) {
  if (dim > kMaxVars)
    throw std::invalid_argument("Monomial: dimension " + std::to_string(dim) + " exceeds kMaxVars");
}

Monomial::Monomial(std::size_t dim, std::initializer_list<unsigned> exps)
    : Monomial(dim, std::span<const unsigned>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::size_t dim, std::span<const unsigned> exps) : Monomial(dim) {
  if (exps.size() != dim) throw std::invalid_argument("Monomial: exponent count does not match dimension");
  for (std::size_t i = 0; i < dim; ++i) set(i, exps[i]);
}

void Monomial::set(std::size_t i, unsigned v) {
  if (i >= dim_) throw std::out_of_range("Monomial::set: slot out of range");
  if (v > 0xFFFFu) throw std::overflow_error("Monomial: exponent too large");
  e_[i] = static_cast<std::uint16_t>(v);
}

unsigned Monomial::degree() const {
  unsigned s = 0;
  for (std::size_t i = 0; i < dim_; ++i) s += e_[i];
  return s;
}

std::vector<unsigned> Monomial::exponents() const { return {e_.begin(), e_.begin() + dim_}; }

Monomial Monomial::operator+(const Monomial& o) const {
  check_same_dim(dim_, o.dim_, "Monomial::operator+");
  Monomial r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r.set(i, unsigned(e_[i]) + o.e_[i]);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

namespace {
void enumerate(std::size_t dim, std::size_t slot, unsigned remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  if (slot + 1 == dim) {
    cur.set(slot, remaining);
    out.push_back(cur);
    return;
  }
  for (unsigned v = 0; v <= remaining; ++v) {
    cur.set(slot, v);
    enumerate(dim, slot + 1, remaining - v, cur, out);
  }
}
}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t dim, unsigned n) {
  std::vector<Monomial> out;
  if (dim == 0) {
    if (n == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(dim);
  enumerate(dim, 0, n, cur, out);
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t dim, unsigned n) {
  std::vector<Monomial> out;
  for (unsigned k = 0; k <= n; ++k) {
    auto layer = monomials_of_degree(dim, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// --------------------------------------------------------------- MultiPoly

void check_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b)
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
}

MultiPoly MultiPoly::constant(std::size_t dim, const Rational& c) {
  MultiPoly p(dim);
  p.add_term(Monomial(dim), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t dim, std::size_t var) {
  if (var >= dim) throw std::out_of_range("MultiPoly::variable: index out of range");
  Monomial m(dim);
  m.set(var, 1);
  return monomial(m);
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
  MultiPoly p(m.dim());
  p.add_term(m, c);
  return p;
}

MultiPoly MultiPoly::one_minus_sum(std::size_t dim, std::size_t k) {
  MultiPoly p = constant(dim, Rational(1));
  for (std::size_t i = 0; i < k; ++i) p -= variable(dim, i);
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  // graded order: the last key has maximal degree
  return static_cast<int>(terms_.rbegin()->first.degree());
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  check_same_dim(dim_, m.dim(), "MultiPoly::add_term");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_dim(dim_, o.dim_, "MultiPoly::operator+=");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_dim(dim_, o.dim_, "MultiPoly::operator-=");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = poly_mul(*this, o);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return poly_mul(a, b); }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_const = m.degree() == 0;
    bool wrote = false;
    if (is_const || mag != Rational(1)) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << "x" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) {
  check_same_dim(p.dim(), q.dim(), "poly_mul");
  MultiPoly r(p.dim());
  if (p.is_zero() || q.is_zero()) return r;
  for (const auto& [mp, cp] : p.terms())
    for (const auto& [mq, cq] : q.terms()) r.add_term(mp + mq, cp * cq);
  return r;
}

MultiPoly poly_partial(const MultiPoly& p, std::size_t var) {
  if (var >= p.dim()) throw std::out_of_range("poly_partial: variable index out of range");
  MultiPoly r(p.dim());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    dm.set(var, m[var] - 1);
    r.add_term(dm, c * Rational(static_cast<std::int64_t>(m[var])));
  }
  return r;
}

MultiPoly poly_derivative(const MultiPoly& p, const Monomial& alpha) {
  check_same_dim(p.dim(), alpha.dim(), "poly_derivative");
  MultiPoly r(p.dim());
  for (const auto& [m, c] : p.terms()) {
    if (!alpha.divides(m)) continue;
    Monomial dm(m.dim());
    Rational factor = c;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      // falling factorial m_i (m_i - 1) ... (m_i - alpha_i + 1)
      for (unsigned k = 0; k < alpha[i]; ++k) factor *= Rational(static_cast<std::int64_t>(m[i] - k));
      dm.set(i, m[i] - alpha[i]);
    }
    r.add_term(dm, factor);
  }
  return r;
}

Rational poly_eval(const MultiPoly& p, std::span<const Rational> point) {
  if (point.size() != p.dim()) throw std::invalid_argument("poly_eval: point length does not match dimension");
  Rational sum(0);
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < m.dim(); ++i)
      if (m[i]) term *= pow(point[i], static_cast<int>(m[i]));
    sum += term;
  }
  return sum;
}

MultiPoly poly_pow(const MultiPoly& p, unsigned n) {
  MultiPoly result = MultiPoly::constant(p.dim(), Rational(1));
  MultiPoly base = p;
  while (n) {
    if (n & 1u) result = poly_mul(result, base);
    n >>= 1u;
    if (n) base = poly_mul(base, base);
  }
  return result;
}

MultiPoly poly_compose_projective(std::span<const Rational> q, const MultiPoly& num,
                                  const MultiPoly& den, unsigned m) {
  check_same_dim(num.dim(), den.dim(), "poly_compose_projective");
  std::size_t deg = q.size();
  while (deg > 0 && q[deg - 1].is_zero()) --deg;
  if (deg > 0 && deg - 1 > m) throw std::invalid_argument("poly_compose_projective: degree(q) exceeds m");

  // powers of num and den, built incrementally
  std::vector<MultiPoly> num_pow{MultiPoly::constant(num.dim(), Rational(1))};
  std::vector<MultiPoly> den_pow{MultiPoly::constant(den.dim(), Rational(1))};
  for (unsigned k = 1; k <= m; ++k) {
    if (k < deg) num_pow.push_back(poly_mul(num_pow.back(), num));
    den_pow.push_back(poly_mul(den_pow.back(), den));
  }
  MultiPoly r(num.dim());
  for (std::size_t k = 0; k < deg; ++k) {
    if (q[k].is_zero()) continue;
    r += poly_mul(num_pow[k], den_pow[m - k]) * q[k];
  }
  return r;
}

MultiPoly poly_substitute_vars(const MultiPoly& p, std::span<const MultiPoly> images) {
  if (images.size() != p.dim()) throw std::invalid_argument("poly_substitute_vars: image count does not match dimension");
  const std::size_t out_dim = images.empty() ? 0 : images.front().dim();
  for (const auto& im : images) check_same_dim(out_dim, im.dim(), "poly_substitute_vars");

  // cache powers of each image
  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    powers[i].push_back(MultiPoly::constant(out_dim, Rational(1)));
  auto power = [&](std::size_t i, unsigned e) -> const MultiPoly& {
    while (powers[i].size() <= e) powers[i].push_back(poly_mul(powers[i].back(), images[i]));
    return powers[i][e];
  };

  MultiPoly r(out_dim);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(out_dim, c);
    for (std::size_t i = 0; i < m.dim(); ++i)
      if (m[i]) term = poly_mul(term, power(i, m[i]));
    r += term;
  }
  return r;
}

}  // namespace superint

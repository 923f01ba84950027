#include "superint/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace superint {

Rational GammaVector::sum() const {
  return std::accumulate(v_.begin(), v_.end(), Rational(0));
}

Rational GammaVector::tail_sum(std::size_t j) const {
  Rational s(0);
  for (std::size_t i = j; i <= v_.size(); ++i) s += v_[i - 1];
  return s;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<int> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1) throw std::invalid_argument("Permutation: not a bijection of {1..n}");
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::cycle(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) im[static_cast<std::size_t>(p - 1)] = p == n ? 1 : p + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p) inv[static_cast<std::size_t>(images_[p] - 1)] = static_cast<int>(p) + 1;
  return Permutation(std::move(inv));
}

GammaVector permute(const GammaVector& gamma, const Permutation& sigma) {
  if (static_cast<std::size_t>(sigma.size()) != gamma.size())
    throw std::invalid_argument("permute: permutation size does not match parameter count");
  std::vector<Rational> out;
  out.reserve(gamma.size());
  for (int a = 1; a <= sigma.size(); ++a) out.push_back(gamma(static_cast<std::size_t>(sigma(a))));
  return GammaVector(std::move(out));
}

SymmetryContext::SymmetryContext(int dim, GammaVector g) : d(dim), gamma(std::move(g)) {
  if (d < 1) throw std::invalid_argument("SymmetryContext: dimension must be >= 1");
  if (gamma.size() != static_cast<std::size_t>(d) + 1)
    throw std::invalid_argument("SymmetryContext: need d+1 = " + std::to_string(d + 1) + " gamma entries, got " +
                                std::to_string(gamma.size()));
}

namespace {

void check_generator_index(const SymmetryContext& ctx, int i, int j) {
  if (i < 1 || j < 1 || i > ctx.d + 1 || j > ctx.d + 1)
    throw std::out_of_range("generator index out of range: t_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  if (i == j) throw std::invalid_argument("generator t_{i,j} needs i != j");
}

Monomial deriv(std::size_t dim, std::initializer_list<std::pair<std::size_t, unsigned>> slots) {
  Monomial m(dim);
  for (auto [s, e] : slots) m.set(s, m[s] + e);
  return m;
}

}  // namespace

WeylOp make_t(const SymmetryContext& ctx, int i, int j) {
  check_generator_index(ctx, i, j);
  const std::size_t dim = ctx.vars();
  const int last = ctx.d + 1;
  if (i == last) std::swap(i, j);
  const Rational gi1 = ctx.gamma(static_cast<std::size_t>(i)) + Rational(1);
  const Rational gj1 = ctx.gamma(static_cast<std::size_t>(j)) + Rational(1);
  const std::size_t a = static_cast<std::size_t>(i - 1);
  const MultiPoly xa = MultiPoly::variable(dim, a);

  WeylOp t(dim);
  if (j == last) {
    // x_i (1-|x|) ∂_i² + [(γ_i+1)(1-|x|) - (γ_{d+1}+1) x_i] ∂_i
    const MultiPoly rest = MultiPoly::one_minus_sum(dim, dim);
    t.add_term(deriv(dim, {{a, 2}}), xa * rest);
    t.add_term(deriv(dim, {{a, 1}}), rest * gi1 - xa * gj1);
    return t;
  }
  // x_i x_j (∂_i - ∂_j)² + [(γ_i+1) x_j - (γ_j+1) x_i] (∂_i - ∂_j)
  const std::size_t b = static_cast<std::size_t>(j - 1);
  const MultiPoly xb = MultiPoly::variable(dim, b);
  const MultiPoly xx = xa * xb;
  t.add_term(deriv(dim, {{a, 2}}), xx);
  t.add_term(deriv(dim, {{a, 1}, {b, 1}}), xx * Rational(-2));
  t.add_term(deriv(dim, {{b, 2}}), xx);
  const MultiPoly first = xb * gi1 - xa * gj1;
  t.add_term(deriv(dim, {{a, 1}}), first);
  t.add_term(deriv(dim, {{b, 1}}), -first);
  return t;
}

WeylOp make_M_sigma(const SymmetryContext& ctx, int j, const Permutation& sigma) {
  if (j < 1) throw std::out_of_range("make_M: index must be >= 1");
  if (sigma.size() != ctx.d + 1) throw std::invalid_argument("make_M_sigma: permutation must act on d+1 symbols");
  WeylOp m(ctx.vars());
  for (int k = j; k <= ctx.d + 1; ++k)
    for (int l = k + 1; l <= ctx.d + 1; ++l) m += make_t(ctx, sigma(k), sigma(l));
  return m;
}

WeylOp make_M(const SymmetryContext& ctx, int j) { return make_M_sigma(ctx, j, Permutation::identity(ctx.d + 1)); }

std::vector<Rational> gamma_to_b(const GammaVector& gamma) {
  std::vector<Rational> b;
  b.reserve(gamma.size());
  for (const auto& g : gamma.values()) b.push_back(Rational(1, 4) - g * g);
  return b;
}

GeneratorTable::GeneratorTable(const SymmetryContext& ctx) : ctx_(ctx) {
  const int n = ctx.d + 1;
  table_.resize(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      WeylOp t = make_t(ctx, i, j);
      table_[static_cast<std::size_t>((i - 1) * n + (j - 1))] = t;
      table_[static_cast<std::size_t>((j - 1) * n + (i - 1))] = std::move(t);
    }
}

const WeylOp& GeneratorTable::t(int i, int j) const {
  check_generator_index(ctx_, i, j);
  const int n = ctx_.d + 1;
  return table_[static_cast<std::size_t>((i - 1) * n + (j - 1))];
}

nlohmann::json context_params(const SymmetryContext& ctx) {
  return {{"d", ctx.d}, {"gamma", rationals_json(ctx.gamma.values())}};
}

namespace {

std::string pair_name(int i, int j) { return "t" + std::to_string(i) + std::to_string(j); }

void record_identity(VerificationReport& rep, const std::string& id, const nlohmann::json& params, const WeylOp& lhs,
                     const WeylOp& rhs) {
  const bool ok = weyl_equal(lhs, rhs);
  rep.record(id, params, ok, ok ? std::string() : "lhs - rhs = " + (lhs - rhs).str());
}

}  // namespace

VerificationReport check_kohno_drinfeld(const SymmetryContext& ctx) {
  VerificationReport rep("kohno-drinfeld");
  const GeneratorTable gens(ctx);
  const int n = ctx.d + 1;
  const auto params = context_params(ctx);
  const WeylOp zero(ctx.vars());

  record_identity(rep, "[t12,t12]", params, weyl_commutator(gens.t(1, 2), gens.t(1, 2)), zero);

  // disjoint pairs
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (k == j || l == j) continue;
          const std::string id = "[" + pair_name(i, j) + "," + pair_name(k, l) + "]";
          record_identity(rep, id, params, weyl_commutator(gens.t(i, j), gens.t(k, l)), zero);
        }
  // triples
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        const std::string id = "[" + pair_name(i, j) + "," + pair_name(i, k) + "+" + pair_name(j, k) + "]";
        record_identity(rep, id, params, weyl_commutator(gens.t(i, j), gens.t(i, k) + gens.t(j, k)), zero);
      }
  return rep;
}

FourthOrderSides fourth_order_sides(const SymmetryContext& ctx, int i, int j, int k, int l) {
  const std::set<int> idx{i, j, k, l};
  if (idx.size() != 4) throw std::invalid_argument("fourth-order relation needs four distinct indices");
  for (int s : idx) check_generator_index(ctx, s, s == 1 ? 2 : 1);
  const auto g = [&](int s) { return ctx.gamma(static_cast<std::size_t>(s)); };
  const Rational one(1);
  if (g(k) == one || g(k) == -one || g(l) == one || g(l) == -one)
    throw std::invalid_argument("fourth-order relation requires gamma_k, gamma_l != +-1");

  const auto t = [&](int a, int b) { return make_t(ctx, a, b); };
  const WeylOp tij = t(i, j), tik = t(i, k), til = t(i, l), tjk = t(j, k), tjl = t(j, l), tkl = t(k, l);
  const Rational gi = g(i), gj = g(j), gk = g(k), gl = g(l);

  FourthOrderSides s;
  s.lhs = tij * ((one - gk * gk) * (one - gl * gl));

  WeylOp r = weyl_anticommutator(weyl_commutator(tjk, tkl), weyl_commutator(tik, tkl));
  r -= weyl_anticommutator(tkl, tik * tjl) * Rational(2);
  r -= weyl_anticommutator(tkl, weyl_commutator(tik, weyl_commutator(tjk, tkl)));
  r += weyl_commutator(tik, weyl_commutator(tkl, tjl)) * ((one + gk) * (one + gl));
  r += (weyl_anticommutator(tik, tkl) - tik * (Rational(2) * gk) - tkl * ((one + gi) * (one + gk))) *
       ((one + gj) * (one + gl));
  r += weyl_anticommutator(tik, tjk) * (one - gl * gl);
  r += weyl_anticommutator(til, tjl) * (one - gk * gk);
  r += weyl_anticommutator(tjl, tkl) * ((one + gi) * (one + gk));
  r -= (tjk * til) * Rational(4);
  r += (tjl * tik) * (Rational(2) * (-one + gk + gl + gk * gl));
  r += tjk * ((one + gi) * (one + gl) * (one - gk + gl + gk * gl));
  r -= tjl * (Rational(2) * (one + gi) * (one + gk) * gl);
  r += til * ((one + gj) * (one + gk) * (one + gk - gl + gk * gl));
  s.rhs = std::move(r);
  return s;
}

VerificationReport check_fourth_order(const SymmetryContext& ctx, int i, int j, int k, int l) {
  VerificationReport rep("fourth-order");
  auto sides = fourth_order_sides(ctx, i, j, k, l);
  auto params = context_params(ctx);
  params["indices"] = {i, j, k, l};
  std::ostringstream id;
  id << "(i,j,k,l)=(" << i << "," << j << "," << k << "," << l << ")";
  record_identity(rep, id.str(), params, sides.lhs, sides.rhs);
  return rep;
}

VerificationReport check_gaudin_commutativity(const SymmetryContext& ctx) {
  VerificationReport rep("gaudin");
  const auto params = context_params(ctx);
  const WeylOp zero(ctx.vars());
  const Permutation tau = Permutation::cycle(ctx.d + 1);
  std::vector<WeylOp> m, mt;
  for (int j = 1; j <= ctx.d; ++j) {
    m.push_back(make_M(ctx, j));
    mt.push_back(make_M_sigma(ctx, j, tau));
  }
  for (int a = 1; a <= ctx.d; ++a)
    for (int b = a + 1; b <= ctx.d; ++b) {
      const auto ia = static_cast<std::size_t>(a - 1), ib = static_cast<std::size_t>(b - 1);
      record_identity(rep, "[M" + std::to_string(a) + ",M" + std::to_string(b) + "]", params,
                      weyl_commutator(m[ia], m[ib]), zero);
      record_identity(rep, "[Mtau" + std::to_string(a) + ",Mtau" + std::to_string(b) + "]", params,
                      weyl_commutator(mt[ia], mt[ib]), zero);
    }
  return rep;
}

namespace {

enum class Family { M, MTau, MTauInv };

struct Term {
  Family family;
  int index;
  int coeff;
};

std::string family_name(Family f) {
  switch (f) {
    case Family::M: return "M";
    case Family::MTau: return "Mtau";
    case Family::MTauInv: return "Mtauinv";
  }
  return "?";
}

// Rewrites a combination onto the generating set of the three Gaudin families:
// drops zero sums (index > d) and replaces M^τ_1 = M^{τ^{-1}}_1 = M_1.
std::vector<Term> normalize(std::vector<Term> terms, int d) {
  std::vector<Term> out;
  for (auto t : terms) {
    if (t.index > d) continue;
    if (t.index == 1) t.family = Family::M;
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const Term& o) { return o.family == t.family && o.index == t.index; });
    if (it == out.end())
      out.push_back(t);
    else
      it->coeff += t.coeff;
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coeff == 0; }), out.end());
  return out;
}

bool in_generating_set(const Term& t, int d) {
  if (t.family == Family::M) return t.index >= 1 && t.index <= d;
  return t.index >= 2 && t.index <= d;
}

std::string combo_str(const std::vector<Term>& terms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (!first || t.coeff < 0) os << (t.coeff < 0 ? " - " : " + ");
    first = false;
    if (std::abs(t.coeff) != 1) os << std::abs(t.coeff) << "*";
    os << family_name(t.family) << t.index;
  }
  return first ? "0" : os.str();
}

// t_{1,j} = (M^τ_{j-1} - M_j) - (M^τ_j - M_{j+1})
std::vector<Term> expr_t1j(int j) {
  return {{Family::MTau, j - 1, 1}, {Family::M, j, -1}, {Family::MTau, j, -1}, {Family::M, j + 1, 1}};
}
// t_{i,d+1} = (M_i - M^{τ^{-1}}_{i+1}) - (M_{i+1} - M^{τ^{-1}}_{i+2})
std::vector<Term> expr_tid(int i) {
  return {{Family::M, i, 1}, {Family::MTauInv, i + 1, -1}, {Family::M, i + 1, -1}, {Family::MTauInv, i + 2, 1}};
}

}  // namespace

VerificationReport check_thm55(const SymmetryContext& ctx) {
  VerificationReport rep("thm55");
  const int d = ctx.d;
  const auto params = context_params(ctx);
  const Permutation tau = Permutation::cycle(d + 1);
  const Permutation tau_inv = tau.inverse();

  // families indexed 1..d+2; entries beyond d are zero sums
  std::vector<WeylOp> fam_m, fam_t, fam_ti;
  for (int j = 1; j <= d + 2; ++j) {
    fam_m.push_back(make_M(ctx, j));
    fam_t.push_back(make_M_sigma(ctx, j, tau));
    fam_ti.push_back(make_M_sigma(ctx, j, tau_inv));
  }
  auto get = [&](Family f, int idx) -> const WeylOp& {
    const auto& v = f == Family::M ? fam_m : f == Family::MTau ? fam_t : fam_ti;
    return v.at(static_cast<std::size_t>(idx - 1));
  };
  auto eval = [&](const std::vector<Term>& terms) {
    WeylOp r(ctx.vars());
    for (const auto& t : terms) r += get(t.family, t.index) * Rational(t.coeff);
    return r;
  };
  auto check_combo = [&](const std::string& id, const WeylOp& target, const std::vector<Term>& terms) {
    const WeylOp value = eval(terms);
    const bool ok = weyl_equal(target, value);
    rep.record(id + " = " + combo_str(terms), params, ok, ok ? "" : "difference: " + (target - value).str());
  };

  record_identity(rep, "Mtau1 = M1", params, fam_t[0], fam_m[0]);
  record_identity(rep, "Mtauinv1 = M1", params, fam_ti[0], fam_m[0]);

  for (int j = 2; j <= d + 1; ++j) check_combo("t1" + std::to_string(j), make_t(ctx, 1, j), expr_t1j(j));
  for (int i = 1; i <= d; ++i)
    check_combo("t" + std::to_string(i) + std::to_string(d + 1), make_t(ctx, i, d + 1), expr_tid(i));

  // The generating set {t_{1,j}} ∪ {t_{i,d+1}} is reached from the Gaudin families.
  auto reach = [&](const std::string& name, const WeylOp& target, std::vector<Term> raw) {
    auto terms = normalize(std::move(raw), d);
    const bool members = std::all_of(terms.begin(), terms.end(), [&](const Term& t) { return in_generating_set(t, d); });
    const WeylOp value = eval(terms);
    const bool ok = members && weyl_equal(target, value);
    rep.record("reach " + name + " = " + combo_str(terms), params, ok,
               ok ? "" : members ? "difference: " + (target - value).str() : "uses an element outside the generating set");
  };
  for (int j = 2; j <= d + 1; ++j) reach("t1" + std::to_string(j), make_t(ctx, 1, j), expr_t1j(j));
  for (int i = 2; i <= d; ++i)
    reach("t" + std::to_string(i) + std::to_string(d + 1), make_t(ctx, i, d + 1), expr_tid(i));

  if (d == 2) {
    check_combo("d=2 t12", make_t(ctx, 1, 2), {{Family::M, 1, 1}, {Family::M, 2, -1}, {Family::MTau, 2, -1}});
    check_combo("d=2 t13", make_t(ctx, 1, 3), {{Family::MTau, 2, 1}});
    check_combo("d=2 t23", make_t(ctx, 2, 3), {{Family::M, 2, 1}});
    record_identity(rep, "d=2 M2 = t23", params, fam_m[1], make_t(ctx, 2, 3));
    record_identity(rep, "d=2 Mtau2 = t13", params, fam_t[1], make_t(ctx, 1, 3));
  }
  if (d == 3) {
    // every t_{i,j} of the four-index algebra as a linear combination
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        std::vector<Term> terms;
        if (i == 1)
          terms = expr_t1j(j);
        else if (j == 4)
          terms = expr_tid(i);
        else  // t_{2,3} = M_2 - M_3 - t_{2,4}
          terms = {{Family::M, 2, 1}, {Family::M, 3, -1}, {Family::M, 2, -1}, {Family::MTauInv, 3, 1},
                   {Family::M, 3, 1}, {Family::MTauInv, 4, -1}};
        terms = normalize(std::move(terms), d);
        check_combo("d=3 t" + std::to_string(i) + std::to_string(j), make_t(ctx, i, j), terms);
      }
  }
  return rep;
}

}  // namespace superint

#include "superint/duality.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace superint {

namespace {

// γ + ε·δ for a fixed generic direction δ.
std::vector<EpsPoly> lift_gamma(const GammaVector& gamma) {
  const auto delta = BetaVector::generic_tangent(gamma.size());
  std::vector<EpsPoly> g;
  for (std::size_t i = 0; i < gamma.size(); ++i) g.push_back(EpsPoly::linear(gamma.values()[i], delta[i]));
  return g;
}

template <class F>
F tail(const std::vector<F>& g, std::size_t from) {
  F s(0);
  for (std::size_t i = from; i <= g.size(); ++i) s += g[i - 1];
  return s;
}

template <class F>
std::vector<F> hat_beta_of(const std::vector<F>& g) {
  const std::size_t d = g.size() - 1;
  std::vector<F> b;
  for (std::size_t j = 0; j <= d; ++j) b.push_back(g[0] + tail(g, d + 2 - j) + F(static_cast<int>(j)));
  return b;
}

template <class F>
std::vector<F> tilde_beta_of(const std::vector<F>& g, unsigned n) {
  const int d = static_cast<int>(g.size()) - 1;
  std::vector<F> b{g[0]};
  for (int j = 1; j <= d; ++j)
    b.push_back(F(j - 2 * static_cast<int>(n) - d) - tail(g, static_cast<std::size_t>(j) + 1));
  return b;
}

template <class F>
Fraction<F> g_fraction(const std::vector<F>& g, const JacobiIndex& mu) {
  const int d = static_cast<int>(g.size()) - 1;
  const unsigned m1 = mu.at(0);
  const int shift = 2 * static_cast<int>(index_sum(mu)) + d - static_cast<int>(m1);
  Fraction<F> r;
  r.mul(rising(g[0] + F(1), m1));
  r.div(rising(tail(g, 1) + F(shift), m1), "(|gamma|+2|mu|+d-mu_1)_{mu_1}");
  return r;
}

BetaVector beta_with_gamma_tangent(const std::vector<EpsPoly>& lifted) {
  std::vector<Rational> v, t;
  for (const auto& p : lifted) {
    v.push_back(p.coeff(0));
    t.push_back(p.coeff(1));
  }
  return BetaVector(std::move(v), std::move(t));
}

template <class Build>
Rational resolve_in_gamma(const GammaVector& gamma, Build&& build) {
  const auto exact = build(gamma.values());
  return resolve_fraction(exact, [&] { return build(lift_gamma(gamma)); });
}

// build(g) returns (fraction for the square, signed factor). The sign is taken
// from the signed factor as ε -> 0+ along the γ-direction.
template <class Build>
SignedSquare signed_in_gamma(const GammaVector& gamma, int parity, Build&& build) {
  const auto [f, r] = build(gamma.values());
  if (!f.singular()) return SignedSquare(parity * r.sign(), f.num / f.den);
  const auto [fe, re] = build(lift_gamma(gamma));
  const Rational sq = eps_limit(fe, f.zero_factor);
  const int s = re.is_zero() ? 0 : re.coeff(re.order()).sign();
  return SignedSquare(parity * s, sq);
}

std::vector<int> as_ints(const std::vector<unsigned>& v) { return {v.begin(), v.end()}; }

template <class F>
std::vector<F> as_field(const std::vector<unsigned>& v) {
  std::vector<F> out;
  for (unsigned x : v) out.emplace_back(static_cast<int>(x));
  return out;
}

LatticePoint as_point(const std::vector<unsigned>& v) {
  LatticePoint z;
  for (unsigned x : v) z.emplace_back(x);
  return z;
}

std::vector<unsigned> nu_hat_of(const JacobiIndex& nu) {
  const std::size_t d = nu.size();
  std::vector<unsigned> z;
  for (std::size_t l = 1; l <= d; ++l) z.push_back(index_tail(nu, d + 1 - l));
  return z;
}

std::vector<unsigned> mu_tilde_of(const JacobiIndex& mu) {
  std::vector<unsigned> z;
  for (std::size_t l = 1; l <= mu.size(); ++l) z.push_back(index_head(mu, l));
  return z;
}

RacahIndex mu_bar_of(const JacobiIndex& mu) {
  RacahIndex r;
  for (std::size_t i = mu.size(); i >= 2; --i) r.push_back(mu[i - 1]);
  return r;
}

void require_pair(const SymmetryContext& ctx, const JacobiIndex& nu, const JacobiIndex& mu) {
  if (ctx.d < 2) throw std::invalid_argument("transition formulas need d >= 2");
  if (nu.size() != ctx.vars() || mu.size() != ctx.vars())
    throw std::invalid_argument("transition: index length must equal d");
  if (index_sum(nu) != index_sum(mu)) throw std::invalid_argument("transition: |nu| must equal |mu|");
}

// Bases, moment norms and Gram matrix for one degree.
struct DegreeData {
  std::vector<JacobiIndex> idx;
  std::vector<MultiPoly> P, Pt;
  std::vector<Rational> nP, nPt;
  std::vector<std::vector<Rational>> G;  // G[a][b] = ⟨P^τ_{idx[a]}, P_{idx[b]}⟩
};

DegreeData degree_data(const SymmetryContext& ctx, DirichletMoments& moments, unsigned n) {
  DegreeData dd;
  dd.idx = jacobi_indices_of_degree(ctx.vars(), n);
  const TauOrientation o = probe_tau_orientation();
  for (const auto& nu : dd.idx) {
    dd.P.push_back(jacobi_basis(ctx, nu));
    dd.Pt.push_back(tau_basis(ctx, nu, o));
    dd.nP.push_back(moments.inner_product(dd.P.back(), dd.P.back()));
    dd.nPt.push_back(moments.inner_product(dd.Pt.back(), dd.Pt.back()));
  }
  for (const auto& pt : dd.Pt) {
    dd.G.emplace_back();
    for (const auto& p : dd.P) dd.G.back().push_back(moments.inner_product(pt, p));
  }
  return dd;
}

// Coefficients of f in {basis[a]} of one degree; the residual must vanish.
BasisExpansion expand_degree(DirichletMoments& moments, const MultiPoly& f, const DegreeData& dd, bool tau,
                             MultiPoly& residual) {
  BasisExpansion out;
  residual = f;
  const auto& basis = tau ? dd.Pt : dd.P;
  const auto& norms = tau ? dd.nPt : dd.nP;
  for (std::size_t a = 0; a < dd.idx.size(); ++a) {
    const Rational c = moments.inner_product(f, basis[a]) / norms[a];
    if (c.is_zero()) continue;
    out.emplace(dd.idx[a], c);
    residual -= basis[a] * c;
  }
  return out;
}

std::string expansion_str(const BasisExpansion& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [nu, c] : e) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ")*" << index_str(nu);
  }
  return os.str();
}

std::string signed_str(const SignedSquare& s) { return s.str(); }

Rational eig_M(const SymmetryContext& ctx, const GammaVector& gamma, const JacobiIndex& nu, int j) {
  const auto js = static_cast<std::size_t>(j);
  const Rational t(index_tail(nu, js));
  return -t * (t + gamma.tail_sum(js) + Rational(ctx.d + 1 - j));
}

}  // namespace

HatData hat_params(const SymmetryContext& ctx, const JacobiIndex& nu) {
  if (nu.size() != ctx.vars()) throw std::invalid_argument("hat_params: index length must equal d");
  HatData h;
  h.beta_hat = beta_with_gamma_tangent(hat_beta_of(lift_gamma(ctx.gamma)));
  h.nu_hat = nu_hat_of(nu);
  return h;
}

HatData hat_params(const SymmetryContext& ctx, const JacobiIndex& nu, const JacobiIndex& mu) {
  HatData h = hat_params(ctx, nu);
  h.mu_bar = mu_bar_of(mu);
  return h;
}

TildeData tilde_params(const SymmetryContext& ctx, const JacobiIndex& mu, unsigned n) {
  if (mu.size() != ctx.vars()) throw std::invalid_argument("tilde_params: index length must equal d");
  if (index_sum(mu) != n) throw std::invalid_argument("tilde_params: |mu| must equal n");
  TildeData t;
  t.beta_tilde = beta_with_gamma_tangent(tilde_beta_of(lift_gamma(ctx.gamma), n));
  t.mu_tilde = mu_tilde_of(mu);
  t.n = n;
  return t;
}

Rational g_factor(const SymmetryContext& ctx, const JacobiIndex& mu) {
  if (mu.size() != ctx.vars()) throw std::invalid_argument("g_factor: index length must equal d");
  return resolve_in_gamma(ctx.gamma, [&](const auto& g) { return g_fraction(g, mu); });
}

SignedSquare::SignedSquare(int s, Rational sq) : sign(s), square(std::move(sq)) {
  if (square.is_zero()) sign = 0;
  if (sign > 1 || sign < -1) throw std::invalid_argument("SignedSquare: sign must be -1, 0 or 1");
}

std::string SignedSquare::str() const {
  if (sign == 0) return "0";
  return std::string(sign > 0 ? "+" : "-") + "sqrt(" + square.str() + ")";
}

TransitionMatrix transition_direct(const SymmetryContext& ctx, unsigned n) {
  require_dirichlet_parameters(ctx);
  DirichletMoments moments(ctx);
  const DegreeData dd = degree_data(ctx, moments, n);
  TransitionMatrix m;
  m.d = ctx.d;
  m.n = n;
  m.indices = dd.idx;
  for (std::size_t a = 0; a < dd.idx.size(); ++a) {
    m.entries.emplace_back();
    for (std::size_t b = 0; b < dd.idx.size(); ++b) {
      const Rational& g = dd.G[a][b];
      m.entries.back().emplace_back(g.sign(), g * g / (dd.nPt[a] * dd.nP[b]));
    }
  }
  return m;
}

SignedSquare transition_via_56(const SymmetryContext& ctx, const JacobiIndex& nu, const JacobiIndex& mu) {
  require_pair(ctx, nu, mu);
  const unsigned n = index_sum(nu);
  const std::size_t k = ctx.vars() - 1;
  const auto z = nu_hat_of(nu);
  const RacahIndex idx = mu_bar_of(mu);
  return signed_in_gamma(ctx.gamma, n % 2 ? -1 : 1, [&](const auto& g) {
    using F = typename std::decay_t<decltype(g)>::value_type;
    const auto beta = hat_beta_of(g);
    auto f = racah_detail::weight<F>(as_ints(z), beta);
    const F r = racah_detail::racah<F>(k, idx, as_field<F>(z), beta);
    f.mul(r * r);
    f.div(racah_detail::norm_sq<F>(k, idx, n, beta), "||R||^2");
    return std::make_pair(f, r);
  });
}

SignedSquare transition_via_57(const SymmetryContext& ctx, const JacobiIndex& nu, const JacobiIndex& mu) {
  require_pair(ctx, nu, mu);
  const unsigned n = index_sum(mu);
  const std::size_t k = ctx.vars() - 1;
  const auto z = mu_tilde_of(mu);
  const RacahIndex idx(nu.begin(), nu.end() - 1);
  return signed_in_gamma(ctx.gamma, n % 2 ? -1 : 1, [&](const auto& g) {
    using F = typename std::decay_t<decltype(g)>::value_type;
    const auto beta = tilde_beta_of(g, n);
    auto f = racah_detail::weight<F>(as_ints(z), beta);
    const F r = racah_detail::racah<F>(k, idx, as_field<F>(z), beta);
    f.mul(r * r);
    f.div(racah_detail::norm_sq<F>(k, idx, n, beta), "||R||^2");
    return std::make_pair(f, r);
  });
}

nlohmann::json transition_json(const SymmetryContext& ctx, const TransitionMatrix& m) {
  nlohmann::json j;
  j["d"] = m.d;
  j["n"] = m.n;
  j["gamma"] = rationals_json(ctx.gamma.values());
  j["entries"] = nlohmann::json::array();
  for (std::size_t a = 0; a < m.indices.size(); ++a)
    for (std::size_t b = 0; b < m.indices.size(); ++b)
      j["entries"].push_back({{"nu", index_json(m.indices[a])},
                              {"mu", index_json(m.indices[b])},
                              {"sign", m.entries[a][b].sign},
                              {"square", m.entries[a][b].square.str()}});
  return j;
}

BasisExpansion index_operator_apply(const SymmetryContext& ctx, IndexSide side, int j, const BasisExpansion& c,
                                    unsigned n) {
  const int d = ctx.d;
  if (j < 2 || j > d) throw std::invalid_argument("index_operator_apply: j must lie in 2..d");
  const std::size_t order = static_cast<std::size_t>(side == IndexSide::Hat ? d + 1 - j : j - 1);
  BasisExpansion out;
  for (const auto& [nu, cv] : c) {
    if (index_sum(nu) != n) throw std::invalid_argument("index_operator_apply: family not supported on |nu| = n");
    if (cv.is_zero()) continue;
    LatticePoint z;
    BetaVector beta;
    if (side == IndexSide::Hat) {
      const HatData h = hat_params(ctx, nu);
      z = as_point(h.nu_hat);
      beta = h.beta_hat;
    } else {
      const TildeData t = tilde_params(ctx, nu, n);
      z = as_point(t.mu_tilde);
      beta = t.beta_tilde;
    }
    for (const auto& term : L_terms(order, z, beta)) {
      std::vector<int> shifted(nu.begin(), nu.end());
      for (std::size_t l = 1; l <= order; ++l) {
        const int s = term.shift[l - 1];
        if (side == IndexSide::Hat) {
          shifted[static_cast<std::size_t>(d) - l] += s;  // ν_{d+1-l}
          shifted[static_cast<std::size_t>(d) - l - 1] -= s;  // ν_{d-l}
        } else {
          shifted[l - 1] += s;  // μ_l
          shifted[l] -= s;      // μ_{l+1}
        }
      }
      bool inside = true;
      for (int v : shifted) inside = inside && v >= 0;
      if (!inside) {
        if (!term.coeff.is_zero())
          throw std::logic_error("index_operator_apply: shift out of N_0^d from " + index_str(nu) +
                                 " carries coefficient " + term.coeff.str());
        continue;
      }
      if (term.coeff.is_zero()) continue;
      out[JacobiIndex(shifted.begin(), shifted.end())] += cv * term.coeff;
    }
    out[nu] -= cv * L_constant(order, z, beta);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

VerificationReport check_transition(const SymmetryContext& ctx, unsigned n) {
  VerificationReport rep("transition");
  require_dirichlet_parameters(ctx);
  const auto base = context_params(ctx);
  rep.add_note("square roots of weights and norms are taken positive; the sign of an entry is (-1)^n sign(R)");
  DirichletMoments moments(ctx);
  for (unsigned m = 0; m <= n; ++m) {
    const DegreeData dd = degree_data(ctx, moments, m);
    const std::size_t sz = dd.idx.size();
    auto params = base;
    params["n"] = m;
    params["size"] = sz;

    // Σ_μ G(ν,μ)G(ν',μ)/||P_μ||² = δ ||P^τ_ν||², and the same over ν for columns.
    std::string rows, cols;
    for (std::size_t a = 0; a < sz; ++a)
      for (std::size_t b = 0; b < sz; ++b) {
        Rational r(0), c(0);
        for (std::size_t t = 0; t < sz; ++t) {
          r += dd.G[a][t] * dd.G[b][t] / dd.nP[t];
          c += dd.G[t][a] * dd.G[t][b] / dd.nPt[t];
        }
        const Rational r_want = a == b ? dd.nPt[a] : Rational(0);
        const Rational c_want = a == b ? dd.nP[a] : Rational(0);
        if (rows.empty() && r != r_want)
          rows = "rows " + index_str(dd.idx[a]) + ", " + index_str(dd.idx[b]) + ": " + r.str() + " != " + r_want.str();
        if (cols.empty() && c != c_want)
          cols = "columns " + index_str(dd.idx[a]) + ", " + index_str(dd.idx[b]) + ": " + c.str() +
                 " != " + c_want.str();
      }
    rep.record("orthonormal rows, degree " + std::to_string(m), params, rows.empty(), rows);
    rep.record("orthonormal columns, degree " + std::to_string(m), params, cols.empty(), cols);

    if (ctx.d < 2) continue;
    std::string w56, w57, wnorm, wdeg;
    // observed value of the product; it depends on the degree only
    const Rational shift = ctx.gamma.sum() + Rational(ctx.d);
    const Rational per_degree = shift / (shift + Rational(2 * m));
    for (std::size_t a = 0; a < sz; ++a) {
      const auto& nu = dd.idx[a];
      try {
        const HatData h = hat_params(ctx, nu);
        const Rational rho = resolve_in_gamma(ctx.gamma, [&](const auto& g) {
          using F = typename std::decay_t<decltype(g)>::value_type;
          return racah_detail::weight<F>(as_ints(h.nu_hat), hat_beta_of(g));
        });
        const Rational prod = dd.nPt[a] * rho;
        if (wnorm.empty() && prod != Rational(1))
          wnorm = index_str(nu) + ": ||P^tau||^2 rho = " + prod.str();
        if (wdeg.empty() && prod != per_degree)
          wdeg = index_str(nu) + ": ||P^tau||^2 rho = " + prod.str() + " != " + per_degree.str();
      } catch (const DegeneracyError& e) {
        if (wnorm.empty()) wnorm = index_str(nu) + ": " + e.what();
        if (wdeg.empty()) wdeg = index_str(nu) + ": " + e.what();
      }
      for (std::size_t b = 0; b < sz; ++b) {
        const auto& mu = dd.idx[b];
        const SignedSquare direct(dd.G[a][b].sign(), dd.G[a][b] * dd.G[a][b] / (dd.nPt[a] * dd.nP[b]));
        auto compare = [&](std::string& w, auto&& fn) {
          if (!w.empty()) return;
          try {
            const SignedSquare v = fn(ctx, nu, mu);
            if (!(v == direct))
              w = "nu=" + index_str(nu) + " mu=" + index_str(mu) + ": formula " + signed_str(v) + " but direct " +
                  signed_str(direct);
          } catch (const DegeneracyError& e) {
            w = "nu=" + index_str(nu) + " mu=" + index_str(mu) + ": " + e.what();
          }
        };
        compare(w56, transition_via_56);
        compare(w57, transition_via_57);
      }
    }
    rep.record("hat-side Racah formula = direct, degree " + std::to_string(m), params, w56.empty(), w56);
    rep.record("tilde-side Racah formula = direct, degree " + std::to_string(m), params, w57.empty(), w57);
    rep.record("||P^tau||^2 rho(nu_hat; beta_hat) = 1, degree " + std::to_string(m), params, wnorm.empty(), wnorm);
    auto pdeg = params;
    pdeg["value"] = per_degree.str();
    rep.record("||P^tau||^2 rho(nu_hat; beta_hat) = (|gamma|+d)/(|gamma|+d+2n), degree " + std::to_string(m), pdeg,
               wdeg.empty(), wdeg);
  }
  return rep;
}

VerificationReport check_prop51_thm53(const SymmetryContext& ctx, unsigned n) {
  VerificationReport rep("thm53");
  require_dirichlet_parameters(ctx);
  if (ctx.d < 2) throw std::invalid_argument("thm53 needs d >= 2");
  const auto base = context_params(ctx);
  const int d = ctx.d;
  const Permutation tau = Permutation::cycle(d + 1);
  std::vector<WeylOp> M, Mt;
  for (int j = 1; j <= d; ++j) {
    M.push_back(make_M(ctx, j));
    Mt.push_back(make_M_sigma(ctx, j, tau));
  }
  DirichletMoments moments(ctx);

  for (unsigned m = 0; m <= n; ++m) {
    const DegreeData dd = degree_data(ctx, moments, m);
    const std::size_t sz = dd.idx.size();
    const Rational mr(m);
    const std::vector<Rational> bt = tilde_beta_of(ctx.gamma.values(), m);
    const std::vector<Rational> bh = hat_beta_of(ctx.gamma.values());
    auto params = base;
    params["n"] = m;

    // M_1 and M^τ_1 on both bases
    const Rational e1 = -mr * (mr + ctx.gamma.sum() + Rational(d));
    std::string w1;
    for (std::size_t a = 0; a < sz && w1.empty(); ++a) {
      const std::pair<const WeylOp*, const MultiPoly*> cases[] = {
          {&M[0], &dd.P[a]}, {&Mt[0], &dd.P[a]}, {&Mt[0], &dd.Pt[a]}, {&M[0], &dd.Pt[a]}};
      for (const auto& [op, p] : cases)
        if (weyl_apply(*op, *p) != *p * e1) {
          w1 = "index " + index_str(dd.idx[a]) + ": image " + weyl_apply(*op, *p).str();
          break;
        }
    }
    auto p1 = params;
    p1["eigenvalue"] = e1.str();
    rep.record("M1 and M1^tau eigenvalue on both bases, degree " + std::to_string(m), p1, w1.empty(), w1);

    // M_j P_μ through w_{j-1}(μ̃; β̃(n)); M^τ_j P^τ_ν through w_{d+1-j}(ν̂; β̂)
    std::string wb, wc;
    for (std::size_t a = 0; a < sz; ++a) {
      const auto mt = mu_tilde_of(dd.idx[a]);
      const auto nh = nu_hat_of(dd.idx[a]);
      for (int j = 2; j <= d; ++j) {
        const auto js = static_cast<std::size_t>(j);
        const Rational z(mt[js - 2]);
        const Rational eb = mr * (mr + bt[js - 1]) - z * (z + bt[js - 1]);
        if (wb.empty() && weyl_apply(M[js - 1], dd.P[a]) != dd.P[a] * eb)
          wb = "M" + std::to_string(j) + " P" + index_str(dd.idx[a]) + " != (" + eb.str() + ") P";
        const std::size_t l = static_cast<std::size_t>(d + 1 - j);
        const Rational zh(nh[l - 1]);
        const Rational ec = -zh * (zh + bh[l]);
        if (wc.empty() && weyl_apply(Mt[js - 1], dd.Pt[a]) != dd.Pt[a] * ec)
          wc = "Mtau" + std::to_string(j) + " Ptau" + index_str(dd.idx[a]) + " != (" + ec.str() + ") Ptau";
      }
    }
    rep.record("M_j on P via tilde Racah eigenvalue, degree " + std::to_string(m), params, wb.empty(), wb);
    rep.record("M^tau_j on P^tau via hat Racah eigenvalue, degree " + std::to_string(m), params, wc.empty(), wc);

    // non-diagonal actions against the index-side operators
    std::string wd, we;
    for (std::size_t a = 0; a < sz; ++a) {
      const auto& nu = dd.idx[a];
      for (int j = 2; j <= d; ++j) {
        const auto js = static_cast<std::size_t>(j);
        MultiPoly residual;
        if (wd.empty()) {
          try {
            const auto lhs = expand_degree(moments, weyl_apply(M[js - 1], dd.Pt[a]), dd, true, residual);
            const auto rhs = index_operator_apply(ctx, IndexSide::Hat, j, {{nu, Rational(1)}}, m);
            if (!residual.is_zero())
              wd = "M" + std::to_string(j) + " Ptau" + index_str(nu) + " leaves degree " + std::to_string(m);
            else if (lhs != rhs)
              wd = "M" + std::to_string(j) + " Ptau" + index_str(nu) + " = " + expansion_str(lhs) +
                   " but the index operator gives " + expansion_str(rhs);
          } catch (const std::exception& e) {
            wd = "M" + std::to_string(j) + " Ptau" + index_str(nu) + ": " + e.what();
          }
        }
        if (we.empty()) {
          try {
            const auto lhs = expand_degree(moments, weyl_apply(Mt[js - 1], dd.P[a]), dd, false, residual);
            auto rhs = index_operator_apply(ctx, IndexSide::Tilde, j, {{nu, Rational(1)}}, m);
            const Rational g_nu = g_factor(ctx, nu);
            for (auto& [mu, c] : rhs) c *= g_factor(ctx, mu) / g_nu;
            rhs[nu] += mr * (mr + bt[js] - bt[0] - Rational(1));
            std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
            if (!residual.is_zero())
              we = "Mtau" + std::to_string(j) + " P" + index_str(nu) + " leaves degree " + std::to_string(m);
            else if (lhs != rhs)
              we = "Mtau" + std::to_string(j) + " P" + index_str(nu) + " = " + expansion_str(lhs) +
                   " but the conjugated index operator gives " + expansion_str(rhs);
          } catch (const std::exception& e) {
            we = "Mtau" + std::to_string(j) + " P" + index_str(nu) + ": " + e.what();
          }
        }
      }
    }
    rep.record("M_j on P^tau = hat index operator, degree " + std::to_string(m), params, wd.empty(), wd);
    rep.record("M^tau_j on P = g-conjugated tilde index operator, degree " + std::to_string(m), params, we.empty(),
               we);
  }
  return rep;
}

VerificationReport check_duality(const SymmetryContext& ctx, unsigned n) {
  VerificationReport rep("duality");
  require_dirichlet_parameters(ctx);
  if (ctx.d < 2) throw std::invalid_argument("duality needs d >= 2");
  const auto base = context_params(ctx);
  const int d = ctx.d;
  const Permutation tau = Permutation::cycle(d + 1);
  const GammaVector tg = permute(ctx.gamma, tau);
  DirichletMoments moments(ctx);

  std::vector<DegreeData> deg;
  for (unsigned m = 0; m <= n; ++m) deg.push_back(degree_data(ctx, moments, m));

  for (int family = 0; family < 2; ++family) {
    const bool is_tau = family == 1;
    for (int j = 1; j <= d; ++j) {
      const WeylOp N = is_tau ? make_M_sigma(ctx, j, tau) : make_M(ctx, j);
      const std::string name = std::string(is_tau ? "Mtau" : "M") + std::to_string(j);
      std::string w;
      for (const auto& da : deg)
        for (const auto& db : deg)
          for (std::size_t a = 0; a < da.idx.size() && w.empty(); ++a)
            for (std::size_t b = 0; b < db.idx.size() && w.empty(); ++b) {
              const Rational l = moments.inner_product(weyl_apply(N, da.Pt[a]), db.P[b]);
              const Rational r = moments.inner_product(da.Pt[a], weyl_apply(N, db.P[b]));
              if (l != r)
                w = "nu=" + index_str(da.idx[a]) + " mu=" + index_str(db.idx[b]) + ": " + l.str() + " != " + r.str();
            }
      auto params = base;
      params["n"] = n;
      params["operator"] = name;
      rep.record(name + " moves between the bases", params, w.empty(), w);
    }
  }

  // Difference equations for G(ν, μ) = ⟨P^τ_ν, P_μ⟩ in ν (hat) and in μ (tilde).
  for (unsigned m = 0; m <= n; ++m) {
    const DegreeData& dd = deg[m];
    const std::size_t sz = dd.idx.size();
    std::map<JacobiIndex, std::size_t> pos;
    for (std::size_t a = 0; a < sz; ++a) pos[dd.idx[a]] = a;
    const Rational mr(m);
    const auto bt = tilde_beta_of(ctx.gamma.values(), m);
    for (int j = 2; j <= d; ++j) {
      const auto js = static_cast<std::size_t>(j);
      std::string wh, wt;
      try {
        for (std::size_t a = 0; a < sz; ++a) {
          const auto& nu = dd.idx[a];
          const auto hat = index_operator_apply(ctx, IndexSide::Hat, j, {{nu, Rational(1)}}, m);
          auto til = index_operator_apply(ctx, IndexSide::Tilde, j, {{nu, Rational(1)}}, m);
          const Rational g_nu = g_factor(ctx, nu);
          for (auto& [mu, c] : til) c *= g_factor(ctx, mu) / g_nu;
          til[nu] += mr * (mr + bt[js] - bt[0] - Rational(1));
          for (std::size_t b = 0; b < sz && wh.empty(); ++b) {
            // Σ_ν' A(ν→ν') G(ν', μ) = eig_j(μ) G(ν, μ)
            Rational lhs(0);
            for (const auto& [nu2, c] : hat) lhs += c * dd.G[pos.at(nu2)][b];
            const Rational rhs = eig_M(ctx, ctx.gamma, dd.idx[b], j) * dd.G[a][b];
            if (lhs != rhs) wh = "nu=" + index_str(nu) + " mu=" + index_str(dd.idx[b]) + ": " + lhs.str() + " != " + rhs.str();
          }
          for (std::size_t b = 0; b < sz && wt.empty(); ++b) {
            // Σ_μ' T(μ→μ') G(ν, μ') = eig^τ_j(ν) G(ν, μ), here with μ = idx[a], ν = idx[b]
            Rational lhs(0);
            for (const auto& [mu2, c] : til) lhs += c * dd.G[b][pos.at(mu2)];
            const Rational rhs = eig_M(ctx, tg, dd.idx[b], j) * dd.G[b][a];
            if (lhs != rhs) wt = "mu=" + index_str(nu) + " nu=" + index_str(dd.idx[b]) + ": " + lhs.str() + " != " + rhs.str();
          }
        }
      } catch (const std::exception& e) {
        if (wh.empty()) wh = e.what();
        if (wt.empty()) wt = e.what();
      }
      auto params = base;
      params["n"] = m;
      params["j"] = j;
      rep.record("difference equation in nu, j=" + std::to_string(j) + ", degree " + std::to_string(m), params,
                 wh.empty(), wh);
      rep.record("difference equation in mu, j=" + std::to_string(j) + ", degree " + std::to_string(m), params,
                 wt.empty(), wt);
    }
  }
  return rep;
}

}  // namespace superint

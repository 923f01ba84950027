#include "superint/simplex.hpp"

#include "superint/pochhammer.hpp"

#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace superint {

namespace {

JacobiIndex to_index(const Monomial& m) {
  JacobiIndex nu(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) nu[i] = m[i];
  return nu;
}

std::string eig_witness(const MultiPoly& image, const MultiPoly& p, const Rational& eig) {
  return "M P - (" + eig.str() + ") P = " + (image - p * eig).str();
}

}  // namespace

std::vector<JacobiIndex> jacobi_indices_of_degree(std::size_t d, unsigned n) {
  std::vector<JacobiIndex> out;
  for (const auto& m : monomials_of_degree(d, n)) out.push_back(to_index(m));
  return out;
}

std::vector<JacobiIndex> jacobi_indices_up_to_degree(std::size_t d, unsigned n) {
  std::vector<JacobiIndex> out;
  for (const auto& m : monomials_up_to_degree(d, n)) out.push_back(to_index(m));
  return out;
}

unsigned index_sum(const JacobiIndex& nu) {
  unsigned s = 0;
  for (unsigned v : nu) s += v;
  return s;
}

unsigned index_tail(const JacobiIndex& nu, std::size_t j) {
  unsigned s = 0;
  for (std::size_t i = j; i <= nu.size(); ++i) s += nu[i - 1];
  return s;
}

unsigned index_head(const JacobiIndex& nu, std::size_t j) {
  unsigned s = 0;
  for (std::size_t i = 1; i <= j && i <= nu.size(); ++i) s += nu[i - 1];
  return s;
}

nlohmann::json index_json(const JacobiIndex& nu) { return nlohmann::json(nu); }

std::string index_str(const JacobiIndex& nu) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < nu.size(); ++i) os << (i ? "," : "") << nu[i];
  os << ')';
  return os.str();
}

void require_dirichlet_parameters(const SymmetryContext& ctx) {
  for (const auto& g : ctx.gamma.values())
    if (g <= Rational(-1)) throw std::domain_error("Dirichlet weight needs every gamma_j > -1, got " + g.str());
}

DirichletMoments::DirichletMoments(const SymmetryContext& ctx) : ctx_(ctx), rising_(ctx.vars() + 1) {
  require_dirichlet_parameters(ctx);
}

const Rational& DirichletMoments::rise(std::size_t slot, unsigned n) {
  auto& row = rising_[slot];
  if (row.empty()) row.emplace_back(1);
  const Rational base = slot < ctx_.vars()
                            ? ctx_.gamma(slot + 1) + Rational(1)
                            : ctx_.gamma.sum() + Rational(ctx_.d + 1);
  while (row.size() <= n) row.push_back(row.back() * (base + Rational(row.size() - 1)));
  return row[n];
}

Rational DirichletMoments::operator()(const Monomial& mu) {
  check_same_dim(mu.dim(), ctx_.vars(), "dirichlet_moment");
  Rational num(1);
  for (std::size_t i = 0; i < mu.dim(); ++i) num *= rise(i, mu[i]);
  return num / rise(ctx_.vars(), mu.degree());
}

Rational DirichletMoments::inner_product(const MultiPoly& p, const MultiPoly& q) {
  check_same_dim(p.dim(), ctx_.vars(), "inner_product");
  check_same_dim(q.dim(), ctx_.vars(), "inner_product");
  Rational s(0);
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms()) s += ca * cb * (*this)(a + b);
  return s;
}

Rational dirichlet_moment(const SymmetryContext& ctx, const Monomial& mu) { return DirichletMoments(ctx)(mu); }

Rational inner_product(const SymmetryContext& ctx, const MultiPoly& p, const MultiPoly& q) {
  return DirichletMoments(ctx).inner_product(p, q);
}

std::vector<Rational> jacobi_1d(unsigned n, const Rational& alpha, const Rational& beta) {
  const Rational lead_den = pochhammer(beta + Rational(1), n);
  if (lead_den.is_zero())
    throw std::domain_error("jacobi_1d: (beta+1)_n vanishes for beta = " + beta.str());
  // (α+1)_n · (-n)_k (n+α+β+1)_k / ((α+1)_k k!) = (-n)_k (n+α+β+1)_k (α+1+k)_{n-k} / k!
  std::vector<Rational> coeffs(n + 1, Rational(0));
  const Rational a = Rational(n) + alpha + beta + Rational(1);
  for (unsigned k = 0; k <= n; ++k) {
    const Rational ck = pochhammer(Rational(-static_cast<int>(n)), k) * pochhammer(a, k) *
                        pochhammer(alpha + Rational(1 + k), n - k) / factorial(k) / lead_den;
    // ((1-t)/2)^k = 2^{-k} Σ_i C(k,i) (-t)^i
    const Rational scale = ck / pow(Rational(2), static_cast<int>(k));
    for (unsigned i = 0; i <= k; ++i) {
      const Rational term = scale * binomial(k, i);
      coeffs[i] += (i % 2 ? -term : term);
    }
  }
  return coeffs;
}

std::vector<Rational> a_params(const SymmetryContext& ctx, const JacobiIndex& nu) {
  if (nu.size() != ctx.vars()) throw std::invalid_argument("a_params: index length must equal d");
  std::vector<Rational> a;
  for (std::size_t j = 1; j <= ctx.vars(); ++j)
    a.push_back(ctx.gamma.tail_sum(j + 1) + Rational(2 * index_tail(nu, j + 1)) +
                Rational(ctx.d - static_cast<int>(j)));
  return a;
}

MultiPoly jacobi_basis(const SymmetryContext& ctx, const JacobiIndex& nu) {
  const auto a = a_params(ctx, nu);
  const std::size_t d = ctx.vars();
  MultiPoly result = MultiPoly::constant(d, Rational(1));
  for (std::size_t k = 1; k <= d; ++k) {
    const unsigned m = nu[k - 1];
    if (m == 0) continue;
    const auto q = jacobi_1d(m, a[k - 1], ctx.gamma(k));
    const MultiPoly den = MultiPoly::one_minus_sum(d, k - 1);
    const MultiPoly num = MultiPoly::variable(d, k - 1) * Rational(2) - den;
    result *= poly_compose_projective(q, num, den, m);
  }
  return result;
}

Rational jacobi_norm_sq(const SymmetryContext& ctx, const JacobiIndex& nu) {
  const auto a = a_params(ctx, nu);
  Rational r = Rational(1) / pochhammer(ctx.gamma.sum() + Rational(ctx.d + 1), 2 * index_sum(nu));
  for (std::size_t j = 1; j <= ctx.vars(); ++j) {
    const unsigned v = nu[j - 1];
    const Rational& g = ctx.gamma(j);
    r *= pochhammer(g + a[j - 1] + Rational(v + 1), v) * pochhammer(a[j - 1] + Rational(1), v) * factorial(v) /
         pochhammer(g + Rational(1), v);
  }
  return r;
}

const char* orientation_name(TauOrientation o) {
  return o == TauOrientation::Forward ? "forward (x_i -> x_tau(i))" : "backward (x_i -> x_tau^-1(i))";
}

MultiPoly tau_basis(const SymmetryContext& ctx, const JacobiIndex& nu, TauOrientation orientation) {
  const int n = ctx.d + 1;
  const Permutation tau = Permutation::cycle(n);
  const SymmetryContext permuted(ctx.d, permute(ctx.gamma, tau));
  const MultiPoly p = jacobi_basis(permuted, nu);

  const std::size_t d = ctx.vars();
  auto coord = [&](int a) {
    return a == n ? MultiPoly::one_minus_sum(d, d) : MultiPoly::variable(d, static_cast<std::size_t>(a - 1));
  };
  const Permutation sigma = orientation == TauOrientation::Forward ? tau : tau.inverse();
  std::vector<MultiPoly> images;
  for (int a = 1; a <= ctx.d; ++a) images.push_back(coord(sigma(a)));
  return poly_substitute_vars(p, images);
}

Rational tau_norm_sq(const SymmetryContext& ctx, const JacobiIndex& nu) {
  return jacobi_norm_sq(SymmetryContext(ctx.d, permute(ctx.gamma, Permutation::cycle(ctx.d + 1))), nu);
}

namespace {

bool tau_spectral_holds(const SymmetryContext& ctx, TauOrientation o, unsigned max_degree) {
  const Permutation tau = Permutation::cycle(ctx.d + 1);
  const GammaVector tg = permute(ctx.gamma, tau);
  for (const auto& nu : jacobi_indices_up_to_degree(ctx.vars(), max_degree)) {
    const MultiPoly p = tau_basis(ctx, nu, o);
    for (int j = 1; j <= ctx.d; ++j) {
      const unsigned t = index_tail(nu, static_cast<std::size_t>(j));
      const Rational eig = -Rational(t) * (Rational(t) + tg.tail_sum(static_cast<std::size_t>(j)) +
                                           Rational(ctx.d + 1 - j));
      if (!(weyl_apply(make_M_sigma(ctx, j, tau), p) == p * eig)) return false;
    }
  }
  return true;
}

}  // namespace

TauOrientation probe_tau_orientation() {
  static std::once_flag once;
  static TauOrientation chosen = TauOrientation::Forward;
  std::call_once(once, [] {
    const SymmetryContext ctx(2, GammaVector({Rational(1, 3), Rational(2, 5), Rational(3, 7)}));
    const bool fwd = tau_spectral_holds(ctx, TauOrientation::Forward, 2);
    const bool bwd = tau_spectral_holds(ctx, TauOrientation::Backward, 2);
    if (fwd == bwd)
      throw std::logic_error(std::string("tau orientation probe is inconclusive: forward ") + (fwd ? "passes" : "fails") +
                             ", backward " + (bwd ? "passes" : "fails"));
    chosen = fwd ? TauOrientation::Forward : TauOrientation::Backward;
  });
  return chosen;
}

namespace {

template <class BasisFn, class NormFn>
BasisExpansion expand_with(const SymmetryContext& ctx, const MultiPoly& p, unsigned n, BasisFn basis, NormFn norm) {
  if (p.degree() > static_cast<int>(n))
    throw std::invalid_argument("expand_in_basis: polynomial degree exceeds n");
  BasisExpansion out;
  if (p.is_zero()) return out;
  DirichletMoments moments(ctx);
  for (const auto& mu : jacobi_indices_up_to_degree(ctx.vars(), n)) {
    const Rational c = moments.inner_product(p, basis(mu)) / norm(mu);
    if (!c.is_zero()) out.emplace(mu, c);
  }
  return out;
}

}  // namespace

BasisExpansion expand_in_basis(const SymmetryContext& ctx, const MultiPoly& p, unsigned n) {
  return expand_with(
      ctx, p, n, [&](const JacobiIndex& mu) { return jacobi_basis(ctx, mu); },
      [&](const JacobiIndex& mu) { return jacobi_norm_sq(ctx, mu); });
}

BasisExpansion expand_in_tau_basis(const SymmetryContext& ctx, const MultiPoly& p, unsigned n) {
  const TauOrientation o = probe_tau_orientation();
  return expand_with(
      ctx, p, n, [&](const JacobiIndex& mu) { return tau_basis(ctx, mu, o); },
      [&](const JacobiIndex& mu) { return tau_norm_sq(ctx, mu); });
}

VerificationReport check_spectral(const SymmetryContext& ctx, unsigned n) {
  VerificationReport rep("spectral");
  const auto base = context_params(ctx);
  const std::size_t d = ctx.vars();
  const Permutation tau = Permutation::cycle(ctx.d + 1);
  const GammaVector tg = permute(ctx.gamma, tau);
  const TauOrientation o = probe_tau_orientation();
  rep.add_note(std::string("tau orientation: ") + orientation_name(o));

  std::vector<WeylOp> M, Mt;
  for (int j = 1; j <= ctx.d; ++j) {
    M.push_back(make_M(ctx, j));
    Mt.push_back(make_M_sigma(ctx, j, tau));
  }

  for (const auto& nu : jacobi_indices_up_to_degree(d, n)) {
    const MultiPoly p = jacobi_basis(ctx, nu);
    const MultiPoly pt = tau_basis(ctx, nu, o);
    for (int j = 1; j <= ctx.d; ++j) {
      const auto js = static_cast<std::size_t>(j);
      const Rational t(index_tail(nu, js));
      auto params = base;
      params["nu"] = index_json(nu);
      params["j"] = j;

      const Rational eig = -t * (t + ctx.gamma.tail_sum(js) + Rational(ctx.d + 1 - j));
      const MultiPoly img = weyl_apply(M[js - 1], p);
      params["eigenvalue"] = eig.str();
      rep.record("M" + std::to_string(j) + " P" + index_str(nu), params, img == p * eig,
                 eig_witness(img, p, eig));

      const Rational eig_t = -t * (t + tg.tail_sum(js) + Rational(ctx.d + 1 - j));
      const MultiPoly img_t = weyl_apply(Mt[js - 1], pt);
      params["eigenvalue"] = eig_t.str();
      rep.record("Mtau" + std::to_string(j) + " Ptau" + index_str(nu), params, img_t == pt * eig_t,
                 eig_witness(img_t, pt, eig_t));
    }
  }

  // M_1 x^ν = -|ν|(|ν|+|γ|+d) x^ν modulo lower degree.
  for (const auto& m : monomials_up_to_degree(d, n)) {
    const MultiPoly xm = MultiPoly::monomial(m);
    const Rational k(m.degree());
    const Rational eig = -k * (k + ctx.gamma.sum() + Rational(ctx.d));
    const MultiPoly rest = weyl_apply(M[0], xm) - xm * eig;
    auto params = base;
    params["monomial"] = xm.str();
    rep.record("triangular M1 " + xm.str(), params, rest.degree() < static_cast<int>(m.degree()),
               "top-degree remainder: " + rest.str());
  }

  // t_{i,j} P_ν stays in the span of {P_μ : |μ| = |ν|}.
  DirichletMoments moments(ctx);
  for (int i = 1; i <= ctx.d + 1; ++i)
    for (int j = i + 1; j <= ctx.d + 1; ++j) {
      const WeylOp t = make_t(ctx, i, j);
      for (const auto& nu : jacobi_indices_up_to_degree(d, n)) {
        const unsigned deg = index_sum(nu);
        const MultiPoly img = weyl_apply(t, jacobi_basis(ctx, nu));
        std::string bad;
        for (const auto& mu : jacobi_indices_up_to_degree(d, deg)) {
          if (index_sum(mu) == deg) continue;
          const Rational c = moments.inner_product(img, jacobi_basis(ctx, mu));
          if (!c.is_zero()) bad += "<t P, P" + index_str(mu) + "> = " + c.str() + "; ";
        }
        auto params = base;
        params["nu"] = index_json(nu);
        rep.record("filtration t" + std::to_string(i) + std::to_string(j) + " P" + index_str(nu), params,
                   bad.empty(), bad);
      }
    }
  return rep;
}

VerificationReport check_selfadjoint(const SymmetryContext& ctx, unsigned n) {
  VerificationReport rep("selfadjoint");
  const auto base = context_params(ctx);
  const auto monos = monomials_up_to_degree(ctx.vars(), n);
  DirichletMoments moments(ctx);
  std::vector<MultiPoly> xs;
  for (const auto& m : monos) xs.push_back(MultiPoly::monomial(m));

  for (int i = 1; i <= ctx.d + 1; ++i)
    for (int j = i + 1; j <= ctx.d + 1; ++j) {
      const WeylOp t = make_t(ctx, i, j);
      std::vector<MultiPoly> images;
      for (const auto& x : xs) images.push_back(weyl_apply(t, x));
      std::size_t failures = 0;
      std::string witness;
      for (std::size_t a = 0; a < xs.size(); ++a)
        for (std::size_t b = a + 1; b < xs.size(); ++b) {
          const Rational lhs = moments.inner_product(images[a], xs[b]);
          const Rational rhs = moments.inner_product(xs[a], images[b]);
          if (lhs != rhs && failures++ == 0)
            witness = "<t " + xs[a].str() + ", " + xs[b].str() + "> = " + lhs.str() + " but <" + xs[a].str() +
                      ", t " + xs[b].str() + "> = " + rhs.str();
        }
      auto params = base;
      params["degree"] = n;
      params["pairs"] = xs.size() * (xs.size() - 1) / 2;
      rep.record("t" + std::to_string(i) + std::to_string(j) + " self-adjoint on monomials", params, failures == 0,
                 std::to_string(failures) + " failing pairs; first: " + witness);
    }
  return rep;
}

VerificationReport check_orthogonality(const SymmetryContext& ctx, unsigned n) {
  VerificationReport rep("orthogonality");
  const auto base = context_params(ctx);
  const std::size_t d = ctx.vars();
  const TauOrientation o = probe_tau_orientation();
  DirichletMoments moments(ctx);
  const auto indices = jacobi_indices_up_to_degree(d, n);

  auto gram = [&](const std::string& label, auto basis, auto norm) {
    std::vector<MultiPoly> ps;
    for (const auto& nu : indices) ps.push_back(basis(nu));
    for (std::size_t a = 0; a < ps.size(); ++a) {
      const Rational closed = norm(indices[a]);
      const Rational diag = moments.inner_product(ps[a], ps[a]);
      auto params = base;
      params["nu"] = index_json(indices[a]);
      params["norm_sq"] = closed.str();
      rep.record(label + " norm" + index_str(indices[a]), params, diag == closed,
                 "moment computation " + diag.str() + " vs closed form " + closed.str());
      std::string bad;
      for (std::size_t b = a + 1; b < ps.size(); ++b) {
        const Rational ip = moments.inner_product(ps[a], ps[b]);
        if (!ip.is_zero()) bad += "<" + label + index_str(indices[a]) + ", " + label + index_str(indices[b]) + "> = " +
                                  ip.str() + "; ";
      }
      params.erase("norm_sq");
      rep.record(label + " orthogonal row" + index_str(indices[a]), params, bad.empty(), bad);
    }
  };
  gram(
      "P", [&](const JacobiIndex& nu) { return jacobi_basis(ctx, nu); },
      [&](const JacobiIndex& nu) { return jacobi_norm_sq(ctx, nu); });
  gram(
      "Ptau", [&](const JacobiIndex& nu) { return tau_basis(ctx, nu, o); },
      [&](const JacobiIndex& nu) { return tau_norm_sq(ctx, nu); });

  // Pulling back along the coordinate permutation preserves the Dirichlet measure
  // once the parameters are permuted accordingly.
  const Permutation tau = Permutation::cycle(ctx.d + 1);
  const Permutation sigma = o == TauOrientation::Forward ? tau : tau.inverse();
  const SymmetryContext permuted(ctx.d, permute(ctx.gamma, sigma.inverse()));
  std::vector<MultiPoly> images;
  for (int a = 1; a <= ctx.d; ++a) {
    const int s = sigma(a);
    images.push_back(s == ctx.d + 1 ? MultiPoly::one_minus_sum(d, d)
                                    : MultiPoly::variable(d, static_cast<std::size_t>(s - 1)));
  }
  DirichletMoments permuted_moments(permuted);
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> coef(-5, 5);
  const auto monos = monomials_up_to_degree(d, std::min(n, 3u));
  for (int trial = 0; trial < 4; ++trial) {
    MultiPoly p(d), q(d);
    for (const auto& m : monos) {
      p.add_term(m, Rational(coef(rng)));
      q.add_term(m, Rational(coef(rng)));
    }
    const Rational lhs = permuted_moments.inner_product(poly_substitute_vars(p, images), poly_substitute_vars(q, images));
    const Rational rhs = moments.inner_product(p, q);
    auto params = base;
    params["trial"] = trial;
    rep.record("measure invariance sample " + std::to_string(trial), params, lhs == rhs,
               "permuted " + lhs.str() + " vs original " + rhs.str());
  }
  return rep;
}

}  // namespace superint

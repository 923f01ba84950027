#include "superint/pochhammer.hpp"
#include "superint/simplex.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace superint;
using superint::testing::c;
using superint::testing::random_poly;
using superint::testing::x;

namespace {

SymmetryContext ctx_of(int d, std::vector<Rational> g) { return SymmetryContext(d, GammaVector(std::move(g))); }

SymmetryContext zero_ctx(int d) { return ctx_of(d, std::vector<Rational>(static_cast<std::size_t>(d) + 1, Rational(0))); }

// Oracle: ∫ over the simplex by iterated antiderivatives, innermost variable
// last, upper limit 1 - (x_1 + ... + x_{k-1}).
Rational simplex_integral(const MultiPoly& p) {
  const std::size_t d = p.dim();
  MultiPoly cur = p;
  for (std::size_t k = d; k-- > 0;) {
    MultiPoly anti(d);
    for (const auto& [m, coef] : cur.terms()) {
      Monomial up = m;
      up.set(k, m[k] + 1);
      anti.add_term(up, coef / Rational(m[k] + 1));
    }
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < d; ++i)
      images.push_back(i == k ? MultiPoly::one_minus_sum(d, k) : MultiPoly::variable(d, i));
    cur = poly_substitute_vars(anti, images);
  }
  return cur.coeff(Monomial(d));
}

// Oracle inner product for nonnegative integer γ, where the weight is a polynomial.
Rational integer_weight_inner(const std::vector<int>& gamma, const MultiPoly& p, const MultiPoly& q) {
  const std::size_t d = p.dim();
  MultiPoly w = c(d, 1);
  for (std::size_t i = 0; i < d; ++i) w *= poly_pow(x(d, i), static_cast<unsigned>(gamma[i]));
  w *= poly_pow(MultiPoly::one_minus_sum(d, d), static_cast<unsigned>(gamma[d]));
  return simplex_integral(p * q * w) / simplex_integral(w);
}

// Oracle: exact ∫_{-1}^{1} of a univariate polynomial.
Rational interval_integral(const std::vector<Rational>& coeffs) {
  Rational s(0);
  for (std::size_t k = 0; k < coeffs.size(); k += 2) s += coeffs[k] * Rational(2) / Rational(k + 1);
  return s;
}

std::vector<Rational> poly1_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<Rational> poly1_pow(const std::vector<Rational>& a, int n) {
  std::vector<Rational> r{Rational(1)};
  for (int i = 0; i < n; ++i) r = poly1_mul(r, a);
  return r;
}

Rational poly1_eval(const std::vector<Rational>& a, const Rational& t) {
  Rational s(0);
  for (std::size_t i = a.size(); i-- > 0;) s = s * t + a[i];
  return s;
}

void expect_pass(const VerificationReport& r) { EXPECT_TRUE(r.pass()) << r.to_json(false).dump(2); }

}  // namespace

TEST(DirichletMoment, Examples) {
  EXPECT_EQ(dirichlet_moment(zero_ctx(2), Monomial(2)), Rational(1));
  EXPECT_EQ(dirichlet_moment(zero_ctx(1), Monomial(1, {2})), Rational(1, 3));
  EXPECT_EQ(dirichlet_moment(zero_ctx(2), Monomial(2, {1, 1})), Rational(1, 12));
  EXPECT_THROW(dirichlet_moment(ctx_of(1, {Rational(-1), Rational(0)}), Monomial(1)), std::domain_error);
}

TEST(DirichletMoment, MatchesIteratedIntegration) {
  const std::vector<int> gamma{1, 0, 2, 3};
  const auto ctx = ctx_of(3, {Rational(1), Rational(0), Rational(2), Rational(3)});
  for (const auto& m : monomials_up_to_degree(3, 3))
    EXPECT_EQ(dirichlet_moment(ctx, m), integer_weight_inner(gamma, MultiPoly::monomial(m), c(3, 1))) << m.degree();
}

TEST(InnerProduct, Examples) {
  const auto ctx = zero_ctx(2);
  EXPECT_EQ(inner_product(ctx, c(2, 1), c(2, 1)), Rational(1));
  EXPECT_EQ(inner_product(ctx, x(2, 0), x(2, 0)), Rational(1, 6));
  EXPECT_EQ(inner_product(ctx, x(2, 0) * Rational(3) - c(2, 1), x(2, 0) + x(2, 1) * Rational(2) - c(2, 1)),
            Rational(0));
}

TEST(Jacobi1d, Examples) {
  EXPECT_EQ(jacobi_1d(0, Rational(3), Rational(5)), std::vector<Rational>{Rational(1)});
  EXPECT_EQ(jacobi_1d(1, Rational(0), Rational(0)), (std::vector<Rational>{Rational(0), Rational(1)}));
  EXPECT_EQ(jacobi_1d(1, Rational(1), Rational(0)), (std::vector<Rational>{Rational(1, 2), Rational(3, 2)}));
}

// Oracle: orthogonality against (1-t)^α (1+t)^β on [-1, 1] for integer α, β,
// and the endpoint normalization p_n(1) = (α+1)_n / (β+1)_n.
TEST(Jacobi1d, OrthogonalOnIntervalAndNormalized) {
  const std::vector<Rational> one_minus{Rational(1), Rational(-1)}, one_plus{Rational(1), Rational(1)};
  for (int alpha = 0; alpha <= 3; ++alpha)
    for (int beta = 0; beta <= 2; ++beta) {
      const auto w = poly1_mul(poly1_pow(one_minus, alpha), poly1_pow(one_plus, beta));
      for (unsigned n = 0; n <= 4; ++n) {
        const auto pn = jacobi_1d(n, Rational(alpha), Rational(beta));
        ASSERT_EQ(pn.size(), n + 1);
        EXPECT_FALSE(pn.back().is_zero());
        EXPECT_EQ(poly1_eval(pn, Rational(1)),
                  pochhammer(Rational(alpha + 1), n) / pochhammer(Rational(beta + 1), n));
        for (unsigned m = 0; m < n; ++m)
          EXPECT_EQ(interval_integral(poly1_mul(poly1_mul(pn, jacobi_1d(m, Rational(alpha), Rational(beta))), w)),
                    Rational(0));
      }
    }
}

TEST(AParams, Examples) {
  const auto ctx = ctx_of(3, {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7)});
  EXPECT_EQ(a_params(ctx, {2, 1, 3}).back(), Rational(1, 7));
  EXPECT_EQ(a_params(zero_ctx(2), {1, 1}), (std::vector<Rational>{Rational(3), Rational(0)}));
  EXPECT_EQ(a_params(zero_ctx(2), {1, 0}), (std::vector<Rational>{Rational(1), Rational(0)}));
}

TEST(JacobiBasis, Examples) {
  const auto ctx = zero_ctx(2);
  EXPECT_EQ(jacobi_basis(ctx, {0, 0}), c(2, 1));
  EXPECT_EQ(jacobi_basis(ctx, {1, 0}), x(2, 0) * Rational(3) - c(2, 1));
  EXPECT_EQ(jacobi_basis(ctx, {0, 1}), x(2, 0) + x(2, 1) * Rational(2) - c(2, 1));
}

TEST(JacobiBasis, DegreeAndOracleOrthogonality) {
  const std::vector<int> gamma{1, 0, 2};
  const auto ctx = ctx_of(2, {Rational(1), Rational(0), Rational(2)});
  const auto idx = jacobi_indices_up_to_degree(2, 3);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const MultiPoly pa = jacobi_basis(ctx, idx[a]);
    EXPECT_EQ(pa.degree(), static_cast<int>(index_sum(idx[a])));
    EXPECT_EQ(integer_weight_inner(gamma, pa, pa), jacobi_norm_sq(ctx, idx[a])) << index_str(idx[a]);
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      EXPECT_EQ(integer_weight_inner(gamma, pa, jacobi_basis(ctx, idx[b])), Rational(0));
  }
}

TEST(JacobiNorm, Examples) {
  const auto ctx = zero_ctx(2);
  EXPECT_EQ(jacobi_norm_sq(ctx, {0, 0}), Rational(1));
  EXPECT_EQ(jacobi_norm_sq(ctx, {1, 0}), Rational(1, 2));
  const MultiPoly p = x(2, 0) * Rational(3) - c(2, 1);
  EXPECT_EQ(inner_product(ctx, p, p), Rational(1, 2));
  // (x_1 + 2x_2 - 1)^2 against E[x_i^2] = 1/6, E[x_1 x_2] = 1/12, E[x_i] = 1/3:
  // 1/6 + 4/6 + 4/12 - 2/3 - 4/3 + 1 = 1/6
  const MultiPoly q = x(2, 0) + x(2, 1) * Rational(2) - c(2, 1);
  EXPECT_EQ(integer_weight_inner({0, 0, 0}, q, q), Rational(1, 6));
  EXPECT_EQ(jacobi_norm_sq(ctx, {0, 1}), Rational(1, 6));
}

TEST(TauBasis, OrientationProbeSelectsForward) { EXPECT_EQ(probe_tau_orientation(), TauOrientation::Forward); }

TEST(TauBasis, Examples) {
  const auto ctx = zero_ctx(2);
  EXPECT_EQ(tau_basis(ctx, {0, 0}), c(2, 1));
  const MultiPoly p = tau_basis(ctx, {1, 0});
  EXPECT_TRUE(weyl_apply(make_M_sigma(ctx, 2, Permutation::cycle(3)), p).is_zero());
  const MultiPoly q = tau_basis(ctx, {0, 1});
  EXPECT_EQ(inner_product(ctx, p, q), Rational(0));
  EXPECT_EQ(inner_product(ctx, p, p), tau_norm_sq(ctx, {1, 0}));
  // forward orientation substitutes (x_1, x_2) -> (x_2, 1 - x_1 - x_2) into 3x_1 - 1
  EXPECT_EQ(p, x(2, 1) * Rational(3) - c(2, 1));
}

TEST(TauBasis, BackwardOrientationBreaksTransportedSpectrum) {
  const auto ctx = ctx_of(2, {Rational(1, 3), Rational(2, 5), Rational(3, 7)});
  const MultiPoly p = tau_basis(ctx, {0, 1}, TauOrientation::Backward);
  const MultiPoly img = weyl_apply(make_M_sigma(ctx, 2, Permutation::cycle(3)), p);
  const Rational eig = -Rational(1) * (Rational(1) + Rational(3, 7) + Rational(1, 3) + Rational(1));
  EXPECT_NE(img, p * eig);
}

TEST(ExpandInBasis, Examples) {
  const auto ctx = zero_ctx(2);
  const auto e = expand_in_basis(ctx, x(2, 0), 1);
  const BasisExpansion expected{{{0, 0}, Rational(1, 3)}, {{1, 0}, Rational(1, 3)}};
  EXPECT_EQ(e, expected);
  EXPECT_TRUE(expand_in_basis(ctx, MultiPoly(2), 2).empty());
  const BasisExpansion unit{{{1, 1}, Rational(1)}};
  EXPECT_EQ(expand_in_basis(ctx, jacobi_basis(ctx, {1, 1}), 2), unit);
  EXPECT_THROW(expand_in_basis(ctx, x(2, 0) * x(2, 0), 1), std::invalid_argument);
}

TEST(ExpandInBasis, ReconstructionIsExact) {
  std::mt19937_64 rng(31);
  const auto ctx = ctx_of(3, {Rational(1, 2), Rational(-1, 3), Rational(2), Rational(1, 7)});
  for (int trial = 0; trial < 4; ++trial) {
    const MultiPoly p = random_poly(rng, 3, 3, 5);
    MultiPoly rebuilt(3), rebuilt_tau(3);
    for (const auto& [mu, coef] : expand_in_basis(ctx, p, 3)) rebuilt += jacobi_basis(ctx, mu) * coef;
    for (const auto& [mu, coef] : expand_in_tau_basis(ctx, p, 3)) rebuilt_tau += tau_basis(ctx, mu) * coef;
    EXPECT_EQ(rebuilt, p);
    EXPECT_EQ(rebuilt_tau, p);
  }
}

TEST(Spectral, ForcedInstantiation) {
  const auto ctx = zero_ctx(2);
  const MultiPoly p10 = jacobi_basis(ctx, {1, 0}), p01 = jacobi_basis(ctx, {0, 1});
  EXPECT_EQ(weyl_apply(make_M(ctx, 1), p10), p10 * Rational(-3));
  EXPECT_TRUE(weyl_apply(make_M(ctx, 2), p10).is_zero());
  EXPECT_EQ(weyl_apply(make_M(ctx, 2), p01), p01 * Rational(-2));
  EXPECT_EQ(weyl_apply(make_t(ctx, 2, 3), p01), p01 * Rational(-2));
}

TEST(Spectral, Suite) {
  expect_pass(check_spectral(zero_ctx(2), 3));
  expect_pass(check_spectral(ctx_of(3, {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7)}), 3));
}

TEST(SelfAdjoint, Suite) {
  expect_pass(check_selfadjoint(zero_ctx(2), 3));
  expect_pass(check_selfadjoint(ctx_of(3, {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7)}), 2));
}

// A first-order operator is not symmetric for the Dirichlet inner product;
// the pairing used by the suite must see that.
TEST(SelfAdjoint, DerivativeIsNotSymmetric) {
  const auto ctx = zero_ctx(2);
  const WeylOp d1 = WeylOp::derivative(2, 0);
  EXPECT_NE(inner_product(ctx, weyl_apply(d1, x(2, 0)), c(2, 1)), inner_product(ctx, x(2, 0), weyl_apply(d1, c(2, 1))));
}

TEST(Orthogonality, Suite) {
  expect_pass(check_orthogonality(zero_ctx(2), 3));
  expect_pass(check_orthogonality(ctx_of(3, {Rational(3, 4), Rational(-1, 3), Rational(2), Rational(1, 9)}), 3));
}

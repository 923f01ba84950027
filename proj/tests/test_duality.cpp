#include "superint/duality.hpp"

#include <gtest/gtest.h>

using namespace superint;

namespace {

SymmetryContext ctx_of(int d, std::vector<Rational> g) { return SymmetryContext(d, GammaVector(std::move(g))); }

SymmetryContext zero_ctx(int d) { return ctx_of(d, std::vector<Rational>(static_cast<std::size_t>(d + 1), Rational(0))); }

void expect_pass(const VerificationReport& r) { EXPECT_TRUE(r.pass()) << r.to_json(false).dump(2); }

}  // namespace

TEST(HatTilde, Params) {
  const auto ctx = zero_ctx(2);
  const HatData h = hat_params(ctx, {1, 0});
  EXPECT_EQ(h.beta_hat.values(), (std::vector<Rational>{0, 1, 2}));
  EXPECT_EQ(h.nu_hat, (std::vector<unsigned>{0, 1}));
  const TildeData t = tilde_params(ctx, {1, 0}, 1);
  EXPECT_EQ(t.beta_tilde.values(), (std::vector<Rational>{0, -3, -2}));
  EXPECT_EQ(t.mu_tilde, (std::vector<unsigned>{1, 1}));
  EXPECT_THROW(tilde_params(ctx, {1, 0}, 2), std::invalid_argument);
}

TEST(HatTilde, ParamsGeneric) {
  const auto ctx = ctx_of(3, {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7)});
  const HatData h = hat_params(ctx, {2, 0, 1}, {1, 1, 1});
  // γ_1 + |γ^{5-j}| + j
  EXPECT_EQ(h.beta_hat.values(), (std::vector<Rational>{Rational(1, 2), Rational(1, 2) + Rational(1, 7) + 1,
                                                        Rational(1, 2) + Rational(1, 5) + Rational(1, 7) + 2,
                                                        Rational(1, 2) + Rational(1, 3) + Rational(1, 5) +
                                                            Rational(1, 7) + 3}));
  EXPECT_EQ(h.nu_hat, (std::vector<unsigned>{1, 1, 3}));
  EXPECT_EQ(h.mu_bar, (RacahIndex{1, 1}));
  const TildeData t = tilde_params(ctx, {2, 0, 1}, 3);
  EXPECT_EQ(t.mu_tilde, (std::vector<unsigned>{2, 2, 3}));
  EXPECT_EQ(t.beta_tilde[3], Rational(-1, 7) - 6 - 3 + 3);
}

TEST(GFactor, Examples) {
  const auto ctx = zero_ctx(2);
  EXPECT_EQ(g_factor(ctx, {0, 3}), Rational(1));
  EXPECT_EQ(g_factor(ctx, {1, 0}), Rational(1, 3));
  EXPECT_EQ(g_factor(ctx, {2, 0}), Rational(1, 10));
}

TEST(Transition, DirectSmall) {
  const auto ctx = zero_ctx(2);
  const auto t0 = transition_direct(ctx, 0);
  ASSERT_EQ(t0.entries.size(), 1u);
  EXPECT_EQ(t0.entries[0][0], SignedSquare(1, Rational(1)));
  const auto t1 = transition_direct(ctx, 1);
  ASSERT_EQ(t1.entries.size(), 2u);
  for (const auto& row : t1.entries) EXPECT_EQ(row[0].square + row[1].square, Rational(1));
  const auto j = transition_json(ctx, t0);
  EXPECT_EQ(j["entries"][0]["sign"], 1);
  EXPECT_EQ(j["entries"][0]["square"], "1");
}

TEST(Transition, FormulasMatchDirectAtZero) {
  const auto ctx = zero_ctx(2);
  const auto t1 = transition_direct(ctx, 1);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      const auto& nu = t1.indices[a];
      const auto& mu = t1.indices[b];
      EXPECT_EQ(transition_via_56(ctx, nu, mu), t1.entries[a][b]) << index_str(nu) << index_str(mu);
      EXPECT_EQ(transition_via_57(ctx, nu, mu), t1.entries[a][b]) << index_str(nu) << index_str(mu);
    }
  EXPECT_EQ(transition_via_56(ctx, {0, 0}, {0, 0}), SignedSquare(1, Rational(1)));
  EXPECT_THROW(transition_via_56(ctx, {1, 0}, {0, 0}), std::invalid_argument);
}

TEST(IndexOperator, ConstantFamily) {
  const auto ctx = zero_ctx(2);
  EXPECT_TRUE(index_operator_apply(ctx, IndexSide::Hat, 2, {{{0, 0}, Rational(1)}}, 0).empty());
  EXPECT_TRUE(index_operator_apply(ctx, IndexSide::Tilde, 2, {{{0, 0}, Rational(1)}}, 0).empty());
}

// Oracle: trace and determinant of the 2×2 index matrix give the eigenvalues {0, -2}.
TEST(IndexOperator, HatEigenvaluesAtZero) {
  const auto ctx = zero_ctx(2);
  const std::vector<JacobiIndex> idx{{1, 0}, {0, 1}};
  Rational A[2][2];
  for (std::size_t c = 0; c < 2; ++c) {
    const auto out = index_operator_apply(ctx, IndexSide::Hat, 2, {{idx[c], Rational(1)}}, 1);
    for (const auto& [nu, v] : out) {
      EXPECT_EQ(index_sum(nu), 1u);
      A[nu == idx[0] ? 0 : 1][c] = v;
    }
  }
  EXPECT_EQ(A[0][0] + A[1][1], Rational(-2));
  EXPECT_EQ(A[0][0] * A[1][1] - A[0][1] * A[1][0], Rational(0));
}

TEST(IndexOperator, PreservesDegree) {
  const auto ctx = ctx_of(3, {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7)});
  for (const auto side : {IndexSide::Hat, IndexSide::Tilde})
    for (int j = 2; j <= 3; ++j)
      for (const auto& nu : jacobi_indices_of_degree(3, 2))
        for (const auto& [out, v] : index_operator_apply(ctx, side, j, {{nu, Rational(1)}}, 2))
          EXPECT_EQ(index_sum(out), 2u);
}

TEST(GaudinOnBases, ForcedInstantiation) {
  const auto rep = check_prop51_thm53(zero_ctx(2), 1);
  expect_pass(rep);
  bool saw = false;
  for (const auto& c : rep.cases())
    if (c.params.contains("eigenvalue") && c.params["n"] == 1) saw = c.params["eigenvalue"] == "-3";
  EXPECT_TRUE(saw);
}

TEST(GaudinOnBases, GenericD2) { expect_pass(check_prop51_thm53(ctx_of(2, {Rational(2, 3), Rational(-1, 4), Rational(5, 2)}), 3)); }

TEST(GaudinOnBases, GenericD3) {
  expect_pass(check_prop51_thm53(ctx_of(3, {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7)}), 2));
}

// Oracle by hand at γ = 0, d = 2, ν = (0,1): ν̂ = (1,1), β̂ = (0,1,2) give
// ρ = (1)_1(1)_1/(1!(1)_1) · (2)_2/(2)_2 · (3/2)_1/(1/2)_1 = 3, and ||P_(0,1)||² = 1/6.
TEST(NormProduct, LiteralIdentityFailsAtDegreeOne) {
  const auto ctx = zero_ctx(2);
  const HatData h = hat_params(ctx, {0, 1});
  EXPECT_EQ(h.nu_hat, (std::vector<unsigned>{1, 1}));
  EXPECT_EQ(racah_weight({Rational(1), Rational(1)}, h.beta_hat), Rational(3));
  EXPECT_EQ(tau_norm_sq(ctx, {0, 1}), Rational(1, 6));
}

// Every case passes except the literal norm-product identity, which holds at
// degree 0 only; its degree-dependent replacement holds everywhere.
void expect_transition_outcome(const VerificationReport& rep) {
  const std::string literal = "||P^tau||^2 rho(nu_hat; beta_hat) = 1, degree ";
  std::size_t literal_cases = 0;
  for (const auto& c : rep.cases()) {
    if (c.id.rfind(literal, 0) == 0) {
      ++literal_cases;
      EXPECT_EQ(c.pass, c.id == literal + "0") << c.id;
    } else {
      EXPECT_TRUE(c.pass) << c.id << ": " << c.witness.value_or("");
    }
  }
  EXPECT_GT(literal_cases, 1u);
}

TEST(TransitionSuite, ZeroD2) { expect_transition_outcome(check_transition(zero_ctx(2), 3)); }

TEST(TransitionSuite, GenericD2) {
  expect_transition_outcome(check_transition(ctx_of(2, {Rational(2, 3), Rational(-1, 4), Rational(5, 2)}), 3));
}

TEST(TransitionSuite, GenericD3) {
  expect_transition_outcome(
      check_transition(ctx_of(3, {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7)}), 3));
}

TEST(DualitySuite, D2) { expect_pass(check_duality(ctx_of(2, {Rational(2, 3), Rational(-1, 4), Rational(5, 2)}), 2)); }

TEST(DualitySuite, D3) {
  expect_pass(check_duality(ctx_of(3, {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7)}), 2));
}

#include <gtest/gtest.h>

#include "support.hpp"

using namespace support;

namespace {

Resolution<Q> build(const IdealPresentation<Q>& I, HorseshoeOptions opts = {}) {
  auto r = certify_linear_quotients(I);
  return build_resolution(I, std::get<ColonCertificate<Q>>(r), opts);
}

std::vector<int> shifts(const Resolution<Q>& res, std::size_t i) { return res.module(i).shifts(); }

std::vector<IdealPresentation<Q>> lq_family() {
  std::vector<IdealPresentation<Q>> out;
  for (std::size_t n = 1; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      out.push_back(power_ideal<Q>(n, d));
      if (static_cast<std::size_t>(d) < n) out.push_back(squarefree_veronese<Q>(n, d));
    }
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto r = sample_lq_ideal<Q>(3 + seed % 2, 2 + static_cast<int>(seed % 2), 3 + seed % 4, seed);
    if (auto* inst = std::get_if<LqInstance<Q>>(&r)) out.push_back(inst->ideal);
  }
  return out;
}

}  // namespace

TEST(Koszul, SingleForm) {
  Ring R({"x", "y"});
  std::vector<Polynomial<Q>> forms{R.parse<Q>("x")};
  auto K = koszul_resolution<Q>(forms, 0, 2);
  ASSERT_EQ(K.num_modules(), 2u);
  EXPECT_EQ(K.module(0).shifts(), std::vector<int>{0});
  EXPECT_EQ(K.module(1).shifts(), std::vector<int>{1});
  EXPECT_EQ(K.differential(1).entry(0, 0), R.parse<Q>("x"));
}

TEST(Koszul, ThreeVariables) {
  Ring R({"x", "y", "z"});
  std::vector<Polynomial<Q>> forms{R.parse<Q>("x"), R.parse<Q>("y"), R.parse<Q>("z")};
  auto K = koszul_resolution<Q>(forms, 0, 3);
  ASSERT_EQ(K.num_modules(), 4u);
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < 4; ++i) {
    ranks.push_back(K.module(i).rank());
    for (int s : K.module(i).shifts()) EXPECT_EQ(s, static_cast<int>(i));
  }
  EXPECT_EQ(ranks, (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_TRUE(map_compose(K.differential(1), K.differential(2)).is_zero());
  EXPECT_TRUE(map_compose(K.differential(2), K.differential(3)).is_zero());
  // e_{12} -> x e_2 - y e_1 with bases (e_1, e_2, e_3)
  EXPECT_EQ(K.differential(2).entry(0, 0), R.parse<Q>("-y"));
  EXPECT_EQ(K.differential(2).entry(1, 0), R.parse<Q>("x"));
}

TEST(Koszul, NoFormsAndDependentForms) {
  Ring R({"x", "y"});
  auto K = koszul_resolution<Q>({}, 3, 2);
  ASSERT_EQ(K.num_modules(), 1u);
  EXPECT_EQ(K.module(0).shifts(), std::vector<int>{3});
  std::vector<Polynomial<Q>> dep{R.parse<Q>("x + y"), R.parse<Q>("2*x + 2*y")};
  EXPECT_THROW(koszul_resolution<Q>(dep, 0, 2), ContractViolation);
}

TEST(Lift, PrincipalDivision) {
  Ring R({"x", "y"});
  auto res = principal_resolution(R.parse<Q>("x^2"));
  auto x = lift_through(res.augmentation_map(), ModuleElement<Q>{R.parse<Q>("x^2*y")}, 3, 2);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, ModuleElement<Q>{R.parse<Q>("y")});
}

TEST(Lift, FreeVariablesZero) {
  Ring R({"x", "y"});
  auto eps = row_map<Q>({R.parse<Q>("x^2"), R.parse<Q>("x*y")}, GradedFreeModule({2, 2}));
  auto x = lift_through(eps, ModuleElement<Q>{R.parse<Q>("x*y^2")}, 3, 2);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (ModuleElement<Q>{Polynomial<Q>(), R.parse<Q>("y")}));
  auto zero = lift_through(eps, ModuleElement<Q>{Polynomial<Q>()}, 3, 2);
  ASSERT_TRUE(zero);
  EXPECT_TRUE((*zero)[0].is_zero() && (*zero)[1].is_zero());
  EXPECT_FALSE(lift_through(eps, ModuleElement<Q>{R.parse<Q>("y^3")}, 3, 2));
}

TEST(Horseshoe, TwoGenerators) {
  Ring R({"x", "y"});
  auto resA = principal_resolution(R.parse<Q>("x^2"));
  std::vector<Polynomial<Q>> forms{R.parse<Q>("x")};
  auto resC = koszul_resolution<Q>(forms, 2, 2);
  for (bool fast : {true, false}) {
    auto res = horseshoe_step(resA, resC, R.parse<Q>("x*y"), 2, 2, HorseshoeOptions{fast});
    ASSERT_EQ(res.length(), 1u);
    EXPECT_EQ(shifts(res, 0), (std::vector<int>{2, 2}));
    EXPECT_EQ(shifts(res, 1), (std::vector<int>{3}));
    EXPECT_EQ(res.differential(1).entry(0, 0), R.parse<Q>("-y"));
    EXPECT_EQ(res.differential(1).entry(1, 0), R.parse<Q>("x"));
    EXPECT_TRUE(map_compose(res.augmentation_map(), res.differential(1)).is_zero());
  }
}

TEST(Horseshoe, ZeroColonSplits) {
  Ring R({"x", "y"});
  auto resA = principal_resolution(R.parse<Q>("x"));
  auto resC = koszul_resolution<Q>({}, 1, 2);
  auto res = horseshoe_step(resA, resC, R.parse<Q>("y"), 2);
  EXPECT_EQ(res.length(), 0u);
  EXPECT_EQ(shifts(res, 0), (std::vector<int>{1, 1}));
}

TEST(Horseshoe, FalseCertificateIsConstructionError) {
  auto I = ideal({"x", "y", "z", "w"}, {"x*y", "z*w"});
  ColonCertificate<Q> fake;
  fake.forms = {{}, {I.ring().parse<Q>("x")}};
  fake.q_values = {0, 1};
  fake.q_max = 1;
  for (bool fast : {true, false}) {
    try {
      build_resolution(I, fake, HorseshoeOptions{fast});
      FAIL() << "expected a construction error";
    } catch (const ConstructionError& e) {
      EXPECT_EQ(e.step(), 2u);
      EXPECT_EQ(e.position(), 1u);
    }
  }
}

TEST(Build, Examples) {
  auto a = build(ideal({"x", "y"}, {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(a.ranks(), (std::vector<std::size_t>{3, 2}));
  EXPECT_EQ(shifts(a, 0), (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(shifts(a, 1), (std::vector<int>{3, 3}));
  auto b = build(ideal({"x", "y", "z"}, {"x*y", "x*z", "y*z"}));
  EXPECT_EQ(b.ranks(), (std::vector<std::size_t>{3, 2}));
  EXPECT_EQ(b.length(), 1u);
  auto c = build(ideal({"x", "y"}, {"x^2*y"}));
  EXPECT_EQ(c.ranks(), (std::vector<std::size_t>{1}));
  EXPECT_EQ(c.length(), 0u);
  auto v = build(ideal({"x", "y", "z"}, {"x", "y", "z"}));
  EXPECT_EQ(v.ranks(), (std::vector<std::size_t>{3, 3, 1}));
}

TEST(LinearIdeal, MatchesKoszulRanks) {
  auto I = ideal({"x", "y", "z"}, {"x", "y", "z"});
  auto res = linear_ideal_resolution(I);
  std::vector<Polynomial<Q>> forms = I.generators();
  auto K = koszul_resolution<Q>(forms, 0, 3);
  ASSERT_EQ(res.num_modules() + 1, K.num_modules());
  for (std::size_t i = 0; i < res.num_modules(); ++i) {
    EXPECT_EQ(res.module(i).rank(), K.module(i + 1).rank());
    EXPECT_EQ(res.module(i).shifts(), K.module(i + 1).shifts());
  }
  EXPECT_TRUE(complex_vanishes_at_points(res));
}

TEST(LinearIdeal, SmallCases) {
  auto one = linear_ideal_resolution(ideal({"x", "y"}, {"x"}));
  EXPECT_EQ(one.length(), 0u);
  EXPECT_EQ(shifts(one, 0), std::vector<int>{1});
  auto two = linear_ideal_resolution(ideal({"x", "y"}, {"x + y", "y"}));
  EXPECT_EQ(two.ranks(), (std::vector<std::size_t>{2, 1}));
  for (const auto& [r, p] : two.differential(1).column(0)) EXPECT_EQ(*p.degree(), 1);
  EXPECT_THROW(linear_ideal_resolution(ideal({"x", "y"}, {"x^2"})), ContractViolation);
}

TEST(LinearIdeal, BettiIsBinomialForRandomForms) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t r = 1; r <= n; ++r) {
      IdealPresentation<Q> I(Ring::with_default_names(n), random_linear_forms<Q>(n, r, 31 * n + r));
      auto res = linear_ideal_resolution(I);
      ASSERT_EQ(res.length(), r - 1);
      for (std::size_t i = 0; i < r; ++i) EXPECT_EQ(static_cast<long long>(res.module(i).rank()), oracle::choose(r, i + 1));
      EXPECT_TRUE(complex_vanishes_at_points(res));
    }
}

TEST(Build, InvariantsOnFamily) {
  for (const auto& I : lq_family()) {
    auto cert = std::get<ColonCertificate<Q>>(certify_linear_quotients(I));
    auto res = build_resolution(I, cert);
    EXPECT_EQ(res.length(), cert.q_max);
    EXPECT_TRUE(complex_vanishes_at_points(res));
    for (std::size_t i = 0; i < res.num_modules(); ++i)
      for (int s : res.module(i).shifts()) EXPECT_EQ(s, I.degree() + static_cast<int>(i));
    for (std::size_t i = 1; i <= res.length(); ++i)
      for (std::size_t j = 0; j < res.module(i).rank(); ++j)
        for (const auto& [r, p] : res.differential(i).column(j)) EXPECT_EQ(*p.degree(), 1);
    auto slow = build_resolution(I, cert, HorseshoeOptions{false});
    EXPECT_EQ(slow.ranks(), res.ranks());
    EXPECT_TRUE(complex_vanishes_at_points(slow));
  }
}

TEST(Build, RankRecurrence) {
  for (const auto& I : lq_family()) {
    auto cert = std::get<ColonCertificate<Q>>(certify_linear_quotients(I));
    const std::size_t n = I.nvars();
    auto res = principal_resolution(I.generator(0));
    for (std::size_t k = 1; k < I.size(); ++k) {
      auto before = res.ranks();
      res = horseshoe_step(res, koszul_resolution<Q>(cert.forms[k], I.degree(), n), I.generator(k), n, k + 1);
      auto after = res.ranks();
      for (std::size_t i = 0; i < after.size(); ++i) {
        const long long prev = i < before.size() ? static_cast<long long>(before[i]) : 0;
        EXPECT_EQ(static_cast<long long>(after[i]), prev + oracle::choose(cert.q_values[k], i));
      }
    }
  }
}

TEST(Build, Deterministic) {
  auto I = squarefree_veronese<Q>(5, 3);
  auto a = build(I), b = build(I);
  ASSERT_EQ(a.length(), b.length());
  for (std::size_t i = 1; i <= a.length(); ++i) EXPECT_EQ(a.differential(i), b.differential(i));
  auto J = random_linear_substitution(power_ideal<Q>(3, 2), 4);
  auto c = build(J), d = build(J);
  for (std::size_t i = 1; i <= c.length(); ++i) EXPECT_EQ(c.differential(i), d.differential(i));
}

#include "superhopf/hyperalgebra.hpp"

#include <gtest/gtest.h>

using namespace superhopf;

namespace {

bool all_ok(const std::vector<check_result>& cs) {
  for (const auto& c : cs)
    if (!c.ok()) return false;
  return true;
}

sparse_vector e(std::size_t i) { return {{i, rational(1)}}; }

} // namespace

TEST(TruncatedDual, Ga11OrderThree) {
  auto t = make_truncated_dual(ga11_presentation(), 3);
  std::vector<std::string> want{"ε", "D[t]", "D[tau]", "D[t^2]", "D[t * tau]"};
  std::vector<std::string> got = t.labels;
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, want);
  auto dt = t.index_of("D[t]"), dt2 = t.index_of("D[t^2]"), dtau = t.index_of("D[tau]"), dttau = t.index_of("D[t * tau]");
  EXPECT_EQ(t.product[dt][dt], (sparse_vector{{dt2, rational(2)}}));
  EXPECT_EQ(t.product[dt][dtau], e(dttau));
  // Δ(t τ) contains (1⊗t)(τ⊗1) = τ⊗t with no sign, t being even
  EXPECT_EQ(t.product[dtau][dt], e(dttau));
  EXPECT_TRUE(t.product[dtau][dtau].empty());
  EXPECT_TRUE(all_ok(check_truncated_dual(t)));
}

TEST(TruncatedDual, OrderOneIsTheBaseField) {
  auto t = make_truncated_dual(glmn_presentation(2, 1), 1);
  EXPECT_EQ(t.dim(), 1u);
  EXPECT_EQ(t.labels[0], "ε");
  EXPECT_EQ(t.product[0][0], e(0));
}

TEST(TruncatedDual, Gl11OrderTwo) {
  auto t = make_truncated_dual(glmn_presentation(1, 1), 2);
  EXPECT_EQ(t.dim(), 5u);
  EXPECT_TRUE(all_ok(check_truncated_dual(t)));
}

TEST(TruncatedDual, RejectsNonzeroCounit) {
  auto h = ga11_presentation();
  h.counit[0] = rational(1);
  EXPECT_THROW(make_truncated_dual(h, 2), presentation_error);
  EXPECT_THROW(make_truncated_dual(ga11_presentation(), 0), algebra_error);
}

TEST(TruncatedDual, TablesUpToOrderFive) {
  for (auto h : {ga11_presentation(), glmn_presentation(1, 1)})
    for (int n = 1; n <= 5; ++n) {
      auto t = make_truncated_dual(h, n);
      EXPECT_TRUE(all_ok(check_truncated_dual(t))) << h.name << " n=" << n;
      EXPECT_TRUE(check_unique_grouplike(t).ok()) << h.name << " n=" << n;
    }
}

TEST(TruncatedDual, CorruptedProductIsCaught) {
  auto t = make_truncated_dual(ga11_presentation(), 4);
  auto dt = t.index_of("D[t]"), dt2 = t.index_of("D[t^2]");
  t.product[dt][dt][dt2] = rational(1); // binomial coefficient dropped
  EXPECT_FALSE(check_truncated_dual(t)[0].ok());
}

TEST(TruncatedDual, GrouplikeCertificateNeedsTheDegreeCondition) {
  auto t = make_truncated_dual(ga11_presentation(), 3);
  auto dt = t.index_of("D[t]");
  t.coproduct[dt][{dt, dt}] = rational(1);
  EXPECT_FALSE(check_unique_grouplike(t).ok());
}

TEST(TruncatedDual, OrderEmbedding) {
  for (auto h : {ga11_presentation(), glmn_presentation(1, 1)})
    for (int n = 1; n <= 4; ++n) {
      auto small = make_truncated_dual(h, n), big = make_truncated_dual(h, n + 1);
      EXPECT_TRUE(all_ok(check_order_embedding(small, big))) << h.name << " n=" << n;
    }
}

TEST(TruncatedDual, JsonExport) {
  auto j = to_json(make_truncated_dual(ga11_presentation(), 2));
  EXPECT_EQ(j["order"], 2);
  EXPECT_EQ(j["basis"].size(), 3u);
  EXPECT_EQ(j["parity"][0], "even");
}

TEST(LieAlgebra, GlMatrixOracle) {
  auto g = gl_lie_algebra(1, 1);
  EXPECT_EQ(g.even_dim(), 2u);
  EXPECT_EQ(g.odd_dim(), 2u);
  auto e11 = g.index_of("E_1_1"), e12 = g.index_of("E_1_2"), e21 = g.index_of("E_2_1"), e22 = g.index_of("E_2_2");
  // odd elements anticommute: [E12, E21] = E11 + E22
  EXPECT_EQ(g.bracket[e12][e21], (sparse_vector{{e11, rational(1)}, {e22, rational(1)}}));
  EXPECT_EQ(g.bracket[e11][e12], e(e12));
  EXPECT_TRUE(all_ok(check_super_lie(g)));
  EXPECT_TRUE(all_ok(check_super_lie(gl_lie_algebra(2, 2))));
}

TEST(LieAlgebra, BrokenStructureConstantsFailJacobi) {
  auto g = gl_lie_algebra(1, 1);
  auto e11 = g.index_of("E_1_1"), e12 = g.index_of("E_1_2"), e21 = g.index_of("E_2_1"), e22 = g.index_of("E_2_2");
  g.bracket[e12][e21] = {{e11, rational(1)}, {e22, rational(-1)}};
  g.bracket[e21][e12] = g.bracket[e12][e21];
  auto r = check_super_jacobi(g);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.witness.size(), 3u);
  EXPECT_TRUE(check_super_antisymmetry(g).ok());
}

TEST(Primitives, Ga11IsAbelian) {
  auto p = primitives(make_truncated_dual(ga11_presentation(), 3));
  EXPECT_EQ(p.lie.even_dim(), 1u);
  EXPECT_EQ(p.lie.odd_dim(), 1u);
  EXPECT_TRUE(check_abelian(p.lie).ok());
  EXPECT_TRUE(all_ok(check_super_lie(p.lie)));
}

TEST(Primitives, OddLineIsAbelian) {
  auto p = primitives(make_truncated_dual(exterior_hopf(1), 3));
  EXPECT_EQ(p.lie.even_dim(), 0u);
  EXPECT_EQ(p.lie.odd_dim(), 1u);
  EXPECT_TRUE(check_abelian(p.lie).ok());
}

TEST(Primitives, GlMatchesMatrixBrackets) {
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}}) {
    auto h = glmn_presentation(m, n);
    auto p = primitives(make_truncated_dual(h, 3));
    EXPECT_EQ(p.lie.dim(), (m + n) * (m + n));
    EXPECT_TRUE(check_gl_lie_oracle(h, p.lie).ok()) << m << "|" << n;
    EXPECT_TRUE(all_ok(check_super_lie(p.lie)));
    EXPECT_FALSE(check_abelian(p.lie).ok());
  }
}

TEST(Primitives, NeedsOrderThree) {
  EXPECT_THROW(primitives(make_truncated_dual(ga11_presentation(), 2)), algebra_error);
}

TEST(LieEven, KnownValues) {
  EXPECT_TRUE(check_lie_even(glmn_presentation(1, 1)).ok());
  EXPECT_TRUE(check_lie_even(glmn_presentation(2, 1)).ok());
  EXPECT_TRUE(check_lie_even(exterior_hopf(2)).ok());
  EXPECT_TRUE(check_lie_even(ga11_presentation()).ok());
}

// Oracle: count normal monomials directly.
TEST(Pbw, CountMatchesEnumeration) {
  for (std::size_t ev = 0; ev <= 3; ++ev)
    for (std::size_t od = 0; od <= 3; ++od) {
      std::vector<std::string> evens, odds;
      for (std::size_t i = 0; i < ev; ++i) evens.push_back("a" + std::to_string(i));
      for (std::size_t i = 0; i < od; ++i) odds.push_back("b" + std::to_string(i));
      auto g = generator_set::make(evens, odds);
      for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(super_pbw_count(ev, od, n), enumerate_monomials(*g, n - 1).size()) << ev << "|" << od << " n=" << n;
    }
  EXPECT_EQ(super_pbw_count(1, 1, 4), 7u); // t^i tau^e with i + e < 4: four with e = 0, three with e = 1
  EXPECT_EQ(super_pbw_count(2, 2, 3), 13u);
}

TEST(Pbw, KnownValues) {
  EXPECT_TRUE(pbw_dim_check(ga11_presentation(), 4).ok());
  EXPECT_TRUE(pbw_dim_check(glmn_presentation(1, 1), 3).ok());
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(pbw_dim_check(glmn_presentation(1, 1), n).ok());
  EXPECT_TRUE(pbw_dim_check(glmn_presentation(2, 1), 1).ok());
}

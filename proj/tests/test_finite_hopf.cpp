#include "superhopf/finite_hopf.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace superhopf;

namespace {

bool all_ok(const std::vector<check_result>& cs) {
  for (const auto& c : cs)
    if (!c.ok()) return false;
  return true;
}

const check_result& find(const std::vector<check_result>& cs, const std::string& prefix) {
  for (const auto& c : cs)
    if (c.name.rfind(prefix, 0) == 0) return c;
  throw std::runtime_error("no check " + prefix);
}

std::size_t label_index(const finite_hopf& h, const std::string& label) {
  auto it = std::find(h.labels.begin(), h.labels.end(), label);
  if (it == h.labels.end()) throw std::runtime_error("no basis element " + label);
  return static_cast<std::size_t>(it - h.labels.begin());
}

// Laplace expansion along the first row.
rational det(const std::vector<std::vector<rational>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return rational(1);
  rational out;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<rational>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<rational> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    rational t = m[0][c] * det(minor);
    out += c % 2 ? -t : t;
  }
  return out;
}

} // namespace

TEST(FiniteHopf, ExteriorTables) {
  auto h = finite_from_presentation(exterior_hopf(2));
  EXPECT_EQ(h.dim(), 4u);
  auto v1 = label_index(h, "v1"), v2 = label_index(h, "v2"), v12 = label_index(h, "v1 * v2"), one = label_index(h, "1");
  EXPECT_EQ(h.mult[v2][v1], (sparse_vector{{v12, rational(-1)}}));
  EXPECT_TRUE(h.mult[v1][v1].empty());
  tensor_vector d{{{v12, one}, rational(1)}, {{v1, v2}, rational(1)}, {{v2, v1}, rational(-1)}, {{one, v12}, rational(1)}};
  EXPECT_EQ(h.coproduct[v12], d);
  EXPECT_EQ(h.antipode[v12], (sparse_vector{{v12, rational(1)}})); // S(v1 v2) = (-v1)(-v2)
  EXPECT_EQ(h.counit[one], rational(1));
}

TEST(FiniteHopf, ExteriorAxiomsUpToFour) {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto cs = check_finite_hopf(finite_from_presentation(exterior_hopf(n)));
    EXPECT_TRUE(all_ok(cs)) << "n=" << n;
  }
}

TEST(FiniteHopf, CorruptedTablesAreCaught) {
  auto h = finite_from_presentation(exterior_hopf(2));
  auto v1 = label_index(h, "v1");
  auto bad = h;
  bad.antipode[v1][v1] = rational(1); // S(v1) = v1
  EXPECT_FALSE(find(check_finite_hopf(bad), "antipode m(S⊗id)").ok());
  bad = h;
  bad.super = false; // forgetting the Koszul sign breaks multiplicativity of Δ
  EXPECT_FALSE(find(check_finite_hopf(bad), "coproduct is multiplicative").ok());
  bad = h;
  bad.par[v1] = parity::even;
  EXPECT_FALSE(find(check_finite_hopf(bad), "structure maps preserve parity").ok());
}

TEST(FiniteHopf, EvenGeneratorsRejected) {
  EXPECT_THROW(finite_from_presentation(ga11_presentation()), algebra_error);
}

TEST(ExteriorPairing, KnownValues) {
  auto hv = exterior_hopf(2, "v"), hf = exterior_hopf(2, "f");
  auto f = [&](const char* s) { return parse_poly(s, hf.gens); };
  auto v = [&](const char* s) { return parse_poly(s, hv.gens); };
  EXPECT_EQ(exterior_pairing(f("f1*f2"), v("v1 * v2")), rational(1));
  EXPECT_EQ(exterior_pairing(f("f1"), v("v2")), rational(0));
  EXPECT_EQ(exterior_pairing(f("f1*f2"), v("v2*v1")), rational(-1));
  EXPECT_EQ(exterior_pairing(f("1"), v("1")), rational(1));
  EXPECT_EQ(exterior_pairing(f("f1"), v("v1 * v2")), rational(0));
}

// Oracle: for linear forms φ_i and vectors w_j, ⟨φ_1∧…∧φ_k, w_1∧…∧w_k⟩ = det(φ_i(w_j)).
TEST(ExteriorPairing, MatchesDeterminantOfLinearForms) {
  const std::size_t n = 4;
  auto hv = exterior_hopf(n, "v"), hf = exterior_hopf(n, "f");
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t k = 1 + trial % 4;
    std::vector<std::vector<rational>> a(k, std::vector<rational>(n)), b(k, std::vector<rational>(n));
    super_poly phi(hf.gens, rational(1)), w(hv.gens, rational(1));
    for (std::size_t i = 0; i < k; ++i) {
      super_poly pi(hf.gens), wi(hv.gens);
      for (std::size_t c = 0; c < n; ++c) {
        a[i][c] = rational(coef(rng));
        b[i][c] = rational(coef(rng));
        pi += super_poly::generator(hf.gens, symbol{parity::odd, c}) * a[i][c];
        wi += super_poly::generator(hv.gens, symbol{parity::odd, c}) * b[i][c];
      }
      phi = phi * pi;
      w = w * wi;
    }
    std::vector<std::vector<rational>> m(k, std::vector<rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t c = 0; c < n; ++c) m[i][j] += a[i][c] * b[j][c];
    EXPECT_EQ(exterior_pairing(phi, w), det(m)) << "trial " << trial;
  }
}

TEST(DualIso, HoldsUpToFive) {
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_TRUE(all_ok(dual_iso_check(n))) << "n=" << n;
}

TEST(Bosonize, SmashCoproductOnPrimitive) {
  auto a = finite_from_presentation(exterior_hopf(1));
  auto b = bosonize(a);
  EXPECT_FALSE(b.super);
  EXPECT_EQ(b.dim(), 4u);
  auto one_v = label_index(b, "1⊗v1"), g_1 = label_index(b, "g⊗1"), one_1 = label_index(b, "1⊗1");
  tensor_vector want{{{one_v, g_1}, rational(1)}, {{one_1, one_v}, rational(1)}};
  EXPECT_EQ(b.coproduct[one_v], want);
  // g acts on v by the parity sign: (g⊗1)(1⊗v)(g⊗1) = -(1⊗v)
  EXPECT_EQ(multiply(b, multiply(b, basis_vector(g_1), basis_vector(one_v)), basis_vector(g_1)),
            (sparse_vector{{one_v, rational(-1)}}));
}

TEST(Bosonize, SmashCheckOnPrimitives) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto a = finite_from_presentation(exterior_hopf(n));
    auto b = bosonize(a);
    std::size_t seen = 0;
    EXPECT_TRUE(check_smash_primitives(a, b, &seen).ok());
    EXPECT_EQ(seen, n);
    // dropping the parity shift on the right leg is caught
    auto v = bosonized_index(a.dim(), 0, label_index(a, "v1"));
    auto one = bosonized_index(a.dim(), 0, label_index(a, "1"));
    auto g = bosonized_index(a.dim(), 1, label_index(a, "1"));
    b.coproduct[v].erase({v, g});
    b.coproduct[v][{v, one}] = rational(1);
    EXPECT_FALSE(check_smash_primitives(a, b).ok());
  }
}

TEST(Bosonize, TrivialAlgebraGivesGroupAlgebra) {
  auto b = bosonize(finite_from_presentation(exterior_hopf(0)));
  EXPECT_EQ(b.dim(), 2u);
  auto g = label_index(b, "g⊗1"), one = label_index(b, "1⊗1");
  EXPECT_EQ(b.mult[g][g], basis_vector(one));
  EXPECT_EQ(b.coproduct[g], (tensor_vector{{{g, g}, rational(1)}}));
  EXPECT_EQ(b.antipode[g], basis_vector(g));
  EXPECT_TRUE(all_ok(check_finite_hopf(b)));
}

TEST(Bosonize, OrdinaryHopfAxiomsUpToThree) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto b = bosonize(finite_from_presentation(exterior_hopf(n)));
    EXPECT_EQ(b.dim(), std::size_t{2} << n);
    EXPECT_TRUE(all_ok(check_finite_hopf(b))) << "n=" << n;
  }
}

TEST(Bosonize, UntwistedProductFails) {
  auto a = finite_from_presentation(exterior_hopf(2));
  auto b = bosonize(a);
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (is_odd(a.par[i]))
      for (std::size_t e = 0; e < 2; ++e)
        for (std::size_t j = 0; j < n; ++j)
          for (auto& [k, x] : b.mult[bosonized_index(n, e, i)][bosonized_index(n, 1, j)]) x = -x;
  EXPECT_FALSE(all_ok(check_finite_hopf(b)));
}

TEST(Integrals, KnownValues) {
  auto l1 = finite_from_presentation(exterior_hopf(1));
  auto s1 = compute_integrals(l1);
  ASSERT_EQ(s1.left.size(), 1u);
  EXPECT_EQ(s1.parity[0], parity_class::odd);
  EXPECT_TRUE(s1.left[0][label_index(l1, "1")].is_zero());
  EXPECT_FALSE(s1.left[0][label_index(l1, "v1")].is_zero());
  EXPECT_FALSE(s1.nonzero_on_unit);

  auto l2 = finite_from_presentation(exterior_hopf(2));
  auto s2 = compute_integrals(l2);
  ASSERT_EQ(s2.left.size(), 1u);
  EXPECT_EQ(s2.parity[0], parity_class::even);
  for (std::size_t i = 0; i < l2.dim(); ++i)
    EXPECT_EQ(s2.left[0][i].is_zero(), i != label_index(l2, "v1 * v2"));

  auto k = finite_from_presentation(exterior_hopf(0));
  auto sk = compute_integrals(k);
  ASSERT_EQ(sk.left.size(), 1u);
  EXPECT_EQ(sk.left[0], k.counit);
  EXPECT_TRUE(sk.nonzero_on_unit);
}

TEST(Integrals, ExteriorParityAndRightIntegrals) {
  for (std::size_t n = 0; n <= 5; ++n) {
    auto h = finite_from_presentation(exterior_hopf(n));
    EXPECT_TRUE(all_ok(check_integrals(h, n % 2 ? parity::odd : parity::even))) << "n=" << n;
  }
}

TEST(Integrals, BosonizationHasOneIntegral) {
  auto b = bosonize(finite_from_presentation(exterior_hopf(2)));
  auto s = compute_integrals(b);
  EXPECT_EQ(s.left.size(), 1u);
  EXPECT_TRUE(s.composed_are_right);
}

TEST(Integrals, WrongParityExpectationFails) {
  auto h = finite_from_presentation(exterior_hopf(3));
  EXPECT_FALSE(find(check_integrals(h, parity::even), "nonzero integral").ok());
}

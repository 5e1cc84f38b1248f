#include "superhopf/suites.hpp"

#include <gtest/gtest.h>

using namespace superhopf;

namespace {

suite_config config(std::string suite, std::optional<std::uint64_t> seed = 5) {
  suite_config c;
  c.suite = std::move(suite);
  c.seed = seed;
  c.points = 10;
  return c;
}

const check_result* find_check(const std::vector<check_result>& cs, const std::string& name) {
  for (const auto& c : cs)
    if (c.name == name) return &c;
  return nullptr;
}

} // namespace

TEST(Suites, AllPassOnDefaults) {
  for (auto s : {"verify gl", "verify exterior", "verify bosonize", "verify integrals", "hy", "hcpair", "envelope",
                 "decompose"}) {
    auto rep = run_suite(config(s), 2);
    EXPECT_TRUE(rep.passed()) << rep.text();
    EXPECT_FALSE(rep.checks().empty()) << s;
    auto j = rep.to_json();
    EXPECT_EQ(j["suite"], s);
    EXPECT_EQ(j["config"]["suite"], s);
    EXPECT_EQ(j["engine_version"], engine_version);
    EXPECT_TRUE(j.contains("timings"));
    EXPECT_FALSE(rep.to_json(false).contains("timings"));
  }
}

TEST(Suites, ConfigErrors) {
  EXPECT_THROW(run_suite(config("verify gl", std::nullopt)), config_error);
  EXPECT_THROW(run_suite(config("decompose", std::nullopt)), config_error);
  EXPECT_THROW(run_suite(config("frobnicate")), config_error);
  auto c = config("verify gl");
  c.points = 0;
  EXPECT_THROW(run_suite(c), config_error);
  c = config("hy");
  c.group = "sl";
  EXPECT_THROW(run_suite(c), config_error);
  c = config("verify presentation");
  EXPECT_THROW(run_suite(c), config_error);
}

TEST(Suites, TrivialExterior) {
  auto c = config("verify exterior");
  c.dim = 0;
  auto rep = run_suite(c);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.to_json()["data"]["dimension"], 1);
}

TEST(Suites, HcpairWithoutSeedSkipsTheGroupCheck) {
  auto rep = run_suite(config("hcpair", std::nullopt));
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.to_json()["data"]["group_check"], "skipped: no --seed");
  auto c = config("hcpair", std::nullopt);
  c.no_half = true;
  EXPECT_EQ(run_suite(c).to_json()["data"]["bracket_scale"], "1");
}

TEST(Suites, DeterministicAcrossWorkerCounts) {
  auto c = config("verify gl");
  c.m = 2;
  c.points = 25;
  auto a = run_suite(c, 1).to_json(false), b = run_suite(c, 3).to_json(false);
  EXPECT_EQ(a.dump(), b.dump());
}

// A failing witness, replayed through the library, reproduces the failure.
TEST(Witness, JacobiTripleReplays) {
  auto g = gl_lie_algebra(1, 1);
  auto e11 = g.index_of("E_1_1"), e12 = g.index_of("E_1_2"), e21 = g.index_of("E_2_1"), e22 = g.index_of("E_2_2");
  g.bracket[e12][e21] = {{e11, rational(1)}, {e22, rational(-1)}};
  g.bracket[e21][e12] = g.bracket[e12][e21];
  auto r = check_super_jacobi(g, 2);
  ASSERT_FALSE(r.ok());
  auto w = r.witness;
  EXPECT_FALSE(jacobiator(g, g.index_of(w[0]), g.index_of(w[1]), g.index_of(w[2])).empty());
}

TEST(Witness, PointwiseCoproductFailureReplays) {
  auto h = glmn_presentation(1, 1);
  auto x = h.gens->slot_of(h.gens->lookup("x_1_1"));
  h.delta[x] = parse_tensor("x_1_1 | 1 + 1 | x_1_1 + x_1_1 | x_1_1", h.gens, h.gens, h.gens2); // p⊗q dropped
  const std::uint64_t seed = 9;
  const int k = 4;
  auto cs = check_hopf_axioms_pointwise(h, k, 10, seed, 2);
  const auto* c = find_check(cs, "coproduct dualizes the matrix product (pointwise)");
  ASSERT_TRUE(c && !c->ok());
  std::size_t i = c->witness["case"];
  auto a = point_from_json(c->witness["point"]);

  point_sampler s(1, 1, k, derive_seed(seed, i));
  EXPECT_EQ(s.sample(), a);
  auto b = s.sample();
  auto lam = grassmann_generators(k);
  auto pair = tensor_point_map(h, h.gens2, {gl_point_images(h, a, lam), gl_point_images(h, b, lam)}, lam);
  auto product = gl_point_images(h, matrix_mul(a, b), lam);
  EXPECT_NE(pair.apply(h.delta[x]), product[x]);
  EXPECT_EQ(c->witness["generator"], "x_1_1");
}

TEST(Witness, SymbolicCounitFailureReplays) {
  auto h = exterior_hopf(1);
  h.delta[0] = parse_tensor("1 | v1", h.gens, h.gens, h.gens2);
  auto cs = check_hopf_axioms_symbolic(h);
  const auto* c = find_check(cs, "counit (id⊗ε)Δ = id");
  ASSERT_TRUE(c && !c->ok());
  auto v = parse_poly(c->witness["element"].get<std::string>(), h.gens);
  // (id⊗ε)(1⊗v1) = ε(v1) = 0, which differs from v1
  EXPECT_EQ(c->witness["lhs"], "0");
  EXPECT_EQ(v, super_poly::generator(h.gens, "v1"));
}

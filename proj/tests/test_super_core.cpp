#include "superhopf/super_poly.hpp"
#include "superhopf/syntax.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace superhopf;

namespace {

gen_set_ptr basic() { return generator_set::make({"x", "y"}, {"t1", "t2", "t3"}); }

super_poly g(const gen_set_ptr& s, const char* name) { return super_poly::generator(s, name); }
super_poly c(const gen_set_ptr& s, scalar v) { return super_poly(s, v); }

// Oracle: bubble sort of the odd factors, counting adjacent swaps.
std::pair<int, std::vector<std::size_t>> bubble_sign(std::vector<std::size_t> odd) {
  int sign = 1;
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = 0; j + 1 < odd.size() - i; ++j)
      if (odd[j] > odd[j + 1]) {
        std::swap(odd[j], odd[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < odd.size(); ++i)
    if (odd[i] == odd[i + 1]) return {0, {}};
  return {sign, odd};
}

super_poly random_poly(const gen_set_ptr& s, std::mt19937_64& rng, int terms, int max_deg) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, max_deg), slot(0, static_cast<int>(s->size()) - 1);
  super_poly p(s);
  for (int t = 0; t < terms; ++t) {
    super_poly m(s, scalar(coef(rng)));
    int d = deg(rng);
    for (int i = 0; i < d; ++i) m = m * super_poly::generator(s, s->slot_symbol(static_cast<std::size_t>(slot(rng))));
    p += m;
  }
  return p;
}

super_poly random_homogeneous(const gen_set_ptr& s, std::mt19937_64& rng, parity par) {
  auto [e, o] = random_poly(s, rng, 5, 4).split_parity();
  return is_odd(par) ? o : e;
}

} // namespace

TEST(NormalizeProduct, KnownValues) {
  auto s = basic();
  auto [s1, m1] = normalize_product(*s, {"t2", "t1"});
  EXPECT_EQ(s1, -1);
  EXPECT_EQ(format_monomial(*s, m1), "t1 * t2");
  auto [s2, m2] = normalize_product(*s, {"x", "t1"});
  EXPECT_EQ(s2, 1);
  EXPECT_EQ(format_monomial(*s, m2), "x * t1");
  EXPECT_EQ(normalize_product(*s, {"t1", "t1"}).first, 0);
  EXPECT_THROW(normalize_product(*s, {"t1", "zz"}), algebra_error);
}

TEST(NormalizeProduct, MatchesBubbleSortOracle) {
  auto s = generator_set::make({"x", "y"}, {"a", "b", "c", "d", "e", "f"});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> len(0, 7), pick(0, 7);
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<std::string> names;
    std::vector<std::size_t> odd_seq;
    std::vector<int> evens(2, 0);
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      int k = pick(rng);
      names.push_back(s->name(s->slot_symbol(static_cast<std::size_t>(k))));
      if (k < 2) ++evens[static_cast<std::size_t>(k)];
      else odd_seq.push_back(static_cast<std::size_t>(k - 2));
    }
    auto [sign, mono] = normalize_product(*s, names);
    auto [osign, sorted] = bubble_sign(odd_seq);
    ASSERT_EQ(sign, osign);
    if (sign == 0) continue;
    EXPECT_EQ(mono.odd_support(), sorted);
    EXPECT_EQ(mono.exponent(0), evens[0]);
    EXPECT_EQ(mono.exponent(1), evens[1]);
  }
}

TEST(SuperPoly, AddExamples) {
  auto s = basic();
  EXPECT_TRUE((g(s, "t1") + (-g(s, "t1"))).is_zero());
  auto a = c(s, 1) + g(s, "t1") * g(s, "t2");
  auto b = c(s, 1) - g(s, "t1") * g(s, "t2");
  EXPECT_EQ(a + b, c(s, 2));
  EXPECT_EQ(parity_of(g(s, "x") + g(s, "t1")), parity_class::mixed);
  auto other = generator_set::make({"x"}, {});
  EXPECT_THROW(g(s, "x") + g(other, "x"), algebra_error);
}

TEST(SuperPoly, MulExamples) {
  auto s = basic();
  auto t1 = g(s, "t1"), t2 = g(s, "t2"), x = g(s, "x");
  EXPECT_EQ(format_poly(t1 * t2), "t1 * t2");
  EXPECT_EQ(t2 * t1, -(t1 * t2));
  auto a = c(s, 1) + t1 * t2;
  EXPECT_EQ(a * a, c(s, 1) + c(s, 2) * t1 * t2);
  EXPECT_EQ(x * t1, t1 * x);
  EXPECT_TRUE((t1 * t1).is_zero());
}

TEST(SuperPoly, ParityOf) {
  auto s = basic();
  EXPECT_EQ(parity_of(g(s, "t1") * g(s, "t2")), parity_class::even);
  EXPECT_EQ(parity_of(g(s, "x") * g(s, "t1")), parity_class::odd);
  EXPECT_EQ(parity_of(g(s, "x") + g(s, "t1")), parity_class::mixed);
  EXPECT_EQ(parity_of(super_poly(s)), parity_class::even);
}

TEST(SuperPoly, SuperCommutativityAssociativityUnit) {
  auto s = basic();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    parity pa = trial & 1 ? parity::odd : parity::even;
    parity pb = trial & 2 ? parity::odd : parity::even;
    auto a = random_homogeneous(s, rng, pa);
    auto b = random_homogeneous(s, rng, pb);
    auto ab = a * b, ba = b * a;
    EXPECT_EQ(ab, koszul_sign(pa, pb) < 0 ? -ba : ba);
    auto p = random_poly(s, rng, 4, 3), q = random_poly(s, rng, 4, 3), r = random_poly(s, rng, 4, 3);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * c(s, 1), p);
    EXPECT_EQ(c(s, 1) * p, p);
  }
}

TEST(TensorMul, KnownValues) {
  auto a = generator_set::make({"x"}, {"tp"});
  auto b = generator_set::make({"y"}, {"t"});
  auto prod = tensor_set({a, b});
  auto one_a = c(a, 1), one_b = c(b, 1);
  auto lhs = super_tensor::pure(one_a, g(b, "t"), prod);
  auto rhs = super_tensor::pure(g(a, "tp"), one_b, prod);
  auto expected = super_tensor::pure(-g(a, "tp"), g(b, "t"), prod);
  EXPECT_EQ(tensor_mul(lhs, rhs), expected);
  EXPECT_EQ(format_tensor(tensor_mul(lhs, rhs)), "-tp | t");
  EXPECT_EQ(tensor_mul(super_tensor::pure(g(a, "x"), one_b, prod), super_tensor::pure(one_a, g(b, "y"), prod)),
            super_tensor::pure(g(a, "x"), g(b, "y"), prod));
  auto unit = super_tensor::pure(one_a, one_b, prod);
  EXPECT_EQ(tensor_mul(tensor_mul(lhs, rhs), unit), tensor_mul(lhs, tensor_mul(rhs, unit)));
}

// Oracle: the displayed rule (a⊗b)(c⊗d) = (-1)^{|b||c|} ac ⊗ bd computed leg by leg.
TEST(TensorMul, MatchesLegwiseSignFormula) {
  auto a = generator_set::make({"x"}, {"u1", "u2"});
  auto b = generator_set::make({"y"}, {"w1", "w2"});
  auto prod = tensor_set({a, b});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto pa = trial & 1 ? parity::odd : parity::even;
    auto pb = trial & 2 ? parity::odd : parity::even;
    auto pc = trial & 4 ? parity::odd : parity::even;
    auto pd = trial & 8 ? parity::odd : parity::even;
    auto x1 = random_homogeneous(a, rng, pa), y1 = random_homogeneous(b, rng, pb);
    auto x2 = random_homogeneous(a, rng, pc), y2 = random_homogeneous(b, rng, pd);
    auto got = tensor_mul(super_tensor::pure(x1, y1, prod), super_tensor::pure(x2, y2, prod));
    auto want = super_tensor::pure(x1 * x2, y1 * y2, prod);
    if (koszul_sign(pb, pc) < 0) want = super_tensor::pure(-(x1 * x2), y1 * y2, prod);
    EXPECT_EQ(got, want);
    auto r = super_tensor::pure(random_poly(a, rng, 3, 2), random_poly(b, rng, 3, 2), prod);
    auto s1 = super_tensor::pure(x1, y1, prod), s2 = super_tensor::pure(x2, y2, prod);
    EXPECT_EQ(tensor_mul(tensor_mul(s1, s2), r), tensor_mul(s1, tensor_mul(s2, r)));
  }
}

TEST(TensorMul, FlipTwiceIsIdentity) {
  auto a = generator_set::make({"x"}, {"u1", "u2"});
  auto b = generator_set::make({}, {"w1"});
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto t = super_tensor::pure(random_homogeneous(a, rng, trial & 1 ? parity::odd : parity::even),
                                random_homogeneous(b, rng, trial & 2 ? parity::odd : parity::even));
    auto back = flip(flip(t));
    EXPECT_EQ(back.value(), t.value());
  }
  auto t = super_tensor::pure(g(a, "u1"), g(b, "w1"));
  EXPECT_EQ(format_tensor(flip(t)), "-w1 | u1");
}

TEST(EvaluateHom, KnownValues) {
  auto src = generator_set::make({"x"}, {"t1", "t2"});
  auto lam = generator_set::make({}, {"th1", "th2"});
  std::map<std::string, super_poly> img{{"t1", g(lam, "th1")}, {"t2", g(lam, "th2")},
                                        {"x", c(lam, 1) + g(lam, "th1") * g(lam, "th2")}};
  EXPECT_EQ(evaluate_hom(g(src, "t1") * g(src, "t2"), img, lam), g(lam, "th1") * g(lam, "th2"));
  EXPECT_EQ(evaluate_hom(g(src, "x") * g(src, "x"), img, lam), c(lam, 1) + c(lam, 2) * g(lam, "th1") * g(lam, "th2"));
  EXPECT_TRUE(evaluate_hom(g(src, "t1") * g(src, "t1"), img, lam).is_zero());
  auto bad = img;
  bad["t1"] = c(lam, 1);
  EXPECT_THROW(evaluate_hom(g(src, "t1"), bad, lam), algebra_error);
  EXPECT_THROW(evaluate_hom(g(src, "t1"), {{"nope", c(lam, 1)}}, lam), algebra_error);
}

TEST(EvaluateHom, Multiplicative) {
  auto src = basic();
  auto lam = generator_set::make({}, {"a", "b", "c", "d"});
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    std::map<std::string, super_poly> img;
    for (const auto& e : src->evens()) img[e] = random_homogeneous(lam, rng, parity::even);
    for (const auto& o : src->odds()) img[o] = random_homogeneous(lam, rng, parity::odd);
    auto p = random_poly(src, rng, 4, 3), q = random_poly(src, rng, 4, 3);
    EXPECT_EQ(evaluate_hom(p * q, img, lam), evaluate_hom(p, img, lam) * evaluate_hom(q, img, lam));
  }
}

TEST(Syntax, ParsePrintRoundTrip) {
  auto s = parse_generators("even x, y; odd t1, t2;");
  EXPECT_EQ(format_generators(*s), "even x, y; odd t1, t2;");
  auto p = parse_poly("3/2 * x^2 * t1*t2 - (x + 1)*t2", s);
  EXPECT_EQ(p.coefficient(normalize_product(*s, {"x", "x", "t1", "t2"}).second), scalar(3, 2));
  EXPECT_EQ(parse_poly(format_poly(p), s), p);
  EXPECT_EQ(parse_poly("t2*t1", s), -parse_poly("t1*t2", s));
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    auto q = random_poly(s, rng, 5, 4) * scalar(1, trial % 7 + 1);
    EXPECT_EQ(parse_poly(format_poly(q), s), q);
  }
  try {
    parse_poly("x + \n  zz", s);
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
  EXPECT_THROW(parse_poly("x +", s), parse_error);
}

TEST(Syntax, TensorExpressions) {
  auto s = parse_generators("odd v;");
  auto prod = tensor_power(s, 2);
  auto a = parse_tensor("1 | v + v ⊗ 1", s, s, prod);
  auto t = super_tensor::from_value(s, s, a);
  EXPECT_EQ(parse_tensor(format_tensor(t), s, s, prod), a);
}

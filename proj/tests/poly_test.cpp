#include <gtest/gtest.h>

#include <random>

#include "dkit/linear_forms.hpp"
#include "dkit/poly.hpp"
#include "dkit/sphere.hpp"
#include "fixtures.hpp"
#include "random_poly.hpp"

using namespace dkit;
using fx::P;

namespace {

MultiPoly mono(std::vector<std::uint32_t> e, GaussianRational c = 1) { return MultiPoly::term(Monomial(std::move(e)), c); }

}  // namespace

TEST(Poly, ConjugateProduct) {
  EXPECT_EQ(P("(x+i*y)*(x-i*y)"), mono({2, 0, 0}) + mono({0, 2, 0}));
  EXPECT_EQ(P("x+i*y") + MultiPoly(3), P("x+i*y"));
}

TEST(Poly, ExpansionMatchesHandExpansion) {
  const MultiPoly expected = mono({3, 0, 0}) + mono({2, 1, 0}) + mono({1, 2, 0}) + mono({0, 3, 0});
  EXPECT_EQ(P("x+y") * P("x+i*y") * P("x-i*y"), expected);
}

TEST(Poly, ZeroCoefficientsNeverStored) {
  MultiPoly p = P("x - x + 0*y");
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.degree(), -1);
  p.add_term(Monomial(std::vector<std::uint32_t>{1, 0, 0}), 2);
  p.add_term(Monomial(std::vector<std::uint32_t>{1, 0, 0}), -2);
  EXPECT_EQ(p.size(), 0u);
}

TEST(Poly, Derivatives) {
  EXPECT_EQ(P("x^2+y^2+z^2-1").derivative(2), P("2*z"));
  EXPECT_EQ(P("x+i*y").derivative(1), P("i"));
  EXPECT_EQ(P("x^2*y^3").derivative(1), P("3*x^2*y^2"));
}

TEST(Poly, SphereReductionExamples) {
  const auto& ctx = fx::s2();
  EXPECT_EQ(ctx.remainder(P("z^2")), P("1-x^2-y^2"));
  EXPECT_EQ(ctx.remainder(P("x+y")), P("x+y"));
  EXPECT_EQ(ctx.remainder(P("z^3")), P("z - x^2*z - y^2*z"));
  auto r = ctx.reduce(P("z^3"));
  EXPECT_EQ(r.remainder + r.multiplier * ctx.G(), P("z^3"));
}

TEST(Poly, ExactDivisionExamples) {
  EXPECT_EQ(exact_divide(P("x^2+y^2"), P("x+i*y")), P("x-i*y"));
  EXPECT_FALSE(exact_divide(P("x^2+y^2"), P("x+y")).has_value());
  EXPECT_EQ(exact_divide(P("-i*(x+y)*(x^2+y^2)"), P("x+i*y")), P("-i*(x+y)*(x-i*y)"));
  EXPECT_THROW(exact_divide(P("x"), MultiPoly(3)), std::domain_error);
}

TEST(Poly, EvaluationExamples) {
  const std::vector<GaussianRational> on_sphere{1, 0, 0};
  EXPECT_TRUE(fx::s2().G().evaluate(on_sphere).is_zero());
  const std::vector<GaussianRational> p{1, 1, 0};
  EXPECT_EQ(P("x+i*y").evaluate(p), GaussianRational(1, 1));
  const std::vector<GaussianRational> north{0, 0, 1};
  EXPECT_TRUE(fx::complex_meridian_field().component(2).evaluate(north).is_zero());
  const std::vector<double> fp{0.5, 2.0, -1.0};
  EXPECT_DOUBLE_EQ(P("x*y - z^2").evaluate(fp).real(), 0.0);
}

TEST(Poly, CanonicalFormIndependentOfOperationOrder) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto a = fx::random_poly(rng, 3, 3, 5);
    auto b = fx::random_poly(rng, 3, 3, 5);
    auto c = fx::random_poly(rng, 3, 2, 4);
    EXPECT_EQ((a + b) * c, c * b + a * c);
    EXPECT_EQ((a - b) + b, a);
    EXPECT_EQ((a * b).to_string(), (b * a).to_string());
  }
}

TEST(Poly, SphereReductionIdempotentAndExact) {
  std::mt19937_64 rng(12);
  const auto& ctx = fx::s2();
  for (int t = 0; t < 200; ++t) {
    auto f = fx::random_poly(rng, 3, 6, 8);
    auto r = ctx.reduce(f);
    EXPECT_TRUE(ctx.is_reduced(r.remainder));
    EXPECT_EQ(ctx.remainder(r.remainder), r.remainder);
    EXPECT_EQ(exact_divide(f - r.remainder, ctx.G()).value_or(MultiPoly(3)) * ctx.G(), f - r.remainder);
    EXPECT_LE(r.remainder.degree_in(2), 1);
  }
}

TEST(Poly, ExactDivideRoundTrip) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    auto f = fx::random_poly(rng, 3, 3, 5);
    auto g = fx::random_poly(rng, 3, 2, 4);
    if (g.is_zero()) continue;
    auto q = exact_divide(f * g, g);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, f);
    auto q2 = exact_divide(f + MultiPoly::constant(3, 1), g);
    if (q2) EXPECT_EQ(*q2 * g, f + MultiPoly::constant(3, 1));
  }
}

TEST(Poly, DegreeAdditivityAndConjugation) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    auto f = fx::random_poly(rng, 3, 4, 5);
    auto g = fx::random_poly(rng, 3, 4, 5);
    if (!f.is_zero() && !g.is_zero()) EXPECT_EQ((f * g).degree(), f.degree() + g.degree());
    EXPECT_EQ((f * g).conj(), f.conj() * g.conj());
    EXPECT_EQ(f.real_part() + GaussianRational::i() * f.imag_part(), f);
    EXPECT_TRUE(f.real_part().is_real());
  }
  auto r = fx::random_poly(rng, 3, 4, 6, false);
  EXPECT_EQ(r.conj(), r);
}

TEST(Poly, ComposeAndExtend) {
  std::vector<MultiPoly> images{P("y"), P("x"), P("z+1")};
  EXPECT_EQ(P("x^2*z").compose(images), P("y^2*z + y^2"));
  EXPECT_EQ(fx::P2("x*y").extend(3), P("x*y"));
}

TEST(Poly, RenderingUsesGrammar) {
  EXPECT_EQ(P("x^2 + 1/2*y - 3").to_string(fx::xyz()), "x^2 + 1/2*y - 3");
  EXPECT_EQ(P("(1+i)*x").to_string(fx::xyz()), "(1 + i)*x");
  EXPECT_EQ(MultiPoly(3).to_string(fx::xyz()), "0");
}

TEST(LinearForms, NormalForm) {
  EXPECT_EQ(linear_normal_form(P("-2*x - 4*y")), P("x + 2*y"));
  EXPECT_EQ(linear_normal_form(P("i*x + y")), P("x - i*y"));
  EXPECT_EQ(linear_normal_form(P("1/2*x + 1/3*y")), P("3*x + 2*y"));
  EXPECT_EQ(linear_normal_form(P("(2+2*i)*x + 4*y")), P("x + (1 - i)*y"));
  auto c = linear_coefficients(P("3*x - z + 5"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(linear_from_coefficients(*c), P("3*x - z + 5"));
  EXPECT_FALSE(linear_coefficients(P("x*y")).has_value());
}

TEST(LinearForms, PencilFindsPlantedSlopes) {
  // (y - 2x)^2 (y + x/3) x^3 z
  const MultiPoly f = P("(y-2*x)^2*(y+1/3*x)*x^3*z");
  auto pf = pencil_factors(f, 0, 1);
  EXPECT_EQ(pf.u_multiplicity, 3u);
  ASSERT_EQ(pf.slopes.exact.size(), 2u);
  unsigned total = 0;
  for (const auto& e : pf.slopes.exact) {
    total += e.multiplicity;
    if (e.root == GaussianRational(2)) EXPECT_EQ(e.multiplicity, 2u);
  }
  EXPECT_EQ(total, 3u);
}

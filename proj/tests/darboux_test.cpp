#include <gtest/gtest.h>

#include <random>

#include "dkit/bounds.hpp"
#include "dkit/darboux.hpp"
#include "fixtures.hpp"
#include "random_poly.hpp"

using namespace dkit;
using fx::P;

namespace {

CofactorSystem system_of(std::vector<MultiPoly> ks, const SphereContext* ctx = nullptr) {
  CofactorSystem cs;
  cs.surface_cofactors = std::move(ks);
  cs.sphere = ctx;
  return cs;
}

MultiPoly combination(const CofactorSystem& cs, const DarbouxFunction& d) {
  MultiPoly acc(cs.surface_cofactors.empty() ? cs.exponential_cofactors[0].nvars() : cs.surface_cofactors[0].nvars());
  for (std::size_t i = 0; i < cs.surface_cofactors.size(); ++i) acc += d.lambdas[i] * cs.surface_cofactors[i];
  for (std::size_t j = 0; j < cs.exponential_cofactors.size(); ++j) acc += d.mus[j] * cs.exponential_cofactors[j];
  acc += MultiPoly::constant(acc.nvars(), GaussianRational(d.sigma));
  return cs.sphere ? cs.sphere->remainder(acc) : acc;
}

std::vector<InvariantSurface> ambient_surfaces() {
  const auto X = fx::complex_meridian_field();
  std::vector<InvariantSurface> out;
  for (const char* f : {"x + i*y", "x - i*y", "x^2 + y^2 + z^2 - 1"}) out.push_back(*cofactor_solve(X, P(f)).surface);
  return out;
}

}  // namespace

TEST(FirstIntegral, DuplicateCofactors) {
  auto sols = find_first_integral(system_of({P("x + z"), P("x + z")}));
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].lambdas, (std::vector<GaussianRational>{1, -1}));
}

TEST(FirstIntegral, AmbientComplexMeridianField) {
  auto surfaces = ambient_surfaces();
  EXPECT_EQ(surfaces[0].cofactor, P("x + y - 2*z"));
  EXPECT_EQ(surfaces[1].cofactor, P("-(x + y + 2*z)"));
  EXPECT_EQ(surfaces[2].cofactor, P("-2*z"));
  auto sols = find_first_integral(CofactorSystem::from(surfaces, {}, nullptr));
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].lambdas, (std::vector<GaussianRational>{1, 1, -2}));
}

TEST(FirstIntegral, SphereMeridiansAloneHaveNone) {
  auto sols = find_first_integral(system_of({P("x + y - 2*z"), P("-(x + y + 2*z)"), P("-i*(x - y - 2*i*z)")}, &fx::s2()));
  EXPECT_TRUE(sols.empty());
}

TEST(FirstIntegral, SolutionsExactAndSpanComplete) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 30; ++t) {
    std::vector<MultiPoly> ks;
    for (int j = 0; j < 3; ++j) ks.push_back(fx::random_poly(rng, 3, 1, 3));
    ks.push_back(ks[0] + GaussianRational(2) * ks[1]);
    ks.push_back(fx::random_poly(rng, 3, 1, 3));
    auto cs = system_of(ks);
    auto sols = find_first_integral(cs);
    EXPECT_GE(sols.size(), 1u);
    for (const auto& s : sols) {
      EXPECT_TRUE(combination(cs, s).is_zero());
      EXPECT_FALSE(s.is_trivial());
    }
    // A vector off the span: perturb a solution in one coordinate.
    DarbouxFunction off = sols[0];
    off.lambdas[4] += 1;
    if (!ks[4].is_zero()) EXPECT_FALSE(combination(cs, off).is_zero());
  }
}

TEST(FirstIntegral, ThresholdGuaranteesSolution) {
  std::mt19937_64 rng(62);
  for (int m1 = 1; m1 <= 3; ++m1) {
    // Ambient R^2: p = thm1b cofactors of degree m1 - 1.
    const auto b = bounds(2, DegreeVector({m1, m1}));
    std::vector<MultiPoly> ks;
    for (long j = 0; j < b.thm1b.get_si(); ++j) ks.push_back(fx::random_poly(rng, 2, m1 - 1, 6));
    EXPECT_FALSE(find_first_integral(system_of(ks)).empty());
    // Sphere S^2: p = thm3b cofactors, compared modulo G.
    const auto bs = bounds(2, DegreeVector({m1, m1, m1}));
    std::vector<MultiPoly> kss;
    for (long j = 0; j < bs.thm3b.get_si(); ++j) kss.push_back(fx::random_poly(rng, 3, m1 - 1, 8));
    EXPECT_FALSE(find_first_integral(system_of(kss, &fx::s2())).empty());
  }
}

TEST(TimeInvariant, Examples) {
  auto a = find_time_invariant(system_of({P("-1")}));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->lambdas[0], GaussianRational(1));
  EXPECT_EQ(a->sigma, 1);

  EXPECT_FALSE(find_first_integral(system_of({P("z"), P("-z")})).empty());
  EXPECT_FALSE(find_time_invariant(system_of({P("z"), P("-z")})).has_value());

  auto c = find_time_invariant(system_of({P("1 + z"), P("-z")}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->lambdas, (std::vector<GaussianRational>{1, 1}));
  EXPECT_EQ(c->sigma, -1);
}

TEST(VerifyDarboux, RationalFirstIntegral) {
  auto surfaces = ambient_surfaces();
  DarbouxFunction D;
  D.lambdas = {1, 1, -2};
  auto check = verify_darboux(fx::complex_meridian_field(), D, surfaces, {});
  EXPECT_TRUE(check.pass);
  EXPECT_TRUE(check.residual.is_zero());
  ASSERT_TRUE(check.quotient_residual.has_value());
  EXPECT_TRUE(check.quotient_residual->is_zero());

  // Independent expansion: X(N) D - N X(D) for H = (x^2 + y^2) / G^2.
  const auto X = fx::complex_meridian_field();
  const MultiPoly N = P("x^2 + y^2"), Dn = P("(x^2 + y^2 + z^2 - 1)^2");
  EXPECT_TRUE((lie_derivative(X, N) * Dn - N * lie_derivative(X, Dn)).is_zero());
}

TEST(VerifyDarboux, FailuresAndRejections) {
  auto surfaces = ambient_surfaces();
  DarbouxFunction D;
  D.lambdas = {1, 0, 0};
  auto check = verify_darboux(fx::complex_meridian_field(), D, surfaces, {});
  EXPECT_FALSE(check.pass);
  EXPECT_EQ(check.residual, P("x + y - 2*z"));

  DarbouxFunction zero;
  zero.lambdas = {0, 0, 0};
  EXPECT_THROW(verify_darboux(fx::complex_meridian_field(), zero, surfaces, {}), std::invalid_argument);
  auto wrong = surfaces;
  wrong[0].cofactor = P("x");
  EXPECT_THROW(verify_darboux(fx::complex_meridian_field(), D, wrong, {}), std::invalid_argument);
  DarbouxFunction short_d;
  short_d.lambdas = {1};
  EXPECT_THROW(verify_darboux(fx::complex_meridian_field(), short_d, surfaces, {}), std::invalid_argument);
}

TEST(RealForm, ConjugatePairs) {
  const std::vector<MultiPoly> fs{P("x + i*y"), P("x - i*y")};
  DarbouxFunction a;
  a.lambdas = {1, 1};
  auto ra = real_form(a, fs, {});
  ASSERT_EQ(ra.surfaces.size(), 1u);
  EXPECT_EQ(ra.surfaces[0].re_f * ra.surfaces[0].re_f + ra.surfaces[0].im_f * ra.surfaces[0].im_f, P("x^2 + y^2"));
  EXPECT_EQ(ra.surfaces[0].power, 1);
  EXPECT_EQ(ra.surfaces[0].angle_coeff, 0);

  DarbouxFunction b;
  b.lambdas = {GaussianRational::i(), -GaussianRational::i()};
  auto rb = real_form(b, fs, {});
  ASSERT_EQ(rb.surfaces.size(), 1u);
  EXPECT_EQ(rb.surfaces[0].power, 0);
  EXPECT_EQ(rb.surfaces[0].angle_coeff, -2);

  DarbouxFunction notreal;
  notreal.lambdas = {1, 0};
  EXPECT_THROW(real_form(notreal, fs, {}), std::invalid_argument);
}

TEST(RealForm, ExponentialPairMerges) {
  std::vector<ExponentialFactor> ef{{P("x + i*y"), P("1"), MultiPoly(3), std::nullopt},
                                    {P("x - i*y"), P("1"), MultiPoly(3), std::nullopt}};
  DarbouxFunction d;
  d.mus = {1, 1};
  auto r = real_form(d, {}, ef);
  ASSERT_EQ(r.exponentials.size(), 1u);
  const auto& t = r.exponentials[0];
  EXPECT_EQ(t.scale, 2);
  EXPECT_EQ(t.h, P("1"));
  EXPECT_EQ((t.mu * t.g).real_part() * GaussianRational(t.scale), P("2*x"));
}

TEST(RealForm, RealSingleFactor) {
  DarbouxFunction d;
  d.lambdas = {-2};
  auto r = real_form(d, {P("x^2 + y^2 + z^2 - 1")}, {});
  ASSERT_EQ(r.surfaces.size(), 1u);
  EXPECT_TRUE(r.surfaces[0].im_f.is_zero());
  EXPECT_EQ(r.surfaces[0].power, -1);
}

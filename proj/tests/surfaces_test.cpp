#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dkit/bounds.hpp"
#include "dkit/linalg.hpp"
#include "dkit/linear_forms.hpp"
#include "dkit/surfaces.hpp"
#include "fixtures.hpp"

using namespace dkit;
using fx::P;
using fx::P2;

namespace {

const SphereContext* S2() { return &fx::s2(); }

bool has(const std::vector<InvariantSurface>& v, const MultiPoly& f) {
  return std::any_of(v.begin(), v.end(), [&](const InvariantSurface& s) { return s.f == f; });
}

// Identity check written independently of cofactor_solve.
bool identity_holds(const PolyVectorField& X, const InvariantSurface& s, const SphereContext* ctx) {
  MultiPoly lhs = lie_derivative(X, s.f) - s.cofactor * s.f;
  if (s.sphere_multiplier) lhs -= *s.sphere_multiplier * ctx->G();
  return lhs.is_zero() && s.cofactor.degree() <= X.degrees().cofactor_degree();
}

// Tangent quadratic fields on S^2 with the meridians of `planted` forced
// invariant: X(a x + b y) must vanish on the plane (x, y) = (b t, -a t).
std::vector<std::vector<Rational>> planted_meridian_space(const TangentFieldSpace& space,
                                                          const std::vector<std::pair<long, long>>& planted) {
  const auto& basis = space.basis();
  std::vector<std::vector<GaussianRational>> columns;
  for (const auto& v : basis) {
    auto X = space.field_from(v);
    std::vector<GaussianRational> col;
    for (auto [a, b] : planted) {
      const std::vector<MultiPoly> images{P(std::to_string(b) + "*x"), P(std::to_string(-a) + "*x"), P("z")};
      auto L = P(std::to_string(a) + "*x + (" + std::to_string(b) + ")*y");
      auto r = lie_derivative(X, L).compose(images);
      for (const auto& m : monomials_up_to(3, 3)) col.push_back(r.coefficient(m));
    }
    columns.push_back(col);
  }
  Matrix A(columns[0].size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < columns[c].size(); ++r) A(r, c) = columns[c][r];
  }
  std::vector<std::vector<Rational>> out;
  for (const auto& w : null_space(A)) {
    std::vector<Rational> rw;
    for (const auto& x : w) rw.push_back(x.re());
    out.push_back(space.combine(rw));
  }
  return out;
}

}  // namespace

TEST(Cofactor, ComplexMeridianExamples) {
  auto X = fx::complex_meridian_field();
  auto a = cofactor_solve(X, P("x - i*y"), S2());
  ASSERT_EQ(a.status, CofactorStatus::invariant);
  EXPECT_EQ(a.surface->cofactor, P("-(x + y + 2*z)"));
  auto b = cofactor_solve(X, P("x + y"), S2());
  ASSERT_EQ(b.status, CofactorStatus::invariant);
  EXPECT_EQ(b.surface->cofactor, P("-i*(x - y - 2*i*z)"));
  EXPECT_EQ(b.surface->kind, SurfaceKind::meridian);
  EXPECT_EQ(cofactor_solve(X, P("x - y"), S2()).status, CofactorStatus::not_invariant);
  EXPECT_EQ(cofactor_solve(X, P("x^2+y^2+z^2-1")).surface->cofactor, P("-2*z"));
  EXPECT_THROW(cofactor_solve(X, P("5")), std::invalid_argument);
}

TEST(Cofactor, ParallelExample) {
  auto out = cofactor_solve(fx::parallel_field(), P("z"), S2());
  ASSERT_EQ(out.status, CofactorStatus::invariant);
  EXPECT_EQ(out.surface->cofactor, P("-2*y"));
  EXPECT_EQ(out.surface->kind, SurfaceKind::parallel);
}

TEST(Cofactor, OnlyModuloSphere) {
  auto Y = fx::field({"-y + x*(x^2+y^2+z^2-1)", "x + y*(x^2+y^2+z^2-1)", "z*(x^2+y^2+z^2-1)"});
  ASSERT_TRUE(check_on_sphere(Y, fx::s2()).has_value());
  auto out = cofactor_solve(Y, P("z - 1/2"), S2());
  ASSERT_EQ(out.status, CofactorStatus::invariant);
  EXPECT_TRUE(identity_holds(Y, *out.surface, S2()));
  EXPECT_TRUE(fx::s2().is_reduced(out.surface->cofactor));
  EXPECT_TRUE(out.surface->sphere_multiplier.has_value());
  EXPECT_EQ(cofactor_solve(Y, P("z - 1/2")).status, CofactorStatus::not_invariant);
}

TEST(Cofactor, Transversality) {
  const auto& ctx = fx::s2();
  EXPECT_EQ(cofactor_solve(fx::rotation(), P("z - 1"), S2()).status, CofactorStatus::non_transversal);
  EXPECT_EQ(cofactor_solve(fx::rotation(), P("z - 1/2"), S2()).status, CofactorStatus::invariant);
  EXPECT_EQ(transversal_to_sphere(P("x + y"), ctx), true);
  EXPECT_EQ(transversal_to_sphere(P("3*x + 4*z - 5"), ctx), false);
  EXPECT_EQ(transversal_to_sphere(P("x^2 - z"), ctx), std::nullopt);
  EXPECT_EQ(classify(P("x + i*y"), S2()), SurfaceKind::meridian);
  EXPECT_EQ(classify(P("z - 1/2"), S2()), SurfaceKind::parallel);
  EXPECT_EQ(classify(P("x + z"), S2()), SurfaceKind::hyperplane);
  EXPECT_EQ(classify(P("x^2 + y"), S2()), SurfaceKind::general);
  EXPECT_EQ(classify(P("x + i*y"), nullptr), SurfaceKind::hyperplane);
}

TEST(Parallels, SingleInvariantParallel) {
  auto r = find_parallels(fx::parallel_field(), fx::s2());
  EXPECT_FALSE(r.degenerate);
  ASSERT_EQ(r.exact.size(), 1u);
  EXPECT_EQ(r.exact[0].surface.f, P("z"));
  EXPECT_EQ(r.exact[0].surface.cofactor, P("-2*y"));
  EXPECT_TRUE(r.exact[0].real_visible);
  EXPECT_EQ(r.count_with_multiplicity, 1u);
  EXPECT_EQ(r.bound, 1u);
}

TEST(Parallels, DegenerateRotation) {
  auto r = find_parallels(fx::rotation(), fx::s2());
  EXPECT_TRUE(r.degenerate);
  EXPECT_TRUE(r.exact.empty());
  EXPECT_THROW(find_parallels(fx::field({"1", "0", "0"}), fx::s2()), std::invalid_argument);
}

TEST(Parallels, PlantedHalfParallel) {
  auto X = fx::field({"-z^2 + 1/2*z + y^2", "-x*y", "(z - 1/2)*x"});
  ASSERT_TRUE(check_on_sphere(X, fx::s2()).has_value());
  auto r = find_parallels(X, fx::s2());
  ASSERT_EQ(r.exact.size(), 1u);
  EXPECT_EQ(r.exact[0].k, GaussianRational(Rational(1, 2)));
  EXPECT_TRUE(r.exact[0].real_visible);
  auto check = cofactor_solve(X, P("z - 1/2"), S2());
  EXPECT_EQ(check.status, CofactorStatus::invariant);
  EXPECT_LE(r.count_with_multiplicity, r.bound);
}

TEST(Parallels, IrrationalAndInvisibleParallels) {
  // Roots +-1/sqrt(2) are visible, z = 2 is not.
  auto Y = fx::field({"-z*(z^2 - 1/2)", "0", "x*(z^2 - 1/2)"});
  ASSERT_TRUE(check_on_sphere(Y, fx::s2()).has_value());
  auto r = find_parallels(Y, fx::s2());
  EXPECT_TRUE(r.exact.empty());
  ASSERT_EQ(r.nonexact.size(), 1u);
  EXPECT_EQ(r.real_visible_count, 2u);
  auto Z = fx::field({"-z*(z - 2)", "0", "x*(z - 2)"});
  auto rz = find_parallels(Z, fx::s2());
  ASSERT_EQ(rz.exact.size(), 1u);
  EXPECT_FALSE(rz.exact[0].real_visible);
}

TEST(Meridians, ComplexExampleAttainsBound) {
  auto r = find_meridians(fx::complex_meridian_field(), fx::s2());
  EXPECT_FALSE(r.degenerate);
  EXPECT_TRUE(r.complete);
  ASSERT_EQ(r.meridians.size(), 3u);
  EXPECT_TRUE(has(r.meridians, P("x + i*y")));
  EXPECT_TRUE(has(r.meridians, P("x - i*y")));
  EXPECT_TRUE(has(r.meridians, P("x + y")));
  for (const auto& m : r.meridians) {
    EXPECT_EQ(m.multiplicity, 1u);
    EXPECT_TRUE(identity_holds(fx::complex_meridian_field(), m, S2()));
  }
  EXPECT_EQ(r.complex_count, 3u);
  EXPECT_EQ(r.bound, 3u);
  EXPECT_EQ(r.real_count, 1u);
}

TEST(Meridians, RotationHasOnlyComplexMeridians) {
  auto r = find_meridians(fx::rotation(), fx::s2());
  EXPECT_EQ(r.extactic, P("x^2 + y^2"));
  EXPECT_EQ(r.complex_count, 2u);
  EXPECT_EQ(r.real_count, 0u);
}

TEST(Meridians, TwoRealMeridians) {
  auto r = find_meridians(fx::two_real_meridians(), fx::s2());
  EXPECT_TRUE(has(r.meridians, P("x")));
  EXPECT_TRUE(has(r.meridians, P("y")));
  EXPECT_EQ(r.real_count, 2u);
}

TEST(Meridians, PlantedMeridiansRecovered) {
  auto space = tangent_field_space(2, DegreeVector({2, 2, 2}));
  const std::vector<std::pair<long, long>> planted{{1, -2}, {3, 1}};
  auto sub = planted_meridian_space(space, planted);
  ASSERT_FALSE(sub.empty());
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> v(space.unknowns(), Rational(0));
    for (const auto& b : sub) {
      const Rational w = d(rng);
      for (std::size_t c = 0; c < v.size(); ++c) v[c] += w * b[c];
    }
    auto X = space.field_from(v);
    auto r = find_meridians(X, fx::s2());
    if (r.degenerate) continue;
    EXPECT_TRUE(has(r.meridians, P("x - 2*y")));
    EXPECT_TRUE(has(r.meridians, P("3*x + y")));
    for (const auto& m : r.meridians) EXPECT_TRUE(identity_holds(X, m, S2()));
    EXPECT_LE(r.complex_count, r.bound);
  }
}

TEST(Meridians, RandomPlaneSearchInFourVariables) {
  const std::vector<std::string> v4{"x", "y", "z", "w"};
  auto Q = [&](const std::string& s) { return cli::parse_poly(s, v4); };
  auto P4 = Q("(x + 2*y - z)*(x - y + 3*z)*(x^2 + y^2 + z^2 + w^2 + 1)");
  auto found = random_plane_linear_factors(P4, {0, 1, 2}, 7, 3);
  std::vector<MultiPoly> expected{linear_normal_form(Q("x + 2*y - z")), linear_normal_form(Q("x - y + 3*z"))};
  for (const auto& e : expected) EXPECT_NE(std::find(found.begin(), found.end(), e), found.end());
  for (const auto& f : found) EXPECT_TRUE(exact_divide(P4, f).has_value());
  EXPECT_THROW(random_plane_linear_factors(P4, {0, 1}, 1, 1), std::invalid_argument);
}

TEST(Hyperplanes, PlantedLines) {
  auto X = fx::field({"x - 1", "3*(y - 2)"}, fx::xy());
  auto r = find_hyperplanes(X);
  EXPECT_FALSE(r.degenerate);
  ASSERT_GE(r.hyperplanes.size(), 2u);
  bool saw_x = false, saw_y = false;
  for (const auto& h : r.hyperplanes) {
    if (h.f == P2("x - 1")) {
      saw_x = true;
      EXPECT_EQ(h.cofactor, P2("1"));
    }
    if (h.f == P2("y - 2")) {
      saw_y = true;
      EXPECT_EQ(h.cofactor, P2("3"));
    }
    EXPECT_TRUE(lie_derivative(X, h.f) == h.cofactor * h.f);
  }
  EXPECT_TRUE(saw_x && saw_y);
  EXPECT_LE(r.count_with_multiplicity, bounds(2, X.degrees()).thm2_total);
}

TEST(Hyperplanes, DegenerateRadialField) {
  auto r = find_hyperplanes(fx::field({"x", "y"}, fx::xy()));
  EXPECT_TRUE(r.degenerate);
}

TEST(Hyperplanes, ThreeDimensionalPlanted) {
  // x - 1 = 0 and x + y + z = 0 invariant.
  auto X = fx::field({"(x - 1)*z", "-(x - 1)*z - (x + y + z)*y", "(x + y + z)*(x + y)"});
  auto r = find_hyperplanes(X);
  EXPECT_TRUE(has(r.hyperplanes, P("x - 1")));
  EXPECT_TRUE(has(r.hyperplanes, P("x + y + z")));
  for (const auto& h : r.hyperplanes) EXPECT_EQ(lie_derivative(X, h.f), h.cofactor * h.f);
}

TEST(ExponentialFactor, Examples) {
  auto X = fx::field({"1", "y"}, fx::xy());
  auto e = verify_exponential_factor(X, P2("x"), P2("1"));
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->cofactor, P2("1"));
  EXPECT_FALSE(verify_exponential_factor(X, P2("x^2"), P2("1")).has_value());
  auto zero = verify_exponential_factor(X, MultiPoly(2), P2("y + 3"));
  ASSERT_TRUE(zero.has_value());
  EXPECT_TRUE(zero->cofactor.is_zero());
  EXPECT_THROW(verify_exponential_factor(X, P2("x"), MultiPoly(2)), std::invalid_argument);
  // exp(x/y) along (x, y): y X(x) - x X(y) = 0.
  auto r = verify_exponential_factor(fx::field({"x", "y"}, fx::xy()), P2("x"), P2("y"));
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(r->cofactor.is_zero());
}

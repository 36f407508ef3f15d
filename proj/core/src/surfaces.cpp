#include "dkit/surfaces.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "dkit/bounds.hpp"
#include "dkit/linalg.hpp"
#include "dkit/linear_forms.hpp"

namespace dkit {

namespace {

struct MultiplierSolution {
  MultiPoly factor;
  std::optional<MultiPoly> sphere_multiplier;
};

// Finds K with T = K*f (+ h*G on the sphere) and deg K <= max_degree.
std::optional<MultiplierSolution> solve_multiplier(const MultiPoly& T, const MultiPoly& f, int max_degree,
                                                   const SphereContext* ctx) {
  const std::size_t nv = f.nvars();
  if (T.is_zero()) return MultiplierSolution{MultiPoly(nv), std::nullopt};
  if (auto q = exact_divide(T, f); q && q->degree() <= max_degree) return MultiplierSolution{*q, std::nullopt};
  if (!ctx) return std::nullopt;

  const auto cols = ctx->reduced_monomials(max_degree);
  std::vector<MultiPoly> images;
  images.reserve(cols.size());
  std::map<Monomial, std::size_t, GradedLex> rows;
  for (const auto& m : cols) {
    images.push_back(ctx->remainder(MultiPoly::term(m, 1) * f));
    for (const auto& [mm, c] : images.back().terms()) rows.try_emplace(mm, rows.size());
  }
  const MultiPoly target = ctx->remainder(T);
  for (const auto& [mm, c] : target.terms()) rows.try_emplace(mm, rows.size());
  if (target.is_zero()) {
    auto h = exact_divide(T, ctx->G());
    if (!h) throw std::logic_error("reduction remainder inconsistent with division by G");
    return MultiplierSolution{MultiPoly(nv), *h};
  }
  Matrix a(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [mm, c] : images[j].terms()) a(rows.at(mm), j) = c;
  }
  Vector b(rows.size());
  for (const auto& [mm, c] : target.terms()) b[rows.at(mm)] = c;
  auto sol = solve(a, b);
  if (!sol) return std::nullopt;
  MultiPoly K(nv);
  for (std::size_t j = 0; j < cols.size(); ++j) K.add_term(cols[j], (*sol)[j]);
  auto h = exact_divide(T - K * f, ctx->G());
  if (!h) throw std::logic_error("sphere cofactor residual not divisible by G");
  return MultiplierSolution{std::move(K), *h};
}

void require_tangent(const PolyVectorField& X, const SphereContext& ctx) {
  if (X.nvars() != ctx.nvars()) throw std::invalid_argument("field and sphere dimensions differ");
  if (!check_on_sphere(X, ctx)) throw std::invalid_argument("field is not tangent to the sphere");
}

// Counts real roots of a residual factor lying in (-1, 1). Each isolating
// interval (lo, hi] holds one irrational root of the real carrier.
unsigned roots_in_unit_interval(const RootSplit::Residual& r) {
  const UniPoly carrier = real_root_carrier(r.factor);
  const auto sign = [&](const Rational& t) { return sgn(carrier.evaluate(GaussianRational(t)).re()); };
  unsigned count = 0;
  for (const auto& iv : r.real_roots) {
    if (iv.hi <= -1 || iv.lo >= 1) continue;
    const bool above = iv.lo >= -1 || sign(iv.lo) == sign(Rational(-1));
    const bool below = iv.hi <= 1 || sign(iv.lo) != sign(Rational(1));
    if (above && below) ++count;
  }
  return count;
}

// Groups the terms of P by their exponents away from `var`; each group is a
// univariate polynomial in `var`, and their gcd carries every root k with
// (x_var - k) | P.
UniPoly coefficient_gcd(const MultiPoly& P, std::size_t var) {
  std::map<std::vector<std::uint32_t>, std::vector<GaussianRational>> groups;
  for (const auto& [m, c] : P.terms()) {
    std::vector<std::uint32_t> key = m.exponents();
    key[var] = 0;
    auto& coeffs = groups[key];
    if (coeffs.size() <= m[var]) coeffs.resize(m[var] + 1);
    coeffs[m[var]] += c;
  }
  UniPoly g;
  for (auto& [key, coeffs] : groups) {
    g = gcd(g, UniPoly(std::move(coeffs)));
    if (g.degree() == 0) break;
  }
  return g;
}

bool contains_same(const std::vector<InvariantSurface>& list, const MultiPoly& f) {
  return std::any_of(list.begin(), list.end(), [&](const InvariantSurface& s) { return s.f == f; });
}

unsigned as_unsigned(const Integer& z) { return static_cast<unsigned>(z.get_ui()); }

}  // namespace

std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::parallel: return "parallel";
    case SurfaceKind::meridian: return "meridian";
    case SurfaceKind::hyperplane: return "hyperplane";
    case SurfaceKind::general: return "general";
  }
  return "general";
}

SurfaceKind classify(const MultiPoly& f, const SphereContext* ctx) {
  auto a = linear_coefficients(f);
  if (!a || f.is_constant()) return SurfaceKind::general;
  if (!ctx) return SurfaceKind::hyperplane;
  const std::size_t last = f.nvars() - 1;
  bool others_zero = true;
  for (std::size_t i = 0; i < last; ++i) others_zero = others_zero && (*a)[i].is_zero();
  if (others_zero && !(*a)[last].is_zero()) return SurfaceKind::parallel;
  if ((*a)[last].is_zero() && (*a)[last + 1].is_zero()) return SurfaceKind::meridian;
  return SurfaceKind::hyperplane;
}

std::optional<bool> transversal_to_sphere(const MultiPoly& f, const SphereContext& ctx) {
  auto a = linear_coefficients(f);
  if (!a || f.is_constant() || f.nvars() != ctx.nvars()) return std::nullopt;
  // grad f = a is parallel to grad G = 2x exactly at x = t a; such a point
  // lies on both sets iff a.a != 0 and a_0^2 = a.a.
  GaussianRational aa;
  for (std::size_t i = 0; i < ctx.nvars(); ++i) aa += (*a)[i] * (*a)[i];
  const GaussianRational& a0 = (*a)[ctx.nvars()];
  if (aa.is_zero()) return true;
  return a0 * a0 != aa;
}

CofactorOutcome cofactor_solve(const PolyVectorField& X, const MultiPoly& f, const SphereContext* ctx) {
  if (f.nvars() != X.nvars()) throw std::invalid_argument("cofactor_solve: dimension mismatch");
  if (f.is_constant()) throw std::invalid_argument("cofactor_solve requires a nonconstant polynomial");
  if (ctx && ctx->nvars() != X.nvars()) throw std::invalid_argument("cofactor_solve: sphere dimension mismatch");
  const auto sol = solve_multiplier(lie_derivative(X, f), f, X.degrees().cofactor_degree(), ctx);
  CofactorOutcome out;
  if (!sol) return out;
  InvariantSurface s;
  s.f = f;
  s.cofactor = sol->factor;
  s.kind = classify(f, ctx);
  s.sphere_multiplier = sol->sphere_multiplier;
  out.status = CofactorStatus::invariant;
  if (ctx) {
    auto tr = transversal_to_sphere(f, *ctx);
    if (tr && !*tr) out.status = CofactorStatus::non_transversal;
  }
  out.surface = std::move(s);
  return out;
}

ParallelReport find_parallels(const PolyVectorField& X, const SphereContext& ctx) {
  require_tangent(X, ctx);
  const std::size_t last = ctx.n();
  const std::size_t nv = ctx.nvars();
  ParallelReport r;
  r.extactic = X.component(last);
  const BoundsReport b = bounds(ctx.n(), X.degrees());
  r.bound = b.thm5 ? as_unsigned(*b.thm5) : 0;
  if (r.extactic.is_zero()) {
    r.degenerate = true;
    return r;
  }
  r.proof_bound = static_cast<unsigned>(r.extactic.degree());
  r.candidate_gcd = coefficient_gcd(r.extactic, last);
  if (r.candidate_gcd.degree() <= 0) return r;
  r.count_with_multiplicity = static_cast<unsigned>(r.candidate_gcd.degree());
  const RootSplit split = split_roots(r.candidate_gcd);
  const MultiPoly z = MultiPoly::variable(nv, last);
  for (const auto& e : split.exact) {
    MultiPoly f = z - MultiPoly::constant(nv, e.root);
    auto outcome = cofactor_solve(X, f, &ctx);
    if (!outcome.surface) throw std::logic_error("factor of the last component failed to be invariant");
    ParallelReport::Exact ex{e.root, std::move(*outcome.surface), false};
    ex.surface.kind = SurfaceKind::parallel;
    ex.surface.multiplicity = multiplicity(r.extactic, f);
    ex.real_visible = e.root.is_real() && abs(e.root.re()) < 1;
    if (ex.real_visible) ++r.real_visible_count;
    r.exact.push_back(std::move(ex));
  }
  for (const auto& res : split.residual) r.real_visible_count += roots_in_unit_interval(res);
  r.nonexact = split.residual;
  return r;
}

std::vector<MultiPoly> random_plane_linear_factors(const MultiPoly& P, const std::vector<std::size_t>& vars,
                                                   std::uint64_t seed, unsigned rounds) {
  const std::size_t k = vars.size();
  if (k < 3) throw std::invalid_argument("random plane search needs at least three variables");
  if (P.is_zero()) throw std::domain_error("random plane search on the zero polynomial");
  const std::size_t nv = P.nvars();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-9, 9);
  const auto random_vector = [&] {
    std::vector<GaussianRational> v(k);
    for (auto& x : v) x = coord(rng);
    return v;
  };
  constexpr std::size_t kComboBudget = 20000;

  std::vector<MultiPoly> found;
  for (unsigned round = 0; round < rounds; ++round) {
    const auto alpha = random_vector();
    // Planes 0..k-2 pin the candidate; plane k-1 filters it.
    std::vector<std::vector<std::vector<GaussianRational>>> points(k);
    bool usable = true;
    for (std::size_t j = 0; j < k && usable; ++j) {
      const auto beta = random_vector();
      std::vector<MultiPoly> images;
      images.reserve(nv);
      for (std::size_t i = 0; i < nv; ++i) images.push_back(MultiPoly::variable(nv, i));
      const MultiPoly u = MultiPoly::variable(nv, vars[0]);
      const MultiPoly v = MultiPoly::variable(nv, vars[1]);
      for (std::size_t i = 0; i < k; ++i) images[vars[i]] = u * alpha[i] + v * beta[i];
      const MultiPoly restricted = P.compose(images);
      if (restricted.is_zero()) {
        usable = false;
        break;
      }
      const PencilFactors pf = pencil_factors(restricted, vars[0], vars[1]);
      for (const auto& e : pf.slopes.exact) {
        std::vector<GaussianRational> p(k);
        for (std::size_t i = 0; i < k; ++i) p[i] = alpha[i] + e.root * beta[i];
        points[j].push_back(std::move(p));
      }
      if (pf.u_multiplicity > 0) points[j].push_back(beta);
    }
    if (!usable) continue;

    std::size_t combos = 1;
    for (std::size_t j = 0; j + 1 < k; ++j) {
      combos *= points[j].size();
      if (combos == 0 || combos > kComboBudget) break;
    }
    if (combos == 0 || combos > kComboBudget) continue;

    std::vector<std::size_t> pick(k - 1, 0);
    for (std::size_t c = 0; c < combos; ++c) {
      std::size_t rest = c;
      for (std::size_t j = 0; j + 1 < k; ++j) {
        pick[j] = rest % points[j].size();
        rest /= points[j].size();
      }
      Matrix m(k - 1, k);
      for (std::size_t j = 0; j + 1 < k; ++j) {
        for (std::size_t i = 0; i < k; ++i) m(j, i) = points[j][pick[j]][i];
      }
      const auto ns = null_space(m);
      if (ns.size() != 1) continue;
      const Vector& a = ns.front();
      const bool passes_filter = std::any_of(points[k - 1].begin(), points[k - 1].end(), [&](const auto& p) {
        GaussianRational dot;
        for (std::size_t i = 0; i < k; ++i) dot += a[i] * p[i];
        return dot.is_zero();
      });
      if (!passes_filter) continue;
      MultiPoly ell(nv);
      for (std::size_t i = 0; i < k; ++i) ell += MultiPoly::variable(nv, vars[i]) * a[i];
      ell = linear_normal_form(ell);
      if (std::find(found.begin(), found.end(), ell) != found.end()) continue;
      if (exact_divide(P, ell)) found.push_back(std::move(ell));
    }
  }
  return found;
}

MeridianReport find_meridians(const PolyVectorField& X, const SphereContext& ctx, const MeridianOptions& opts) {
  require_tangent(X, ctx);
  const std::size_t n = ctx.n();
  const std::size_t nv = ctx.nvars();
  MeridianReport r;
  r.bound = as_unsigned(bounds(n, X.degrees()).thm4);
  r.extactic = extactic(X, BasisW::coordinates(nv, 0, n)).polynomial;
  r.degenerate = r.extactic.is_zero();

  const auto add = [&](const MultiPoly& f) {
    if (contains_same(r.meridians, f)) return;
    auto outcome = cofactor_solve(X, f, &ctx);
    if (!outcome.surface) return;
    outcome.surface->kind = SurfaceKind::meridian;
    if (!r.degenerate) outcome.surface->multiplicity = multiplicity(r.extactic, f);
    r.meridians.push_back(std::move(*outcome.surface));
  };

  if (!r.degenerate && n == 1) {
    // W = {x_1}: E = x_1 itself, the only meridian.
    add(MultiPoly::variable(nv, 0));
    r.complete = true;
  } else if (!r.degenerate && n == 2) {
    const PencilFactors pf = pencil_factors(r.extactic, 0, 1);
    const MultiPoly x = MultiPoly::variable(nv, 0);
    const MultiPoly y = MultiPoly::variable(nv, 1);
    for (const auto& e : pf.slopes.exact) add(linear_normal_form(y - x * e.root));
    if (pf.u_multiplicity > 0) add(x);
    r.residual = pf.slopes.residual;
    r.complex_count = static_cast<unsigned>(std::max(pf.slope_gcd.degree(), 0)) + pf.u_multiplicity;
    r.real_count = static_cast<unsigned>(pf.slope_gcd.degree() > 0 ? count_real_roots(pf.slope_gcd) : 0) +
                   (pf.u_multiplicity > 0 ? 1U : 0U);
    r.complete = true;
  } else if (!r.degenerate) {
    std::vector<std::size_t> vars(n);
    for (std::size_t i = 0; i < n; ++i) vars[i] = i;
    for (const auto& f : random_plane_linear_factors(r.extactic, vars, opts.seed, opts.rounds)) add(f);
  }

  for (const auto& cand : opts.candidates) {
    if (classify(cand, &ctx) != SurfaceKind::meridian) continue;
    add(linear_normal_form(cand));
  }

  if (!r.complete) {
    r.complex_count = 0;
    r.real_count = 0;
    for (const auto& s : r.meridians) {
      r.complex_count += s.multiplicity;
      if (s.f.is_real()) ++r.real_count;
    }
  }
  std::sort(r.meridians.begin(), r.meridians.end(),
            [](const InvariantSurface& a, const InvariantSurface& b) { return a.f.to_string() < b.f.to_string(); });
  return r;
}

namespace {

MultiPoly homogeneous_top(const MultiPoly& P) {
  MultiPoly top(P.nvars());
  const auto d = static_cast<std::uint32_t>(P.degree());
  for (const auto& [m, c] : P.terms()) {
    if (m.degree() == d) top.add_term(m, c);
  }
  return top;
}

// Roots c of sum_j x^j q_j(c) = P(x, t*x + c) (or P(c, y) when vertical).
UniPoly offset_gcd(const MultiPoly& P, const std::optional<GaussianRational>& slope) {
  // Ring (x, y, c); the result lives in x and c only.
  const MultiPoly x = MultiPoly::variable(3, 0);
  const MultiPoly y = MultiPoly::variable(3, 1);
  const MultiPoly c = MultiPoly::variable(3, 2);
  std::vector<MultiPoly> images;
  if (slope) {
    images = {x, x * *slope + c};
  } else {
    images = {c, y};
  }
  return coefficient_gcd(P.compose(images), 2);
}

}  // namespace

HyperplaneReport find_hyperplanes(const PolyVectorField& X, const HyperplaneOptions& opts) {
  const std::size_t nv = X.nvars();
  if (nv == 0) throw std::invalid_argument("find_hyperplanes on an empty field");
  HyperplaneReport r;
  r.bound = as_unsigned(bounds(nv, X.degrees()).thm2_total);
  r.extactic = extactic(X, BasisW::affine(nv)).polynomial;
  r.degenerate = r.extactic.is_zero();

  const auto add = [&](const MultiPoly& f) {
    if (contains_same(r.hyperplanes, f)) return;
    auto outcome = cofactor_solve(X, f, nullptr);
    if (!outcome.surface) return;
    if (!r.degenerate) outcome.surface->multiplicity = multiplicity(r.extactic, f);
    r.hyperplanes.push_back(std::move(*outcome.surface));
  };

  if (!r.degenerate && nv == 1) {
    const UniPoly p = coefficient_gcd(r.extactic, 0);
    if (p.degree() > 0) {
      const RootSplit split = split_roots(p);
      for (const auto& e : split.exact) add(linear_normal_form(MultiPoly::variable(1, 0) - MultiPoly::constant(1, e.root)));
      r.residual = split.residual;
    }
    r.complete = true;
  } else if (!r.degenerate && nv == 2) {
    const MultiPoly top = homogeneous_top(r.extactic);
    const PencilFactors pf = pencil_factors(top, 0, 1);
    const MultiPoly x = MultiPoly::variable(2, 0);
    const MultiPoly y = MultiPoly::variable(2, 1);
    r.complete = pf.slopes.residual.empty();
    r.residual = pf.slopes.residual;
    std::vector<std::optional<GaussianRational>> directions;
    for (const auto& e : pf.slopes.exact) directions.emplace_back(e.root);
    if (pf.u_multiplicity > 0) directions.emplace_back(std::nullopt);
    for (const auto& dir : directions) {
      const UniPoly g = offset_gcd(r.extactic, dir);
      if (g.degree() <= 0) continue;
      const RootSplit split = split_roots(g);
      for (const auto& e : split.exact) {
        const MultiPoly c0 = MultiPoly::constant(2, e.root);
        add(linear_normal_form(dir ? y - x * *dir - c0 : x - c0));
      }
      if (!split.residual.empty()) r.complete = false;
      r.residual.insert(r.residual.end(), split.residual.begin(), split.residual.end());
    }
  } else if (!r.degenerate) {
    // Homogenize with x_0 appended last, then search for linear forms.
    const std::size_t hv = nv + 1;
    const auto d = static_cast<std::uint32_t>(r.extactic.degree());
    MultiPoly Eh(hv);
    for (const auto& [m, c] : r.extactic.terms()) {
      std::vector<std::uint32_t> e = m.exponents();
      e.push_back(d - m.degree());
      Eh.add_term(Monomial(std::move(e)), c);
    }
    std::vector<std::size_t> vars(hv);
    for (std::size_t i = 0; i < hv; ++i) vars[i] = i;
    std::vector<MultiPoly> back;
    for (std::size_t i = 0; i < nv; ++i) back.push_back(MultiPoly::variable(nv, i));
    back.push_back(MultiPoly::constant(nv, 1));
    for (const auto& form : random_plane_linear_factors(Eh, vars, opts.seed, opts.rounds)) {
      const MultiPoly f = form.compose(back);
      if (f.is_constant()) continue;
      add(linear_normal_form(f));
    }
  }

  for (const auto& cand : opts.candidates) {
    if (cand.degree() != 1) continue;
    add(linear_normal_form(cand));
  }
  for (const auto& s : r.hyperplanes) r.count_with_multiplicity += s.multiplicity;
  std::sort(r.hyperplanes.begin(), r.hyperplanes.end(),
            [](const InvariantSurface& a, const InvariantSurface& b) { return a.f.to_string() < b.f.to_string(); });
  return r;
}

std::optional<ExponentialFactor> verify_exponential_factor(const PolyVectorField& X, const MultiPoly& g,
                                                           const MultiPoly& h, const SphereContext* ctx) {
  if (h.is_zero()) throw std::invalid_argument("exponential factor needs a nonzero denominator");
  if (g.nvars() != X.nvars() || h.nvars() != X.nvars()) throw std::invalid_argument("exponential factor: dimension mismatch");
  if (ctx && ctx->nvars() != X.nvars()) throw std::invalid_argument("exponential factor: sphere dimension mismatch");
  const MultiPoly T = h * lie_derivative(X, g) - g * lie_derivative(X, h);
  const auto sol = solve_multiplier(T, h * h, X.degrees().cofactor_degree(), ctx);
  if (!sol) return std::nullopt;
  return ExponentialFactor{g, h, sol->factor, sol->sphere_multiplier};
}

}  // namespace dkit

#include "dkit/darboux.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dkit/linalg.hpp"

namespace dkit {

namespace {

// Columns are the cofactors (plus an optional constant column); rows are
// monomials of their canonical representatives.
Matrix cofactor_matrix(const CofactorSystem& cs, bool with_constant) {
  std::vector<MultiPoly> cols;
  for (const auto& k : cs.surface_cofactors) cols.push_back(cs.sphere ? cs.sphere->remainder(k) : k);
  for (const auto& l : cs.exponential_cofactors) cols.push_back(cs.sphere ? cs.sphere->remainder(l) : l);
  std::map<Monomial, std::size_t, GradedLex> rows;
  if (with_constant && !cols.empty()) rows.try_emplace(Monomial(cols.front().nvars()), 0);
  for (const auto& c : cols) {
    for (const auto& [m, v] : c.terms()) rows.try_emplace(m, rows.size());
  }
  Matrix a(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [m, v] : cols[j].terms()) a(rows.at(m), j) = v;
  }
  return a;
}

DarbouxFunction split(const Vector& v, std::size_t p) {
  DarbouxFunction d;
  d.lambdas.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(p));
  d.mus.assign(v.begin() + static_cast<std::ptrdiff_t>(p), v.end());
  return d;
}

void check_dimensions(const CofactorSystem& cs) {
  if (cs.size() == 0) throw std::invalid_argument("cofactor system is empty");
  const std::size_t nv = cs.surface_cofactors.empty() ? cs.exponential_cofactors.front().nvars()
                                                      : cs.surface_cofactors.front().nvars();
  const auto same = [nv](const MultiPoly& k) { return k.nvars() == nv; };
  if (!std::all_of(cs.surface_cofactors.begin(), cs.surface_cofactors.end(), same) ||
      !std::all_of(cs.exponential_cofactors.begin(), cs.exponential_cofactors.end(), same)) {
    throw std::invalid_argument("cofactors live in different rings");
  }
  if (cs.sphere && cs.sphere->nvars() != nv) throw std::invalid_argument("cofactor system: sphere dimension mismatch");
}

// Returns c with a = c * b for a constant c, when one exists.
std::optional<GaussianRational> constant_ratio(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) return std::nullopt;
  auto q = exact_divide(a, b);
  if (!q || !q->is_constant() || q->is_zero()) return std::nullopt;
  return q->constant_term();
}

}  // namespace

CofactorSystem CofactorSystem::from(const std::vector<InvariantSurface>& surfaces,
                                    const std::vector<ExponentialFactor>& factors, const SphereContext* sphere) {
  CofactorSystem cs;
  for (const auto& s : surfaces) cs.surface_cofactors.push_back(s.cofactor);
  for (const auto& e : factors) cs.exponential_cofactors.push_back(e.cofactor);
  cs.sphere = sphere;
  return cs;
}

bool DarbouxFunction::is_trivial() const {
  const auto zero = [](const GaussianRational& z) { return z.is_zero(); };
  return std::all_of(lambdas.begin(), lambdas.end(), zero) && std::all_of(mus.begin(), mus.end(), zero) &&
         sgn(sigma) == 0;
}

std::vector<DarbouxFunction> find_first_integral(const CofactorSystem& cs) {
  check_dimensions(cs);
  std::vector<DarbouxFunction> out;
  for (const auto& v : null_space(cofactor_matrix(cs, false))) out.push_back(split(v, cs.surface_cofactors.size()));
  return out;
}

std::optional<DarbouxFunction> find_time_invariant(const CofactorSystem& cs) {
  check_dimensions(cs);
  const Matrix a = cofactor_matrix(cs, true);
  // Row 0 is the constant monomial: solve sum l_i K_i + sum u_j L_j = -1.
  Vector b(a.rows());
  b[0] = -1;
  auto sol = solve(a, b);
  if (!sol) return std::nullopt;
  Rational sigma = 1;
  auto first = std::find_if(sol->begin(), sol->end(), [](const GaussianRational& z) { return !z.is_zero(); });
  if (first != sol->end() && first->is_real()) {
    const Rational s = first->re();
    for (auto& z : *sol) z /= GaussianRational(s);
    sigma /= s;
  }
  DarbouxFunction d = split(*sol, cs.surface_cofactors.size());
  d.sigma = sigma;
  return d;
}

DarbouxCheck verify_darboux(const PolyVectorField& X, const DarbouxFunction& D,
                            const std::vector<InvariantSurface>& surfaces,
                            const std::vector<ExponentialFactor>& factors, const SphereContext* ctx) {
  if (D.lambdas.size() != surfaces.size() || D.mus.size() != factors.size()) {
    throw std::invalid_argument("Darboux function does not match the supplied factors");
  }
  if (D.is_trivial()) throw std::invalid_argument("Darboux function with all exponents zero");
  const std::size_t nv = X.nvars();
  const auto canonical = [ctx](const MultiPoly& p) { return ctx ? ctx->remainder(p) : p; };

  for (const auto& s : surfaces) {
    if (!canonical(lie_derivative(X, s.f) - s.cofactor * s.f).is_zero()) {
      throw std::invalid_argument("surface " + s.f.to_string() + " does not satisfy its cofactor identity");
    }
  }
  for (const auto& e : factors) {
    const MultiPoly lhs = e.h * lie_derivative(X, e.g) - e.g * lie_derivative(X, e.h);
    if (!canonical(lhs - e.cofactor * e.h * e.h).is_zero()) {
      throw std::invalid_argument("exponential factor does not satisfy its cofactor identity");
    }
  }

  MultiPoly sum = MultiPoly::constant(nv, GaussianRational(D.sigma));
  for (std::size_t i = 0; i < surfaces.size(); ++i) sum += surfaces[i].cofactor * D.lambdas[i];
  for (std::size_t j = 0; j < factors.size(); ++j) sum += factors[j].cofactor * D.mus[j];
  DarbouxCheck out;
  out.residual = canonical(sum);
  out.pass = out.residual.is_zero();

  const bool integer_exponents = std::all_of(D.lambdas.begin(), D.lambdas.end(), [](const GaussianRational& z) {
    return z.is_real() && z.re().get_den() == 1;
  });
  const bool no_exponentials =
      std::all_of(D.mus.begin(), D.mus.end(), [](const GaussianRational& z) { return z.is_zero(); });
  if (integer_exponents && no_exponentials && sgn(D.sigma) == 0) {
    MultiPoly num = MultiPoly::constant(nv, 1);
    MultiPoly den = MultiPoly::constant(nv, 1);
    for (std::size_t i = 0; i < surfaces.size(); ++i) {
      const long e = D.lambdas[i].re().get_num().get_si();
      if (e > 0) num *= surfaces[i].f.pow(static_cast<unsigned>(e));
      if (e < 0) den *= surfaces[i].f.pow(static_cast<unsigned>(-e));
    }
    out.quotient_residual = canonical(den * lie_derivative(X, num) - num * lie_derivative(X, den));
    out.pass = out.pass && out.quotient_residual->is_zero();
  }
  return out;
}

RealForm real_form(const DarbouxFunction& D, const std::vector<MultiPoly>& surfaces,
                   const std::vector<ExponentialFactor>& factors) {
  if (D.lambdas.size() != surfaces.size() || D.mus.size() != factors.size()) {
    throw std::invalid_argument("Darboux function does not match the supplied factors");
  }
  RealForm out;
  out.sigma = D.sigma;

  std::vector<bool> used(surfaces.size(), false);
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    if (used[i] || D.lambdas[i].is_zero()) continue;
    if (surfaces[i].is_zero()) throw std::invalid_argument("zero factor in a Darboux function");
    used[i] = true;
    const GaussianRational& lam = D.lambdas[i];
    if (surfaces[i].is_real() && lam.is_real()) {
      out.surfaces.push_back({surfaces[i], MultiPoly(surfaces[i].nvars()), lam.re() / 2, 0});
      continue;
    }
    const MultiPoly partner = surfaces[i].conj();
    std::size_t j = i + 1;
    for (; j < surfaces.size(); ++j) {
      if (!used[j] && D.lambdas[j] == lam.conj() && constant_ratio(surfaces[j], partner)) break;
    }
    if (j == surfaces.size()) throw std::invalid_argument("Darboux function is not real: unpaired complex factor");
    used[j] = true;
    out.surfaces.push_back({surfaces[i].real_part(), surfaces[i].imag_part(), lam.re(), -2 * lam.im()});
  }

  std::vector<bool> used_exp(factors.size(), false);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (used_exp[i] || D.mus[i].is_zero()) continue;
    used_exp[i] = true;
    const auto& fi = factors[i];
    const GaussianRational& mu = D.mus[i];
    if (fi.g.is_real() && fi.h.is_real() && mu.is_real()) {
      out.exponentials.push_back({fi.g, fi.h, mu, 1});
      continue;
    }
    std::size_t j = i + 1;
    for (; j < factors.size(); ++j) {
      // g_j / h_j = conj(g_i / h_i)
      if (!used_exp[j] && D.mus[j] == mu.conj() && factors[j].g * fi.h.conj() == fi.g.conj() * factors[j].h) break;
    }
    if (j == factors.size()) throw std::invalid_argument("Darboux function is not real: unpaired exponential factor");
    used_exp[j] = true;
    out.exponentials.push_back({fi.g, fi.h, mu, 2});
  }
  return out;
}

}  // namespace dkit

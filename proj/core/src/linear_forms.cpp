#include "dkit/linear_forms.hpp"

#include <map>
#include <stdexcept>

namespace dkit {

namespace {

// Gaussian integers are carried as GaussianRational with unit denominators.
Integer round_nearest(const Rational& q) {
  // floor(q + 1/2)
  Rational shifted = q + Rational(1, 2);
  Integer z;
  mpz_fdiv_q(z.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return z;
}

GaussianRational gaussian_gcd(GaussianRational a, GaussianRational b) {
  while (!b.is_zero()) {
    GaussianRational q = a / b;
    GaussianRational rq(Rational(round_nearest(q.re())), Rational(round_nearest(q.im())));
    GaussianRational r = a - rq * b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

std::optional<std::vector<GaussianRational>> linear_coefficients(const MultiPoly& f) {
  if (f.degree() > 1) return std::nullopt;
  const std::size_t n = f.nvars();
  std::vector<GaussianRational> a(n + 1);
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() == 0) {
      a[n] = c;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == 1) a[i] = c;
    }
  }
  return a;
}

MultiPoly linear_from_coefficients(std::span<const GaussianRational> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("linear form needs at least the constant coefficient");
  const std::size_t n = coeffs.size() - 1;
  MultiPoly f = MultiPoly::constant(n, coeffs[n]);
  for (std::size_t i = 0; i < n; ++i) f += MultiPoly::variable(n, i) * coeffs[i];
  return f;
}

MultiPoly linear_normal_form(const MultiPoly& f) {
  auto coeffs = linear_coefficients(f);
  if (!coeffs) throw std::invalid_argument("linear_normal_form requires degree at most 1");
  if (f.is_zero()) throw std::invalid_argument("linear_normal_form of the zero polynomial");
  auto& a = *coeffs;
  Integer l = 1;
  for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), denominator_lcm(c).get_mpz_t());
  for (auto& c : a) c *= GaussianRational(Rational(l));
  GaussianRational g;
  for (const auto& c : a) g = gaussian_gcd(g, c);
  for (auto& c : a) c /= g;
  const GaussianRational* first = nullptr;
  for (const auto& c : a) {
    if (!c.is_zero()) {
      first = &c;
      break;
    }
  }
  // Exactly one of u, iu, -u, -iu lies in {re > 0, im >= 0}.
  GaussianRational unit = 1;
  for (int k = 0; k < 4; ++k) {
    GaussianRational t = *first * unit;
    if (sgn(t.re()) > 0 && sgn(t.im()) >= 0) break;
    unit *= GaussianRational::i();
  }
  for (auto& c : a) c *= unit;
  return linear_from_coefficients(a);
}

PencilFactors pencil_factors(const MultiPoly& P, std::size_t u, std::size_t v) {
  if (P.is_zero()) throw std::domain_error("pencil_factors of the zero polynomial");
  if (u >= P.nvars() || v >= P.nvars() || u == v) throw std::invalid_argument("pencil_factors: bad variable pair");
  // P(u, t*u, rest): a term c*u^a*v^b*rest contributes c*t^b to the
  // coefficient of u^(a+b)*rest.
  std::map<std::vector<std::uint32_t>, std::vector<GaussianRational>> groups;
  unsigned umin = ~0U;
  for (const auto& [m, c] : P.terms()) {
    std::vector<std::uint32_t> key = m.exponents();
    key[u] += key[v];
    key[v] = 0;
    auto& coeffs = groups[key];
    if (coeffs.size() <= m[v]) coeffs.resize(m[v] + 1);
    coeffs[m[v]] += c;
    umin = std::min(umin, m[u]);
  }
  UniPoly g;
  for (auto& [key, coeffs] : groups) {
    UniPoly piece(std::move(coeffs));
    if (piece.is_zero()) continue;
    g = gcd(g, piece);
    if (g.degree() == 0) break;
  }
  PencilFactors out;
  out.u_multiplicity = umin;
  out.slope_gcd = g.is_zero() ? UniPoly::constant(1) : g;
  if (out.slope_gcd.degree() > 0) out.slopes = split_roots(out.slope_gcd);
  return out;
}

}  // namespace dkit

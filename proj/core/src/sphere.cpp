#include "dkit/sphere.hpp"

#include <stdexcept>

namespace dkit {

SphereContext::SphereContext(std::size_t n) : n_(n), g_(n + 1) {
  if (n == 0) throw std::invalid_argument("sphere dimension must be at least 1");
  for (std::size_t i = 0; i <= n; ++i) {
    Monomial m(n + 1);
    m.set(i, 2);
    g_.add_term(m, 1);
  }
  g_.add_term(Monomial(n + 1), -1);
}

SphereReduction SphereContext::reduce(const MultiPoly& f) const {
  if (f.nvars() != nvars()) throw std::invalid_argument("reduce_mod_sphere: variable-count mismatch");
  const std::size_t last = n_;
  int top = f.degree_in(last);
  MultiPoly rem = f;
  MultiPoly mult(nvars());
  // Each pass lowers the last-variable degree of the affected terms by two,
  // so sweeping from the top degree down reaches a reduced form.
  for (int d = top; d >= 2; --d) {
    std::vector<std::pair<Monomial, GaussianRational>> hits;
    for (const auto& [m, c] : rem.terms()) {
      if (static_cast<int>(m[last]) == d) hits.emplace_back(m, c);
    }
    for (const auto& [m, c] : hits) {
      rem.add_term(m, -c);
      Monomial base = m;
      base.set(last, m[last] - 2);
      mult.add_term(base, c);
      // c*base*z^2 = c*base*G + c*base*(1 - x_1^2 - ... - x_n^2)
      rem.add_term(base, c);
      for (std::size_t i = 0; i < n_; ++i) {
        Monomial t = base;
        t.set(i, base[i] + 2);
        rem.add_term(t, -c);
      }
    }
  }
  return {std::move(rem), std::move(mult)};
}

bool SphereContext::is_reduced(const MultiPoly& f) const { return f.is_zero() || f.degree_in(n_) <= 1; }

bool SphereContext::equivalent(const MultiPoly& f, const MultiPoly& g) const {
  return remainder(f - g).is_zero();
}

std::vector<Monomial> SphereContext::reduced_monomials(int max_degree) const {
  std::vector<Monomial> out;
  for (auto& m : monomials_up_to(nvars(), max_degree)) {
    if (m[n_] <= 1) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace dkit

#include "dkit/extactic.hpp"

#include <map>
#include <stdexcept>

#include "dkit/linalg.hpp"

namespace dkit {

BasisW::BasisW(std::vector<MultiPoly> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("basis of W must be nonempty");
  const std::size_t nv = elements_.front().nvars();
  std::map<Monomial, std::size_t, GradedLex> rows;
  for (const auto& v : elements_) {
    if (v.nvars() != nv) throw std::invalid_argument("basis elements live in different rings");
    for (const auto& [m, c] : v.terms()) rows.try_emplace(m, rows.size());
  }
  Matrix a(rows.size(), elements_.size());
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    for (const auto& [m, c] : elements_[j].terms()) a(rows.at(m), j) = c;
  }
  if (rank(std::move(a)) != elements_.size()) throw std::invalid_argument("dependent basis for W");
}

bool BasisW::contains(const MultiPoly& f) const {
  if (f.nvars() != nvars()) return false;
  std::map<Monomial, std::size_t, GradedLex> rows;
  for (const auto& v : elements_) {
    for (const auto& [m, c] : v.terms()) rows.try_emplace(m, rows.size());
  }
  for (const auto& [m, c] : f.terms()) {
    if (!rows.count(m)) return false;
  }
  Matrix a(rows.size(), elements_.size());
  Vector b(rows.size());
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    for (const auto& [m, c] : elements_[j].terms()) a(rows.at(m), j) = c;
  }
  for (const auto& [m, c] : f.terms()) b[rows.at(m)] = c;
  return solve(a, b).has_value();
}

BasisW BasisW::affine(std::size_t nvars) {
  std::vector<MultiPoly> e{MultiPoly::constant(nvars, 1)};
  for (std::size_t i = 0; i < nvars; ++i) e.push_back(MultiPoly::variable(nvars, i));
  return BasisW(std::move(e));
}

BasisW BasisW::coordinates(std::size_t nvars, std::size_t first, std::size_t last) {
  std::vector<MultiPoly> e;
  for (std::size_t i = first; i < last; ++i) e.push_back(MultiPoly::variable(nvars, i));
  return BasisW(std::move(e));
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  const std::size_t nv = m[0][0].nvars();
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(nv, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return MultiPoly(nv);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("Bareiss step not exact; matrix entries inconsistent");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MultiPoly(nv);
    }
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

ExtacticResult extactic(const PolyVectorField& X, const BasisW& W) {
  if (W.nvars() != X.nvars()) throw std::invalid_argument("extactic: basis and field dimensions differ");
  const std::size_t l = W.dimension();
  std::vector<std::vector<MultiPoly>> m(l, std::vector<MultiPoly>(l));
  for (std::size_t j = 0; j < l; ++j) {
    // Each column is built by repeated Lie differentiation of v_j.
    MultiPoly cur = W.elements()[j];
    for (std::size_t r = 0; r < l; ++r) {
      m[r][j] = cur;
      if (r + 1 < l) cur = lie_derivative(X, cur);
    }
  }
  MultiPoly det = bareiss_determinant(std::move(m));
  const bool degenerate = det.is_zero();
  return {std::move(det), W, degenerate};
}

unsigned multiplicity(const MultiPoly& E, const MultiPoly& f) {
  if (E.is_zero()) throw std::domain_error("multiplicity undefined for a degenerate extactic polynomial");
  if (f.is_constant()) throw std::invalid_argument("multiplicity requires a nonconstant factor");
  unsigned k = 0;
  MultiPoly rest = E;
  while (true) {
    auto q = exact_divide(rest, f);
    if (!q) break;
    rest = std::move(*q);
    ++k;
  }
  return k;
}

unsigned multiplicity(const ExtacticResult& E, const MultiPoly& f) {
  if (E.degenerate) throw std::domain_error("multiplicity undefined for a degenerate extactic polynomial");
  return multiplicity(E.polynomial, f);
}

}  // namespace dkit

#pragma once

#include <cstddef>

#include "dkit/poly.hpp"

namespace dkit {

/// f = remainder + multiplier * G with remainder of degree at most 1 in the
/// last variable.
struct SphereReduction {
  MultiPoly remainder;
  MultiPoly multiplier;
};

/// The unit sphere S^n in R^{n+1}: G = x_1^2 + ... + x_{n+1}^2 - 1.
class SphereContext {
 public:
  explicit SphereContext(std::size_t n);

  /// Sphere dimension n.
  std::size_t n() const { return n_; }
  /// Ambient variable count n+1.
  std::size_t nvars() const { return n_ + 1; }
  const MultiPoly& G() const { return g_; }

  /// Canonical representative modulo (G): repeatedly rewrites
  /// x_{n+1}^2 -> 1 - x_1^2 - ... - x_n^2.
  SphereReduction reduce(const MultiPoly& f) const;
  MultiPoly remainder(const MultiPoly& f) const { return reduce(f).remainder; }
  bool is_reduced(const MultiPoly& f) const;
  /// f - g lies in the ideal (G).
  bool equivalent(const MultiPoly& f, const MultiPoly& g) const;

  /// Reduced monomials (degree <= 1 in the last variable) of total degree
  /// at most max_degree.
  std::vector<Monomial> reduced_monomials(int max_degree) const;

 private:
  std::size_t n_;
  MultiPoly g_;
};

}  // namespace dkit

#pragma once

#include <optional>

#include "dkit/field.hpp"
#include "dkit/gaussian.hpp"

namespace dkit {

/// Closed-form counts for a field of degree vector m on R^n / S^n.
/// Every entry reads the sorted degrees m_1 >= m_2 >= ...
struct BoundsReport {
  /// Darboux first integral threshold p+q in R^n, and its rational variant.
  Integer thm1b;
  Integer thm1d;
  /// Invariant hyperplanes in R^n, and those through a single point.
  Integer thm2_total;
  Integer thm2_point;
  /// Darboux first integral threshold p+q on S^n, and its rational variant.
  Integer thm3b;
  Integer thm3d;
  /// Invariant meridians on S^n.
  Integer thm4;
  /// Invariant parallels on S^n: m_{n+1}; absent when only n degrees are known.
  std::optional<Integer> thm5;
  /// Dimension of degree <= m_1 polynomials in n+1 variables modulo (G).
  Integer d_of_m;
};

/// C(top, k), zero when top < k or k < 0.
Integer binomial(long top, long k);

/// Requires n >= 1 and at least n degrees.
BoundsReport bounds(std::size_t n, const DegreeVector& m, int d = 2);

}  // namespace dkit

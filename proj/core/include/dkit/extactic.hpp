#pragma once

#include <vector>

#include "dkit/field.hpp"
#include "dkit/poly.hpp"

namespace dkit {

/// Basis v_1..v_l of a finite-dimensional subspace W of polynomials.
/// Construction rejects empty, mixed-ring, or linearly dependent families.
class BasisW {
 public:
  explicit BasisW(std::vector<MultiPoly> elements);

  std::size_t dimension() const { return elements_.size(); }
  std::size_t nvars() const { return elements_.front().nvars(); }
  const std::vector<MultiPoly>& elements() const { return elements_; }
  bool contains(const MultiPoly& f) const;

  /// {1, x_1, ..., x_N}
  static BasisW affine(std::size_t nvars);
  /// {x_first+1, ..., x_last}, zero-based half-open [first, last).
  static BasisW coordinates(std::size_t nvars, std::size_t first, std::size_t last);

 private:
  std::vector<MultiPoly> elements_;
};

struct ExtacticResult {
  MultiPoly polynomial;
  BasisW basis;
  /// The determinant vanished identically.
  bool degenerate = false;
};

/// det of the l x l matrix with rows X^j(v_1) .. X^j(v_l), j = 0..l-1.
ExtacticResult extactic(const PolyVectorField& X, const BasisW& W);

/// Fraction-free Bareiss determinant over the polynomial ring; each
/// elimination step divides exactly by the previous pivot.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

/// Largest k with f^k | E. Throws on a degenerate E or a constant f.
unsigned multiplicity(const ExtacticResult& E, const MultiPoly& f);
unsigned multiplicity(const MultiPoly& E, const MultiPoly& f);

}  // namespace dkit

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dkit/poly.hpp"
#include "dkit/sphere.hpp"

namespace dkit {

/// Component degrees kept both in declaration order (`raw`) and sorted
/// non-increasingly (`sorted`). Degree thresholds use sorted[0] = m_1;
/// formulas that name a specific component (the parallel bound uses the
/// last one) read the order they document.
struct DegreeVector {
  std::vector<int> raw;
  std::vector<int> sorted;

  DegreeVector() = default;
  explicit DegreeVector(std::vector<int> degrees);

  std::size_t size() const { return raw.size(); }
  /// m_1, the largest component degree.
  int max() const { return sorted.empty() ? 0 : sorted.front(); }
  /// Upper bound on the degree of any cofactor: m_1 - 1.
  int cofactor_degree() const { return max() - 1; }
};

/// X = sum_i P_i d/dx_i with polynomial components.
class PolyVectorField {
 public:
  PolyVectorField() = default;
  explicit PolyVectorField(std::vector<MultiPoly> components);

  std::size_t nvars() const { return nvars_; }
  const std::vector<MultiPoly>& components() const { return components_; }
  const MultiPoly& component(std::size_t i) const { return components_.at(i); }
  /// The zero polynomial counts as degree 0.
  DegreeVector degrees() const;
  bool is_real() const;

 private:
  std::size_t nvars_ = 0;
  std::vector<MultiPoly> components_;
};

/// X(f) = sum_i P_i * df/dx_i.
MultiPoly lie_derivative(const PolyVectorField& X, const MultiPoly& f);
/// X^times(f), with X^0(f) = f.
MultiPoly lie_derivative(const PolyVectorField& X, const MultiPoly& f, unsigned times);

/// Cofactor K with X(G) = K*G exactly.
struct TangencyCertificate {
  MultiPoly cofactor;
};

/// Exact tangency test for the unit sphere; nullopt when X(G) is not
/// divisible by G.
std::optional<TangencyCertificate> check_on_sphere(const PolyVectorField& X, const SphereContext& ctx);

/// Solution space of X(G) = K*G in the unknown coefficients of P_1..P_{n+1}
/// (deg P_i <= m_i, declaration order) and of K (deg K <= m_1 - 1).
class TangentFieldSpace {
 public:
  TangentFieldSpace(std::size_t n, const DegreeVector& m);

  std::size_t n() const { return n_; }
  const DegreeVector& degrees() const { return degrees_; }
  /// Number of unknowns: all field coefficients followed by all cofactor coefficients.
  std::size_t unknowns() const { return unknowns_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<std::vector<Rational>>& basis() const { return basis_; }
  /// Rows are monomials of X(G) - K*G, columns the unknowns.
  const std::vector<std::vector<Rational>>& constraints() const { return constraints_; }

  const std::vector<Monomial>& component_monomials(std::size_t i) const { return component_monomials_.at(i); }
  const std::vector<Monomial>& cofactor_monomials() const { return cofactor_monomials_; }
  /// Column of the coefficient of monomial m in P_i (nullopt when out of range).
  std::optional<std::size_t> component_index(std::size_t i, const Monomial& m) const;

  PolyVectorField field_from(const std::vector<Rational>& coeffs) const;
  MultiPoly cofactor_from(const std::vector<Rational>& coeffs) const;
  /// Coordinates of the field part; the cofactor part is implied.
  std::vector<Rational> combine(const std::vector<Rational>& weights) const;
  /// True when the given field (in the same degree bounds) lies in the span.
  bool contains(const PolyVectorField& X) const;

  /// Random integer combination of basis vectors. Each weight is zero with
  /// probability `sparsity`, otherwise uniform in [-range, range].
  PolyVectorField sample(std::uint64_t seed, double sparsity = 0.5, int range = 3) const;

 private:
  std::size_t n_;
  DegreeVector degrees_;
  std::vector<std::vector<Monomial>> component_monomials_;
  std::vector<Monomial> cofactor_monomials_;
  std::vector<std::size_t> offsets_;
  std::size_t unknowns_ = 0;
  std::vector<std::vector<Rational>> constraints_;
  std::vector<std::vector<Rational>> basis_;
};

TangentFieldSpace tangent_field_space(std::size_t n, const DegreeVector& m);

/// Fresh random tangent field; throws std::domain_error when the space is trivial.
PolyVectorField sample_on_sphere_field(std::size_t n, const DegreeVector& m, std::uint64_t seed);

}  // namespace dkit

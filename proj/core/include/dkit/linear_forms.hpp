#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dkit/poly.hpp"
#include "dkit/univariate.hpp"

namespace dkit {

/// Coefficients (a_1, ..., a_N, a_0) of an affine-linear polynomial
/// a_1 x_1 + ... + a_N x_N + a_0; nullopt when deg f > 1.
std::optional<std::vector<GaussianRational>> linear_coefficients(const MultiPoly& f);
MultiPoly linear_from_coefficients(std::span<const GaussianRational> coeffs);

/// Rescales a nonzero affine-linear f to coprime Gaussian-integer
/// coefficients whose first nonzero entry (order x_1..x_N, then the
/// constant) has positive real part and non-negative imaginary part.
MultiPoly linear_normal_form(const MultiPoly& f);

/// Linear forms v - t*u and u dividing P, with u, v two of P's variables
/// and all other variables treated as parameters. Complete over Q(i).
struct PencilFactors {
  /// gcd over t of the coefficients of P(u, t*u, ...); its roots t0 are
  /// exactly the slopes with (v - t0*u) | P, multiplicities included.
  UniPoly slope_gcd;
  RootSplit slopes;
  /// Largest k with u^k | P.
  unsigned u_multiplicity = 0;
};
PencilFactors pencil_factors(const MultiPoly& P, std::size_t u, std::size_t v);

}  // namespace dkit

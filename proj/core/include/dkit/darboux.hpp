#pragma once

#include <optional>
#include <vector>

#include "dkit/field.hpp"
#include "dkit/sphere.hpp"
#include "dkit/surfaces.hpp"

namespace dkit {

/// Cofactors of p invariant surfaces and q exponential factors. With a
/// sphere context every cofactor is compared modulo G.
struct CofactorSystem {
  std::vector<MultiPoly> surface_cofactors;
  std::vector<MultiPoly> exponential_cofactors;
  const SphereContext* sphere = nullptr;

  std::size_t size() const { return surface_cofactors.size() + exponential_cofactors.size(); }
  static CofactorSystem from(const std::vector<InvariantSurface>& surfaces,
                             const std::vector<ExponentialFactor>& factors, const SphereContext* sphere);
};

/// f_1^l_1 ... f_p^l_p exp(g_1/h_1)^u_1 ... exp(g_q/h_q)^u_q, times e^{sigma t}
/// for a time-dependent invariant.
struct DarbouxFunction {
  std::vector<GaussianRational> lambdas;
  std::vector<GaussianRational> mus;
  Rational sigma = 0;

  bool is_trivial() const;
};

/// Basis of {(l, u) : sum l_i K_i + sum u_j L_j = 0}; empty when trivial.
std::vector<DarbouxFunction> find_first_integral(const CofactorSystem& cs);

/// A solution of sum l_i K_i + sum u_j L_j = -sigma with sigma != 0,
/// scaled so the first nonzero exponent is 1 when that keeps sigma real.
std::optional<DarbouxFunction> find_time_invariant(const CofactorSystem& cs);

struct DarbouxCheck {
  bool pass = false;
  /// sum l_i K_i + sum u_j L_j + sigma, reduced on the sphere.
  MultiPoly residual;
  /// For integer exponents without exponential factors and sigma = 0:
  /// D X(N) - N X(D) for H = N/D, reduced on the sphere.
  std::optional<MultiPoly> quotient_residual;
};

/// Re-derives every cofactor identity, then checks the linear relation and,
/// when applicable, X(H) = 0 for the expanded rational H.
/// Throws std::invalid_argument on size mismatch, an all-zero function, or
/// a surface whose stated cofactor is wrong.
DarbouxCheck verify_darboux(const PolyVectorField& X, const DarbouxFunction& D,
                            const std::vector<InvariantSurface>& surfaces,
                            const std::vector<ExponentialFactor>& factors, const SphereContext* ctx = nullptr);

/// Real factor of a Darboux function:
/// [(Re f)^2 + (Im f)^2]^power * exp(angle_coeff * angle(Re f, Im f)).
/// A real single factor f^l has im_f = 0; its base is f^2 and power l/2.
struct RealSurfaceTerm {
  MultiPoly re_f;
  MultiPoly im_f;
  Rational power;
  Rational angle_coeff;
};

/// exp(scale * Re(mu g / h)) with scale 2 for a merged conjugate pair.
struct RealExponentialTerm {
  MultiPoly g;
  MultiPoly h;
  GaussianRational mu;
  Rational scale;
};

struct RealForm {
  std::vector<RealSurfaceTerm> surfaces;
  std::vector<RealExponentialTerm> exponentials;
  Rational sigma = 0;
};

/// Merges conjugate pairs into real factors. Throws std::invalid_argument
/// when the function is not real.
RealForm real_form(const DarbouxFunction& D, const std::vector<MultiPoly>& surfaces,
                   const std::vector<ExponentialFactor>& factors);

}  // namespace dkit

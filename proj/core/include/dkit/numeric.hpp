#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "dkit/darboux.hpp"
#include "dkit/field.hpp"
#include "dkit/sphere.hpp"
#include "dkit/surfaces.hpp"

namespace dkit {

using Point = std::vector<std::complex<double>>;

/// Polynomial compiled for fast floating-point evaluation.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const MultiPoly& p);
  std::complex<double> operator()(const Point& x) const;
  std::size_t nvars() const { return nvars_; }

 private:
  std::size_t nvars_ = 0;
  std::vector<std::complex<double>> coeffs_;
  std::vector<std::vector<std::uint32_t>> exps_;
};

/// Fixed-step trajectory. Points are complex so fields with Gaussian
/// coefficients integrate too; real fields from real starts stay real.
struct Orbit {
  std::vector<double> times;
  std::vector<Point> points;
  double stepsize = 0;
  /// max |G| over the raw RK4 states before renormalization (sphere mode).
  double drift = 0;
  /// A non-finite state was produced; the orbit stops there.
  bool diverged = false;
};

/// Classical RK4. On the sphere each step is followed by radial
/// renormalization. Throws std::invalid_argument for a non-positive step or,
/// on the sphere, a start with |G(x0)| > 1e-12.
Orbit integrate(const PolyVectorField& X, const Point& x0, double stepsize, std::size_t steps,
                const SphereContext* ctx = nullptr);

struct NumericOptions {
  unsigned trials = 10;
  double tol = 1e-6;
  double stepsize = 1e-3;
  double horizon = 10.0;
  std::uint64_t seed = 1;
};

enum class NumericStatus { pass, fail, skipped };
std::string to_string(NumericStatus s);

struct SurfaceNumericReport {
  NumericStatus status = NumericStatus::skipped;
  double max_residual = 0;
  unsigned trials = 0;
  unsigned diverged = 0;
  std::string note;
};

/// Samples real starting points on {f = 0} (on the sphere when ctx is set),
/// integrates and records max |f| along the orbits. Surfaces with complex
/// coefficients or without real points are skipped.
SurfaceNumericReport check_surface_numeric(const PolyVectorField& X, const MultiPoly& f,
                                           const NumericOptions& opts = {}, const SphereContext* ctx = nullptr);

struct IntegralNumericReport {
  NumericStatus status = NumericStatus::skipped;
  /// max over used orbits of |H(t) e^{sigma t} / H(0) - 1|.
  double max_variation = 0;
  unsigned orbits_used = 0;
  /// Orbits that came within the guard band of a factor's zero set.
  unsigned orbits_excluded = 0;
};

/// Evaluates the real form of a Darboux function along each orbit, with the
/// angle terms followed continuously, and checks H e^{sigma t} is constant.
IntegralNumericReport check_first_integral_numeric(const RealForm& H, const std::vector<Orbit>& orbits,
                                                   double tol = 1e-6, double guard = 1e-9);

/// Random real points: on the sphere, or in the cube [-1, 1]^N otherwise.
std::vector<Point> random_starts(std::size_t nvars, unsigned count, std::uint64_t seed,
                                 const SphereContext* ctx = nullptr);

}  // namespace dkit

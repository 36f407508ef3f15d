#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dkit/extactic.hpp"
#include "dkit/field.hpp"
#include "dkit/sphere.hpp"
#include "dkit/univariate.hpp"

namespace dkit {

enum class SurfaceKind { parallel, meridian, hyperplane, general };
std::string to_string(SurfaceKind kind);

/// f = 0 with X(f) = K f exactly, or X(f) - K f = h G when only
/// invariant on the sphere (then sphere_multiplier holds h).
struct InvariantSurface {
  MultiPoly f;
  MultiPoly cofactor;
  SurfaceKind kind = SurfaceKind::general;
  unsigned multiplicity = 1;
  std::optional<MultiPoly> sphere_multiplier;
};

/// Kind of a polynomial by shape: linear x_{n+1} - k is a parallel,
/// linear without x_{n+1} and without constant a meridian (sphere mode),
/// other linear polynomials hyperplanes.
SurfaceKind classify(const MultiPoly& f, const SphereContext* ctx);

/// For linear f, whether {f = 0} meets the sphere transversally
/// everywhere (over C). nullopt for nonlinear f.
std::optional<bool> transversal_to_sphere(const MultiPoly& f, const SphereContext& ctx);

enum class CofactorStatus { invariant, not_invariant, non_transversal };

struct CofactorOutcome {
  CofactorStatus status = CofactorStatus::not_invariant;
  /// Present for invariant and non_transversal outcomes.
  std::optional<InvariantSurface> surface;
};

/// Solves X(f) = K f (ambient, ctx == nullptr) or X(f) = K f + h G with
/// deg K <= m_1 - 1. On the sphere an exact ambient cofactor is preferred;
/// otherwise K is the canonical reduced representative.
CofactorOutcome cofactor_solve(const PolyVectorField& X, const MultiPoly& f, const SphereContext* ctx = nullptr);

struct ParallelReport {
  struct Exact {
    GaussianRational k;
    InvariantSurface surface;
    /// k real with |k| < 1, so the parallel has real points.
    bool real_visible = false;
  };
  std::vector<Exact> exact;
  /// Factors of the candidate gcd without roots in Q(i).
  std::vector<RootSplit::Residual> nonexact;
  /// P_{n+1} vanishes identically: every x_{n+1} = k is invariant.
  bool degenerate = false;
  MultiPoly extactic;
  UniPoly candidate_gcd;
  /// Parallels over C counted with multiplicity (= deg candidate_gcd).
  unsigned count_with_multiplicity = 0;
  /// Parallels with real k in (-1, 1), irrational ones included.
  unsigned real_visible_count = 0;
  /// m_{n+1} from the sorted degree vector.
  unsigned bound = 0;
  /// deg P_{n+1}, the degree the elimination argument actually uses.
  unsigned proof_bound = 0;
};

/// Requires X tangent to the sphere.
ParallelReport find_parallels(const PolyVectorField& X, const SphereContext& ctx);

struct MeridianOptions {
  /// Extra meridian candidates to verify exactly.
  std::vector<MultiPoly> candidates;
  std::uint64_t seed = 1;
  /// Random plane batches for n >= 3.
  unsigned rounds = 3;
};

struct MeridianReport {
  std::vector<InvariantSurface> meridians;
  bool degenerate = false;
  MultiPoly extactic;
  /// Meridians over C with multiplicity, irrational ones included when complete.
  unsigned complex_count = 0;
  /// Distinct real meridians, irrational ones included when complete.
  unsigned real_count = 0;
  /// Slope factors without Q(i) roots (n = 2 only).
  std::vector<RootSplit::Residual> residual;
  /// The search provably found every meridian (n = 2).
  bool complete = false;
  unsigned bound = 0;
};

/// Requires X tangent to the sphere.
MeridianReport find_meridians(const PolyVectorField& X, const SphereContext& ctx, const MeridianOptions& opts = {});

struct HyperplaneOptions {
  std::vector<MultiPoly> candidates;
  std::uint64_t seed = 1;
  unsigned rounds = 3;
};

struct HyperplaneReport {
  std::vector<InvariantSurface> hyperplanes;
  bool degenerate = false;
  MultiPoly extactic;
  /// Factor families whose parameters have no Q(i) roots (N = 2 only).
  std::vector<RootSplit::Residual> residual;
  unsigned count_with_multiplicity = 0;
  bool complete = false;
  unsigned bound = 0;
};

/// Invariant affine hyperplanes of X in C^N.
HyperplaneReport find_hyperplanes(const PolyVectorField& X, const HyperplaneOptions& opts = {});

/// exp(g/h) with X(exp(g/h)) = L exp(g/h).
struct ExponentialFactor {
  MultiPoly g;
  MultiPoly h;
  MultiPoly cofactor;
  std::optional<MultiPoly> sphere_multiplier;
};

/// Solves h X(g) - g X(h) = L h^2 (+ multiplier G on the sphere) with
/// deg L <= m_1 - 1. Throws std::invalid_argument when h = 0.
std::optional<ExponentialFactor> verify_exponential_factor(const PolyVectorField& X, const MultiPoly& g,
                                                           const MultiPoly& h, const SphereContext* ctx = nullptr);

/// Linear forms sum_i a_i x_{vars[i]} dividing P found by restricting P to
/// random planes in the span of `vars`; every result divides P exactly and
/// is in normal form. Needs at least three variables.
std::vector<MultiPoly> random_plane_linear_factors(const MultiPoly& P, const std::vector<std::size_t>& vars,
                                                   std::uint64_t seed, unsigned rounds);

}  // namespace dkit

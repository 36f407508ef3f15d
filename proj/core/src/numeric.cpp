#include "dkit/numeric.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dkit/linear_forms.hpp"

namespace dkit {

namespace {

using cd = std::complex<double>;

bool finite(const Point& x) {
  for (const auto& v : x) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

cd bilinear_square(const Point& x) {
  cd s = 0;
  for (const auto& v : x) s += v * v;
  return s;
}

struct CompiledField {
  std::vector<CompiledPoly> comps;
  explicit CompiledField(const PolyVectorField& X) {
    for (const auto& p : X.components()) comps.emplace_back(p);
  }
  Point operator()(const Point& x) const {
    Point out(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) out[i] = comps[i](x);
    return out;
  }
};

Point axpy(const Point& x, double h, const Point& k) {
  Point out(x);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += h * k[i];
  return out;
}

std::vector<double> real_vector(const Point& x) {
  std::vector<double> v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i].real();
  return v;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Newton-type projection of a real point onto {f = 0} (and the sphere).
bool project(const MultiPoly& f, std::vector<double>& x, const SphereContext* ctx) {
  const CompiledPoly cf(f);
  std::vector<CompiledPoly> grad;
  for (std::size_t i = 0; i < f.nvars(); ++i) grad.emplace_back(f.derivative(i));
  const auto to_point = [](const std::vector<double>& v) {
    Point p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i];
    return p;
  };
  for (int it = 0; it < 200; ++it) {
    Point p = to_point(x);
    const double fv = cf(p).real();
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = grad[i](p).real();
    const double gg = dot(g, g);
    if (gg < 1e-24) return false;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= fv * g[i] / gg;
    if (ctx) {
      const double r = std::sqrt(dot(x, x));
      if (r < 1e-12) return false;
      for (auto& v : x) v /= r;
    }
    if (std::abs(cf(to_point(x)).real()) < 1e-14) return true;
  }
  return false;
}

// Branch-continuous complex logarithm along a sequence of evaluations.
class TrackedLog {
 public:
  cd operator()(cd w) {
    cd l = std::log(w);
    if (started_) {
      const double k = std::round((prev_ - l.imag()) / (2 * std::numbers::pi));
      l += cd(0, 2 * std::numbers::pi * k);
    }
    prev_ = l.imag();
    started_ = true;
    return l;
  }

 private:
  bool started_ = false;
  double prev_ = 0;
};

}  // namespace

CompiledPoly::CompiledPoly(const MultiPoly& p) : nvars_(p.nvars()) {
  for (const auto& [m, c] : p.terms()) {
    coeffs_.push_back(c.to_complex());
    exps_.push_back(m.exponents());
  }
}

std::complex<double> CompiledPoly::operator()(const Point& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("evaluation point has the wrong dimension");
  cd sum = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    cd term = coeffs_[t];
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t e = 0; e < exps_[t][i]; ++e) term *= x[i];
    }
    sum += term;
  }
  return sum;
}

Orbit integrate(const PolyVectorField& X, const Point& x0, double stepsize, std::size_t steps,
                const SphereContext* ctx) {
  if (!(stepsize > 0)) throw std::invalid_argument("stepsize must be positive");
  if (x0.size() != X.nvars()) throw std::invalid_argument("initial point has the wrong dimension");
  if (ctx && std::abs(bilinear_square(x0) - 1.0) > 1e-12) {
    throw std::invalid_argument("initial point is not on the sphere");
  }
  const CompiledField F(X);
  Orbit o;
  o.stepsize = stepsize;
  o.times.reserve(steps + 1);
  o.points.reserve(steps + 1);
  o.times.push_back(0);
  o.points.push_back(x0);
  Point x = x0;
  for (std::size_t s = 1; s <= steps; ++s) {
    const Point k1 = F(x);
    const Point k2 = F(axpy(x, stepsize / 2, k1));
    const Point k3 = F(axpy(x, stepsize / 2, k2));
    const Point k4 = F(axpy(x, stepsize, k3));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += stepsize / 6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (!finite(x)) {
      o.diverged = true;
      break;
    }
    if (ctx) {
      const cd sq = bilinear_square(x);
      o.drift = std::max(o.drift, std::abs(sq - 1.0));
      const cd r = std::sqrt(sq);
      for (auto& v : x) v /= r;
    }
    o.times.push_back(static_cast<double>(s) * stepsize);
    o.points.push_back(x);
  }
  return o;
}

std::string to_string(NumericStatus s) {
  switch (s) {
    case NumericStatus::pass: return "pass";
    case NumericStatus::fail: return "fail";
    case NumericStatus::skipped: return "skipped";
  }
  return "skipped";
}

std::vector<Point> random_starts(std::size_t nvars, unsigned count, std::uint64_t seed, const SphereContext* ctx) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Point> out;
  for (unsigned c = 0; c < count; ++c) {
    std::vector<double> v(nvars);
    if (ctx) {
      double r = 0;
      while (r < 1e-3) {
        for (auto& x : v) x = normal(rng);
        r = std::sqrt(dot(v, v));
      }
      for (auto& x : v) x /= r;
    } else {
      for (auto& x : v) x = unit(rng);
    }
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

SurfaceNumericReport check_surface_numeric(const PolyVectorField& X, const MultiPoly& f, const NumericOptions& opts,
                                           const SphereContext* ctx) {
  SurfaceNumericReport rep;
  if (f.nvars() != X.nvars()) throw std::invalid_argument("surface and field dimensions differ");
  if (!f.is_real()) {
    rep.note = "complex coefficients: no real trace sampled";
    return rep;
  }
  const std::size_t nv = X.nvars();
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> normal;
  const auto lin = linear_coefficients(f);
  std::vector<Point> starts;

  if (lin) {
    std::vector<double> a(nv);
    for (std::size_t i = 0; i < nv; ++i) a[i] = (*lin)[i].re().get_d();
    const double a0 = (*lin)[nv].re().get_d();
    const double aa = dot(a, a);
    std::vector<double> p0(nv);
    for (std::size_t i = 0; i < nv; ++i) p0[i] = -a0 * a[i] / aa;
    const double p0sq = dot(p0, p0);
    if (ctx && p0sq >= 1.0 - 1e-12) {
      rep.note = "no real points on the sphere";
      return rep;
    }
    const double radius = ctx ? std::sqrt(1.0 - p0sq) : 1.0;
    for (unsigned t = 0; t < opts.trials; ++t) {
      std::vector<double> u(nv);
      double un = 0;
      while (un < 1e-6) {
        for (auto& v : u) v = normal(rng);
        const double c = dot(u, a) / aa;
        for (std::size_t i = 0; i < nv; ++i) u[i] -= c * a[i];
        un = std::sqrt(dot(u, u));
      }
      std::vector<double> x(nv);
      for (std::size_t i = 0; i < nv; ++i) x[i] = p0[i] + radius * u[i] / un;
      if (ctx) {
        const double r = std::sqrt(dot(x, x));
        for (auto& v : x) v /= r;
      }
      starts.emplace_back(x.begin(), x.end());
    }
  } else {
    unsigned attempts = 0;
    while (starts.size() < opts.trials && attempts < 50 * opts.trials) {
      ++attempts;
      Point p = random_starts(nv, 1, rng(), ctx).front();
      std::vector<double> x = real_vector(p);
      if (project(f, x, ctx)) starts.emplace_back(x.begin(), x.end());
    }
    if (starts.empty()) {
      rep.note = "no real points found";
      return rep;
    }
  }

  const CompiledPoly cf(f);
  const auto steps = static_cast<std::size_t>(std::llround(opts.horizon / opts.stepsize));
  for (const auto& x0 : starts) {
    const Orbit o = integrate(X, x0, opts.stepsize, steps, ctx);
    ++rep.trials;
    if (o.diverged) ++rep.diverged;
    for (const auto& p : o.points) rep.max_residual = std::max(rep.max_residual, std::abs(cf(p)));
  }
  rep.status = rep.max_residual <= opts.tol ? NumericStatus::pass : NumericStatus::fail;
  return rep;
}

IntegralNumericReport check_first_integral_numeric(const RealForm& H, const std::vector<Orbit>& orbits, double tol,
                                                   double guard) {
  IntegralNumericReport rep;
  struct SurfaceEval {
    CompiledPoly plus, minus;
    double power, angle;
  };
  struct ExpEval {
    CompiledPoly g, h, gc, hc;
    cd mu;
    double scale;
  };
  std::vector<SurfaceEval> se;
  for (const auto& t : H.surfaces) {
    const GaussianRational i = GaussianRational::i();
    // re + i*im and re - i*im; on real points these are f and conj f.
    se.push_back({CompiledPoly(t.re_f + t.im_f * i), CompiledPoly(t.re_f - t.im_f * i), t.power.get_d(),
                  t.angle_coeff.get_d()});
  }
  std::vector<ExpEval> ee;
  for (const auto& t : H.exponentials) {
    ee.push_back({CompiledPoly(t.g), CompiledPoly(t.h), CompiledPoly(t.g.conj()), CompiledPoly(t.h.conj()),
                  t.mu.to_complex(), t.scale.get_d()});
  }
  const double sigma = H.sigma.get_d();

  for (const auto& o : orbits) {
    std::vector<TrackedLog> logs_plus(se.size()), logs_minus(se.size());
    bool excluded = false;
    cd log0 = 0;
    double worst = 0;
    for (std::size_t s = 0; s < o.points.size() && !excluded; ++s) {
      const Point& x = o.points[s];
      // log H = sum power*log(f fbar) + angle*arg f + exponential terms.
      cd logh = sigma * o.times[s];
      for (std::size_t k = 0; k < se.size(); ++k) {
        const cd fp = se[k].plus(x);
        const cd fm = se[k].minus(x);
        if (std::abs(fp) < guard || std::abs(fm) < guard) {
          excluded = true;
          break;
        }
        const cd lp = logs_plus[k](fp);
        const cd lm = logs_minus[k](fm);
        logh += se[k].power * (lp + lm) + se[k].angle * (lp - lm) / cd(0, 2);
      }
      for (const auto& e : ee) {
        if (excluded) break;
        const cd hv = e.h(x);
        if (std::abs(hv) < guard) {
          excluded = true;
          break;
        }
        if (e.scale == 2) {
          logh += e.mu * e.g(x) / hv + std::conj(e.mu) * e.gc(x) / e.hc(x);
        } else {
          logh += e.scale * e.mu * e.g(x) / hv;
        }
      }
      if (excluded) break;
      if (s == 0) log0 = logh;
      worst = std::max(worst, std::abs(std::exp(logh - log0) - 1.0));
    }
    if (excluded) {
      ++rep.orbits_excluded;
      continue;
    }
    ++rep.orbits_used;
    rep.max_variation = std::max(rep.max_variation, worst);
  }
  if (rep.orbits_used == 0) return rep;
  rep.status = rep.max_variation <= tol ? NumericStatus::pass : NumericStatus::fail;
  return rep;
}

}  // namespace dkit

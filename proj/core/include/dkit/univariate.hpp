#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dkit/gaussian.hpp"

namespace dkit {

/// Dense univariate polynomial over the Gaussian rationals, coefficients
/// stored from the constant term upward with no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussianRational> coeffs);
  static UniPoly constant(const GaussianRational& c) { return UniPoly({c}); }
  /// s - root
  static UniPoly linear_root(const GaussianRational& root);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  GaussianRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : GaussianRational{}; }
  const GaussianRational& leading() const { return c_.back(); }
  bool is_real() const;

  UniPoly monic() const;
  UniPoly derivative() const;
  UniPoly conj() const;
  /// Polynomials with the real / imaginary parts of the coefficients.
  UniPoly real_part() const;
  UniPoly imag_part() const;
  GaussianRational evaluate(const GaussianRational& s) const;
  double evaluate_real(double s) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "s") const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

/// Quotient and remainder of Euclidean division. Throws on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Yun decomposition p = c * prod_k s_k^k with each s_k square-free and
/// pairwise coprime. Entry k-1 holds s_k (possibly constant 1).
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);
UniPoly squarefree_part(const UniPoly& p);

/// Multiplicity of `root` as a zero of p (p nonzero).
unsigned root_multiplicity(const UniPoly& p, const GaussianRational& root);

/// All distinct roots of p lying in Q(i). Candidates come from a
/// multiprecision simultaneous iteration on the square-free part and are
/// rounded using the fact that lead*root is a Gaussian integer when p has
/// Gaussian-integer coefficients; every returned root is verified exactly.
std::vector<GaussianRational> gaussian_rational_roots(const UniPoly& p);

/// Open-closed isolating interval (lo, hi] containing exactly one real root.
struct RootInterval {
  Rational lo;
  Rational hi;
  double approx() const { return (lo.get_d() + hi.get_d()) / 2.0; }
};

/// Isolates the distinct real roots of a polynomial with real (rational)
/// coefficients using Sturm sequences and bisection with exact rational
/// endpoints. Intervals are refined to width at most `width`.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Rational& width = Rational(1, 1024));

/// Number of distinct real roots of p (complex coefficients allowed: real
/// roots are the common real roots of the real and imaginary parts).
std::size_t count_real_roots(const UniPoly& p);
/// Real polynomial whose roots are exactly the real roots of p.
UniPoly real_root_carrier(const UniPoly& p);

/// Roots of p split into exact Q(i) roots (with multiplicity) and residual
/// factors without Q(i) roots, whose real roots are isolated.
struct RootSplit {
  struct Exact {
    GaussianRational root;
    unsigned multiplicity;
  };
  struct Residual {
    UniPoly factor;
    unsigned multiplicity;
    std::vector<RootInterval> real_roots;
  };
  std::vector<Exact> exact;
  std::vector<Residual> residual;
};
RootSplit split_roots(const UniPoly& p);

}  // namespace dkit

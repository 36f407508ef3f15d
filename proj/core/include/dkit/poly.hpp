#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dkit/gaussian.hpp"

namespace dkit {

/// Exponent vector of fixed length N (the number of ambient variables).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  void set(std::size_t i, std::uint32_t e);
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b to divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order with the last variable highest:
/// total degree first, ties broken by comparing exponents from x_N down to x_1.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials in `nvars` variables of total degree at most `max_degree`,
/// in increasing graded-lex order. Empty when max_degree < 0.
std::vector<Monomial> monomials_up_to(std::size_t nvars, int max_degree);

/// Exact sparse multivariate polynomial over the Gaussian rationals.
///
/// The term map never stores a zero coefficient and is ordered by GradedLex,
/// so two mathematically equal polynomials have identical representations.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, GaussianRational, GradedLex>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const GaussianRational& c);
  /// x_{index+1}; indices are zero-based.
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly term(const Monomial& m, const GaussianRational& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int degree() const;
  int degree_in(std::size_t var) const;
  GaussianRational coefficient(const Monomial& m) const;
  GaussianRational constant_term() const;
  /// Largest term under GradedLex. Requires a nonzero polynomial.
  const Terms::value_type& leading() const;

  /// Adds c*m into the polynomial, dropping the term if it cancels.
  void add_term(const Monomial& m, const GaussianRational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const GaussianRational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const GaussianRational& c) { return a *= c; }
  friend MultiPoly operator*(const GaussianRational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned k) const;
  /// Conjugates every coefficient.
  MultiPoly conj() const;
  bool is_real() const;
  /// (f + conj f)/2 and (f - conj f)/(2i): real-coefficient polynomials
  /// whose values at real points are the real and imaginary parts of f.
  MultiPoly real_part() const;
  MultiPoly imag_part() const;
  MultiPoly derivative(std::size_t var) const;
  /// Substitutes images[j] for x_{j+1}; the result lives in the images' ring.
  MultiPoly compose(std::span<const MultiPoly> images) const;
  /// Same polynomial viewed in a ring with more variables appended.
  MultiPoly extend(std::size_t nvars) const;

  GaussianRational evaluate(std::span<const GaussianRational> point) const;
  std::complex<double> evaluate(std::span<const double> point) const;

  /// Canonical rendering in the parser grammar, terms in decreasing order.
  /// Variable names default to x1..xN.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Returns q with f = q*g, or nullopt when g does not divide f.
/// Throws std::domain_error when g is the zero polynomial.
std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g);

/// Default variable names x1..xN.
std::vector<std::string> default_names(std::size_t nvars);

}  // namespace dkit

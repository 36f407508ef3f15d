#include "dkit/gaussian.hpp"

#include <ostream>
#include <stdexcept>

namespace dkit {

std::string to_string(const Rational& q) { return q.get_str(); }

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero Gaussian rational");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero Gaussian rational");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  Rational a = abs(im_);
  if (a == 1) {
    imag = "i";
  } else {
    imag = a.get_str() + "*i";
  }
  if (sgn(re_) == 0) return sgn(im_) < 0 ? "-" + imag : imag;
  return "(" + re_.get_str() + (sgn(im_) < 0 ? " - " : " + ") + imag + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

Integer denominator_lcm(const GaussianRational& z) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), z.re().get_den_mpz_t(), z.im().get_den_mpz_t());
  return l;
}

}  // namespace dkit

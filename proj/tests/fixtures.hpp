#pragma once

#include <string>
#include <vector>

#include "dkit/cli/parse.hpp"
#include "dkit/field.hpp"
#include "dkit/poly.hpp"
#include "dkit/sphere.hpp"

namespace fx {

inline const std::vector<std::string>& xyz() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}
inline const std::vector<std::string>& xy() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}

inline dkit::MultiPoly P(const std::string& s) { return dkit::cli::parse_poly(s, xyz()); }
inline dkit::MultiPoly P2(const std::string& s) { return dkit::cli::parse_poly(s, xy()); }

inline dkit::PolyVectorField field(const std::vector<std::string>& comps,
                                   const std::vector<std::string>& vars = xyz()) {
  std::vector<dkit::MultiPoly> c;
  for (const auto& s : comps) c.push_back(dkit::cli::parse_poly(s, vars));
  return dkit::PolyVectorField(std::move(c));
}

inline dkit::PolyVectorField complex_meridian_field() {
  return field({"i*y*(x+y) - 2*x*z", "-i*x*(x+y) - 2*y*z", "1 + x^2 + y^2 - z^2"});
}

inline dkit::PolyVectorField parallel_field() { return field({"y", "1 - x - x^2 - y^2 + z^2", "-2*y*z"}); }

inline dkit::PolyVectorField rotation() { return field({"-y", "x", "0"}); }

// Member of the quadratic family with two real meridians x = 0 and y = 0.
inline dkit::PolyVectorField two_real_meridians() {
  return field({"-3*x*z", "-4*y*z", "1 + 2*x^2 + 3*y^2 - z^2"});
}

inline const dkit::SphereContext& s2() {
  static const dkit::SphereContext ctx(2);
  return ctx;
}

}  // namespace fx

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dkit/field.hpp"
#include "dkit/sphere.hpp"

namespace dkit::cli {

struct ExpCandidate {
  std::string g;
  std::string h = "1";
};

struct SpecOptions {
  std::uint64_t seed = 1;
  double tol = 1e-6;
  double stepsize = 1e-3;
  std::size_t steps = 10000;
  unsigned trials = 10;
  unsigned count = 1;
  std::vector<int> degrees;
  std::vector<std::string> basis;
};

/// Input document for every command.
struct SystemSpec {
  std::vector<std::string> variables;
  std::vector<std::string> components;
  bool sphere = false;
  std::vector<std::string> surfaces;
  std::vector<ExpCandidate> exponential_factors;
  SpecOptions options;
  nlohmann::json raw;

  static SystemSpec from_json(const nlohmann::json& j);

  MultiPoly poly(const std::string& src) const;
  /// Throws std::invalid_argument when there are no components.
  PolyVectorField field() const;
  std::optional<SphereContext> sphere_context() const;
};

}  // namespace dkit::cli

#include "dkit/cli/spec.hpp"

#include <stdexcept>

#include "dkit/cli/parse.hpp"

namespace dkit::cli {

namespace {

template <class T>
void read(const nlohmann::json& obj, const char* key, T& out) {
  if (obj.contains(key)) out = obj.at(key).get<T>();
}

}  // namespace

SystemSpec SystemSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("spec must be a JSON object");
  SystemSpec s;
  s.raw = j;
  if (!j.contains("variables")) throw std::invalid_argument("spec needs \"variables\"");
  s.variables = j.at("variables").get<std::vector<std::string>>();
  if (s.variables.empty()) throw std::invalid_argument("spec needs at least one variable");
  read(j, "components", s.components);
  if (!s.components.empty() && s.components.size() != s.variables.size()) {
    throw std::invalid_argument("component count must equal variable count");
  }
  const std::string mode = j.value("mode", std::string("ambient"));
  if (mode != "ambient" && mode != "sphere") throw std::invalid_argument("mode must be \"ambient\" or \"sphere\"");
  s.sphere = mode == "sphere";
  if (s.sphere && s.variables.size() < 2) throw std::invalid_argument("sphere mode needs at least two variables");

  if (j.contains("candidates")) {
    const auto& c = j.at("candidates");
    read(c, "surfaces", s.surfaces);
    if (c.contains("exponential_factors")) {
      for (const auto& e : c.at("exponential_factors")) {
        ExpCandidate ec;
        ec.g = e.at("g").get<std::string>();
        read(e, "h", ec.h);
        s.exponential_factors.push_back(ec);
      }
    }
  }
  if (j.contains("options")) {
    const auto& o = j.at("options");
    read(o, "seed", s.options.seed);
    read(o, "tol", s.options.tol);
    read(o, "stepsize", s.options.stepsize);
    read(o, "steps", s.options.steps);
    read(o, "trials", s.options.trials);
    read(o, "count", s.options.count);
    read(o, "degrees", s.options.degrees);
    read(o, "basis", s.options.basis);
  }
  if (!(s.options.stepsize > 0)) throw std::invalid_argument("options.stepsize must be positive");
  return s;
}

MultiPoly SystemSpec::poly(const std::string& src) const { return parse_poly(src, variables); }

PolyVectorField SystemSpec::field() const {
  if (components.empty()) throw std::invalid_argument("this command needs \"components\"");
  std::vector<MultiPoly> c;
  for (const auto& src : components) c.push_back(poly(src));
  return PolyVectorField(std::move(c));
}

std::optional<SphereContext> SystemSpec::sphere_context() const {
  if (!sphere) return std::nullopt;
  return SphereContext(variables.size() - 1);
}

}  // namespace dkit::cli

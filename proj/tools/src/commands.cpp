#include "dkit/cli/commands.hpp"

#include <chrono>
#include <stdexcept>

#include "dkit/bounds.hpp"
#include "dkit/cli/parse.hpp"
#include "dkit/darboux.hpp"
#include "dkit/extactic.hpp"
#include "dkit/numeric.hpp"
#include "dkit/surfaces.hpp"

namespace dkit::cli {

using nlohmann::json;

namespace {

json jrational(const Rational& q) { return q.get_str(); }

json jcomplex(const GaussianRational& z) { return {{"re", z.re().get_str()}, {"im", z.im().get_str()}}; }

json jinteger(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

struct Ctx {
  const SystemSpec& spec;
  const CommandArgs& args;
  std::string str(const MultiPoly& p) const { return p.to_string(spec.variables); }
  std::uint64_t seed() const { return args.seed.value_or(spec.options.seed); }
  double tol() const { return args.tol.value_or(spec.options.tol); }
};

json jsurface(const Ctx& c, const InvariantSurface& s) {
  json j = {{"f", c.str(s.f)},
            {"cofactor", c.str(s.cofactor)},
            {"kind", to_string(s.kind)},
            {"multiplicity", s.multiplicity},
            {"sphere_multiplier", nullptr}};
  if (s.sphere_multiplier) j["sphere_multiplier"] = c.str(*s.sphere_multiplier);
  return j;
}

json jresidual(const RootSplit::Residual& r) {
  json roots = json::array();
  for (const auto& iv : r.real_roots) {
    roots.push_back({{"lo", jrational(iv.lo)}, {"hi", jrational(iv.hi)}, {"approx", iv.approx()}});
  }
  return {{"factor", r.factor.to_string("t")}, {"multiplicity", r.multiplicity}, {"real_roots", roots}};
}

json jbounds(const BoundsReport& b) {
  return {{"thm1b", jinteger(b.thm1b)},
          {"thm1d", jinteger(b.thm1d)},
          {"thm2_total", jinteger(b.thm2_total)},
          {"thm2_point", jinteger(b.thm2_point)},
          {"thm3b", jinteger(b.thm3b)},
          {"thm3d", jinteger(b.thm3d)},
          {"thm4", jinteger(b.thm4)},
          {"thm5", b.thm5 ? jinteger(*b.thm5) : json(nullptr)},
          {"d_of_m", jinteger(b.d_of_m)}};
}

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const std::size_t comma = item.find(',', start);
      const std::string part = item.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(part);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

std::size_t sphere_dimension(const SystemSpec& spec) {
  if (spec.variables.size() < 2) throw std::invalid_argument("sphere commands need at least two variables");
  return spec.variables.size() - 1;
}

struct Collected {
  std::vector<InvariantSurface> surfaces;
  std::vector<ExponentialFactor> factors;
  json rejected = json::array();
};

// Candidate surfaces verified exactly, plus those found by the detectors.
Collected collect(const Ctx& c, const PolyVectorField& X, const SphereContext* ctx, json& degenerate) {
  Collected out;
  const auto push = [&](InvariantSurface s) {
    for (const auto& t : out.surfaces) {
      if (t.f == s.f) return;
    }
    out.surfaces.push_back(std::move(s));
  };
  std::vector<MultiPoly> candidates;
  for (const auto& src : c.spec.surfaces) candidates.push_back(c.spec.poly(src));
  for (const auto& f : candidates) {
    if (f.is_constant()) throw std::invalid_argument("candidate surface must be nonconstant");
    auto outcome = cofactor_solve(X, f, ctx);
    if (outcome.surface && outcome.status == CofactorStatus::invariant) {
      push(std::move(*outcome.surface));
    } else {
      out.rejected.push_back({{"f", c.str(f)},
                              {"status", outcome.status == CofactorStatus::non_transversal ? "non_transversal"
                                                                                           : "not_invariant"}});
    }
  }
  if (ctx) {
    if (check_on_sphere(X, *ctx)) {
      MeridianOptions mo;
      mo.seed = c.seed();
      const MeridianReport mr = find_meridians(X, *ctx, mo);
      degenerate["meridians"] = mr.degenerate;
      for (const auto& s : mr.meridians) push(s);
      const ParallelReport pr = find_parallels(X, *ctx);
      degenerate["parallels"] = pr.degenerate;
      for (const auto& e : pr.exact) push(e.surface);
    }
  } else {
    HyperplaneOptions ho;
    ho.seed = c.seed();
    const HyperplaneReport hr = find_hyperplanes(X, ho);
    degenerate["hyperplanes"] = hr.degenerate;
    for (const auto& s : hr.hyperplanes) push(s);
  }
  for (const auto& e : c.spec.exponential_factors) {
    const MultiPoly g = c.spec.poly(e.g);
    const MultiPoly h = c.spec.poly(e.h);
    auto ef = verify_exponential_factor(X, g, h, ctx);
    if (ef) {
      out.factors.push_back(std::move(*ef));
    } else {
      out.rejected.push_back({{"f", "exp((" + c.str(g) + ")/(" + c.str(h) + "))"}, {"status", "not_exponential_factor"}});
    }
  }
  return out;
}

json jreal_form(const Ctx& c, const RealForm& r) {
  json s = json::array();
  for (const auto& t : r.surfaces) {
    s.push_back({{"re_f", c.str(t.re_f)},
                 {"im_f", c.str(t.im_f)},
                 {"power", jrational(t.power)},
                 {"angle_coeff", jrational(t.angle_coeff)}});
  }
  json e = json::array();
  for (const auto& t : r.exponentials) {
    e.push_back({{"g", c.str(t.g)}, {"h", c.str(t.h)}, {"mu", jcomplex(t.mu)}, {"scale", jrational(t.scale)}});
  }
  return {{"surfaces", s}, {"exponentials", e}, {"sigma", jrational(r.sigma)}};
}

struct DarbouxFindings {
  std::vector<DarbouxFunction> integrals;
  std::optional<DarbouxFunction> time_invariant;
  json report;
};

DarbouxFindings analyse_darboux(const Ctx& c, const PolyVectorField& X, const SphereContext* ctx,
                                const Collected& col) {
  DarbouxFindings d;
  json surf = json::array();
  for (const auto& s : col.surfaces) surf.push_back(jsurface(c, s));
  json facs = json::array();
  for (const auto& e : col.factors) {
    facs.push_back({{"g", c.str(e.g)}, {"h", c.str(e.h)}, {"cofactor", c.str(e.cofactor)}});
  }
  d.report = {{"surfaces", surf},
              {"exponential_factors", facs},
              {"rejected", col.rejected},
              {"first_integrals", json::array()},
              {"time_invariant", nullptr}};
  if (col.surfaces.empty() && col.factors.empty()) return d;

  const CofactorSystem cs = CofactorSystem::from(col.surfaces, col.factors, ctx);
  std::vector<MultiPoly> fs;
  for (const auto& s : col.surfaces) fs.push_back(s.f);
  const auto describe = [&](const DarbouxFunction& D) {
    json lam = json::array();
    for (const auto& l : D.lambdas) lam.push_back(jcomplex(l));
    json mu = json::array();
    for (const auto& m : D.mus) mu.push_back(jcomplex(m));
    const DarbouxCheck chk = verify_darboux(X, D, col.surfaces, col.factors, ctx);
    json j = {{"lambdas", lam},
              {"mus", mu},
              {"sigma", jrational(D.sigma)},
              {"verified", chk.pass},
              {"residual", c.str(chk.residual)},
              {"quotient_residual", chk.quotient_residual ? json(c.str(*chk.quotient_residual)) : json(nullptr)},
              {"real_form", nullptr}};
    try {
      j["real_form"] = jreal_form(c, real_form(D, fs, col.factors));
    } catch (const std::invalid_argument&) {
      // complex first integral without a real counterpart
    }
    return j;
  };
  d.integrals = find_first_integral(cs);
  for (const auto& D : d.integrals) d.report["first_integrals"].push_back(describe(D));
  d.time_invariant = find_time_invariant(cs);
  if (d.time_invariant) d.report["time_invariant"] = describe(*d.time_invariant);
  return d;
}

CommandResult check_sphere(const Ctx& c) {
  const PolyVectorField X = c.spec.field();
  const SphereContext ctx(sphere_dimension(c.spec));
  const auto cert = check_on_sphere(X, ctx);
  CommandResult r;
  r.report["results"] = {{"tangent", cert.has_value()}, {"cofactor", cert ? json(c.str(cert->cofactor)) : json(nullptr)}};
  r.exit_code = cert ? kOk : kNegative;
  return r;
}

CommandResult extactic_cmd(const Ctx& c) {
  const PolyVectorField X = c.spec.field();
  std::vector<std::string> src = split_commas(c.args.basis.empty() ? c.spec.options.basis : c.args.basis);
  std::vector<MultiPoly> elems;
  for (const auto& s : src) elems.push_back(c.spec.poly(s));
  const std::size_t nv = X.nvars();
  BasisW W = elems.empty() ? (c.spec.sphere ? BasisW::coordinates(nv, 0, nv - 1) : BasisW::affine(nv))
                           : BasisW(std::move(elems));
  const ExtacticResult E = extactic(X, W);
  json basis = json::array();
  for (const auto& v : W.elements()) basis.push_back(c.str(v));
  CommandResult r;
  r.report["results"] = {{"basis", basis}, {"polynomial", c.str(E.polynomial)}, {"degenerate", E.degenerate}};
  r.report["degenerate_flags"] = {{"extactic", E.degenerate}};
  return r;
}

CommandResult parallels_cmd(const Ctx& c) {
  const PolyVectorField X = c.spec.field();
  const SphereContext ctx(sphere_dimension(c.spec));
  const ParallelReport p = find_parallels(X, ctx);
  json list = json::array();
  for (const auto& e : p.exact) {
    list.push_back({{"k", jcomplex(e.k)}, {"surface", jsurface(c, e.surface)}, {"real_visible", e.real_visible}});
  }
  json nonexact = json::array();
  for (const auto& res : p.nonexact) nonexact.push_back(jresidual(res));
  CommandResult r;
  r.report["results"] = {{"extactic", c.str(p.extactic)},
                         {"parallels", list},
                         {"nonexact", nonexact},
                         {"candidate_gcd", p.candidate_gcd.to_string(c.spec.variables.back())},
                         {"count_with_multiplicity", p.count_with_multiplicity},
                         {"real_visible_count", p.real_visible_count},
                         {"bound", p.bound},
                         {"proof_bound", p.proof_bound},
                         {"attained", !p.degenerate && p.count_with_multiplicity == p.bound}};
  r.report["degenerate_flags"] = {{"parallels", p.degenerate}};
  return r;
}

CommandResult meridians_cmd(const Ctx& c) {
  const PolyVectorField X = c.spec.field();
  const SphereContext ctx(sphere_dimension(c.spec));
  MeridianOptions mo;
  mo.seed = c.seed();
  for (const auto& s : c.spec.surfaces) mo.candidates.push_back(c.spec.poly(s));
  const MeridianReport m = find_meridians(X, ctx, mo);
  json list = json::array();
  for (const auto& s : m.meridians) list.push_back(jsurface(c, s));
  json residual = json::array();
  for (const auto& res : m.residual) residual.push_back(jresidual(res));
  CommandResult r;
  r.report["results"] = {{"extactic", c.str(m.extactic)},
                         {"meridians", list},
                         {"residual", residual},
                         {"complex_count", m.complex_count},
                         {"real_count", m.real_count},
                         {"complete", m.complete},
                         {"bound", m.bound},
                         {"attained", !m.degenerate && m.complex_count == m.bound}};
  r.report["degenerate_flags"] = {{"meridians", m.degenerate}};
  return r;
}

CommandResult hyperplanes_cmd(const Ctx& c) {
  const PolyVectorField X = c.spec.field();
  HyperplaneOptions ho;
  ho.seed = c.seed();
  for (const auto& s : c.spec.surfaces) ho.candidates.push_back(c.spec.poly(s));
  const HyperplaneReport h = find_hyperplanes(X, ho);
  json list = json::array();
  for (const auto& s : h.hyperplanes) list.push_back(jsurface(c, s));
  json residual = json::array();
  for (const auto& res : h.residual) residual.push_back(jresidual(res));
  CommandResult r;
  r.report["results"] = {{"extactic", c.str(h.extactic)},
                         {"hyperplanes", list},
                         {"residual", residual},
                         {"count_with_multiplicity", h.count_with_multiplicity},
                         {"complete", h.complete},
                         {"bound", h.bound}};
  r.report["degenerate_flags"] = {{"hyperplanes", h.degenerate}};
  return r;
}

CommandResult cofactor_cmd(const Ctx& c) {
  const PolyVectorField X = c.spec.field();
  const auto ctx = c.spec.sphere_context();
  const std::vector<std::string> src = c.args.surfaces.empty() ? c.spec.surfaces : c.args.surfaces;
  if (src.empty()) throw std::invalid_argument("cofactor needs --surface or candidates.surfaces");
  json list = json::array();
  bool all = true;
  for (const auto& s : src) {
    const MultiPoly f = c.spec.poly(s);
    const CofactorOutcome o = cofactor_solve(X, f, ctx ? &*ctx : nullptr);
    json j = {{"f", c.str(f)}};
    switch (o.status) {
      case CofactorStatus::invariant: j["status"] = "invariant"; break;
      case CofactorStatus::not_invariant: j["status"] = "not_invariant"; break;
      case CofactorStatus::non_transversal: j["status"] = "non_transversal"; break;
    }
    j["surface"] = o.surface ? jsurface(c, *o.surface) : json(nullptr);
    all = all && o.status == CofactorStatus::invariant;
    list.push_back(j);
  }
  CommandResult r;
  r.report["results"] = {{"surfaces", list}};
  r.exit_code = all ? kOk : kNegative;
  return r;
}

CommandResult expfactor_cmd(const Ctx& c) {
  const PolyVectorField X = c.spec.field();
  const auto ctx = c.spec.sphere_context();
  std::string gs, hs = "1";
  if (c.args.g) {
    gs = *c.args.g;
  } else if (!c.spec.exponential_factors.empty()) {
    gs = c.spec.exponential_factors.front().g;
    hs = c.spec.exponential_factors.front().h;
  } else {
    throw std::invalid_argument("expfactor needs --g or candidates.exponential_factors");
  }
  if (c.args.h) hs = *c.args.h;
  const MultiPoly g = c.spec.poly(gs);
  const MultiPoly h = c.spec.poly(hs);
  const auto ef = verify_exponential_factor(X, g, h, ctx ? &*ctx : nullptr);
  CommandResult r;
  r.report["results"] = {{"g", c.str(g)},
                         {"h", c.str(h)},
                         {"exponential_factor", ef.has_value()},
                         {"cofactor", ef ? json(c.str(ef->cofactor)) : json(nullptr)},
                         {"sphere_multiplier", ef && ef->sphere_multiplier ? json(c.str(*ef->sphere_multiplier))
                                                                           : json(nullptr)}};
  r.exit_code = ef ? kOk : kNegative;
  return r;
}

CommandResult darboux_cmd(const Ctx& c) {
  const PolyVectorField X = c.spec.field();
  const auto ctx = c.spec.sphere_context();
  CommandResult r;
  json degenerate = json::object();
  const Collected col = collect(c, X, ctx ? &*ctx : nullptr, degenerate);
  const DarbouxFindings d = analyse_darboux(c, X, ctx ? &*ctx : nullptr, col);
  r.report["results"] = d.report;
  r.report["degenerate_flags"] = degenerate;
  r.exit_code = d.integrals.empty() && !d.time_invariant ? kNegative : kOk;
  return r;
}

CommandResult bounds_cmd(const Ctx& c) {
  CommandResult r;
  const std::size_t n = c.spec.sphere ? c.spec.variables.size() - 1 : c.spec.variables.size();
  const DegreeVector m = c.spec.options.degrees.empty() ? c.spec.field().degrees() : DegreeVector(c.spec.options.degrees);
  r.report["results"] = {{"n", n}, {"degrees", m.sorted}};
  return r;
}

CommandResult sample_cmd(const Ctx& c) {
  const std::size_t n = sphere_dimension(c.spec);
  if (c.spec.options.degrees.size() != n + 1) {
    throw std::invalid_argument("sample needs options.degrees with one entry per variable");
  }
  const TangentFieldSpace space(n, DegreeVector(c.spec.options.degrees));
  if (space.dimension() == 0) throw std::invalid_argument("no tangent fields with these degrees");
  const SphereContext ctx(n);
  const unsigned count = c.args.count.value_or(c.spec.options.count);
  json fields = json::array();
  for (unsigned k = 0; k < count; ++k) {
    const std::uint64_t seed = c.seed() + k;
    const PolyVectorField X = space.sample(seed);
    json comps = json::array();
    for (const auto& p : X.components()) comps.push_back(c.str(p));
    const auto cert = check_on_sphere(X, ctx);
    fields.push_back({{"seed", seed}, {"components", comps}, {"cofactor", cert ? json(c.str(cert->cofactor)) : json(nullptr)}});
  }
  CommandResult r;
  r.report["results"] = {{"dimension", space.dimension()}, {"fields", fields}};
  return r;
}

CommandResult verify_numeric_cmd(const Ctx& c) {
  const PolyVectorField X = c.spec.field();
  const auto ctx = c.spec.sphere_context();
  const SphereContext* cp = ctx ? &*ctx : nullptr;
  json degenerate = json::object();
  const Collected col = collect(c, X, cp, degenerate);
  NumericOptions opts;
  opts.trials = c.spec.options.trials;
  opts.tol = c.tol();
  opts.stepsize = c.spec.options.stepsize;
  opts.horizon = c.spec.options.stepsize * static_cast<double>(c.spec.options.steps);
  opts.seed = c.seed();
  bool ok = true;
  json surfaces = json::array();
  for (const auto& s : col.surfaces) {
    const SurfaceNumericReport rep = check_surface_numeric(X, s.f, opts, cp);
    ok = ok && rep.status != NumericStatus::fail;
    surfaces.push_back({{"f", c.str(s.f)},
                        {"status", to_string(rep.status)},
                        {"max_residual", rep.max_residual},
                        {"trials", rep.trials},
                        {"note", rep.note}});
  }
  json integrals = json::array();
  const DarbouxFindings d = analyse_darboux(c, X, cp, col);
  std::vector<const DarbouxFunction*> funcs;
  for (const auto& D : d.integrals) funcs.push_back(&D);
  if (d.time_invariant) funcs.push_back(&*d.time_invariant);
  if (!funcs.empty()) {
    std::vector<Orbit> orbits;
    for (const auto& x0 : random_starts(X.nvars(), opts.trials, opts.seed, cp)) {
      orbits.push_back(integrate(X, x0, opts.stepsize, c.spec.options.steps, cp));
    }
    std::vector<MultiPoly> fs;
    for (const auto& s : col.surfaces) fs.push_back(s.f);
    for (const auto* D : funcs) {
      json j = {{"sigma", jrational(D->sigma)}};
      try {
        const IntegralNumericReport rep = check_first_integral_numeric(real_form(*D, fs, col.factors), orbits, opts.tol);
        ok = ok && rep.status != NumericStatus::fail;
        j["status"] = to_string(rep.status);
        j["max_variation"] = rep.max_variation;
        j["orbits_used"] = rep.orbits_used;
        j["orbits_excluded"] = rep.orbits_excluded;
      } catch (const std::invalid_argument&) {
        j["status"] = to_string(NumericStatus::skipped);
      }
      integrals.push_back(j);
    }
  }
  CommandResult r;
  r.report["results"] = {{"surfaces", surfaces}, {"integrals", integrals}, {"passed", ok}};
  r.report["degenerate_flags"] = degenerate;
  r.exit_code = ok ? kOk : kNegative;
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check-sphere", "extactic", "parallels", "meridians",
                                              "hyperplanes",  "cofactor", "expfactor", "darboux",
                                              "bounds",       "sample",   "verify-numeric"};
  return names;
}

CommandResult run(const std::string& command, const SystemSpec& spec, const CommandArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  const Ctx c{spec, args};
  CommandResult r;
  if (command == "check-sphere") r = check_sphere(c);
  else if (command == "extactic") r = extactic_cmd(c);
  else if (command == "parallels") r = parallels_cmd(c);
  else if (command == "meridians") r = meridians_cmd(c);
  else if (command == "hyperplanes") r = hyperplanes_cmd(c);
  else if (command == "cofactor") r = cofactor_cmd(c);
  else if (command == "expfactor") r = expfactor_cmd(c);
  else if (command == "darboux") r = darboux_cmd(c);
  else if (command == "bounds") r = bounds_cmd(c);
  else if (command == "sample") r = sample_cmd(c);
  else if (command == "verify-numeric") r = verify_numeric_cmd(c);
  else throw std::invalid_argument("unknown command '" + command + "'");

  r.report["command"] = command;
  r.report["input_echo"] = spec.raw;
  if (!r.report.contains("degenerate_flags")) r.report["degenerate_flags"] = json::object();
  r.report["bounds"] = nullptr;
  if (!spec.components.empty() || !spec.options.degrees.empty()) {
    const std::size_t n = spec.sphere ? spec.variables.size() - 1 : spec.variables.size();
    const DegreeVector m = spec.options.degrees.empty() ? spec.field().degrees() : DegreeVector(spec.options.degrees);
    if (m.size() >= n) r.report["bounds"] = jbounds(bounds(n, m));
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.report["timings"] = {{"total_ms", ms}};
  return r;
}

CommandResult run_safely(const std::string& command, const std::string& spec_text, const CommandArgs& args) {
  try {
    const SystemSpec spec = SystemSpec::from_json(json::parse(spec_text));
    return run(command, spec, args);
  } catch (const json::exception& e) {
    return {kInputError, {{"command", command}, {"error", std::string("invalid JSON: ") + e.what()}}};
  } catch (const ParseError& e) {
    return {kInputError, {{"command", command}, {"error", std::string("parse error: ") + e.what()}}};
  } catch (const std::invalid_argument& e) {
    return {kInputError, {{"command", command}, {"error", e.what()}}};
  } catch (const std::domain_error& e) {
    return {kInputError, {{"command", command}, {"error", e.what()}}};
  } catch (const std::out_of_range& e) {
    return {kInputError, {{"command", command}, {"error", e.what()}}};
  }
}

}  // namespace dkit::cli

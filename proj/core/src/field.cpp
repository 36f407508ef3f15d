#include "dkit/field.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "dkit/linalg.hpp"

namespace dkit {

DegreeVector::DegreeVector(std::vector<int> degrees) : raw(std::move(degrees)), sorted(raw) {
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
}

PolyVectorField::PolyVectorField(std::vector<MultiPoly> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("vector field needs at least one component");
  nvars_ = components_.front().nvars();
  for (const auto& p : components_) {
    if (p.nvars() != nvars_) throw std::invalid_argument("vector field components live in different rings");
  }
  if (components_.size() != nvars_) {
    throw std::invalid_argument("vector field needs one component per variable");
  }
}

DegreeVector PolyVectorField::degrees() const {
  std::vector<int> d;
  d.reserve(components_.size());
  for (const auto& p : components_) d.push_back(std::max(p.degree(), 0));
  return DegreeVector(std::move(d));
}

bool PolyVectorField::is_real() const {
  return std::all_of(components_.begin(), components_.end(), [](const MultiPoly& p) { return p.is_real(); });
}

MultiPoly lie_derivative(const PolyVectorField& X, const MultiPoly& f) {
  if (f.nvars() != X.nvars()) throw std::invalid_argument("lie_derivative: dimension mismatch");
  MultiPoly r(f.nvars());
  for (std::size_t i = 0; i < X.nvars(); ++i) {
    MultiPoly d = f.derivative(i);
    if (d.is_zero() || X.component(i).is_zero()) continue;
    r += X.component(i) * d;
  }
  return r;
}

MultiPoly lie_derivative(const PolyVectorField& X, const MultiPoly& f, unsigned times) {
  MultiPoly r = f;
  for (unsigned k = 0; k < times; ++k) r = lie_derivative(X, r);
  return r;
}

std::optional<TangencyCertificate> check_on_sphere(const PolyVectorField& X, const SphereContext& ctx) {
  if (X.nvars() != ctx.nvars()) throw std::invalid_argument("check_on_sphere: field must act on n+1 variables");
  auto q = exact_divide(lie_derivative(X, ctx.G()), ctx.G());
  if (!q) return std::nullopt;
  return TangencyCertificate{std::move(*q)};
}

TangentFieldSpace::TangentFieldSpace(std::size_t n, const DegreeVector& m) : n_(n), degrees_(m) {
  const std::size_t nv = n + 1;
  if (n == 0) throw std::invalid_argument("tangent_field_space: n must be at least 1");
  if (m.size() != nv) throw std::invalid_argument("tangent_field_space: one degree per component required");
  for (int d : m.raw) {
    if (d < 0) throw std::invalid_argument("tangent_field_space: degrees must be non-negative");
  }
  for (std::size_t i = 0; i < nv; ++i) {
    offsets_.push_back(unknowns_);
    component_monomials_.push_back(monomials_up_to(nv, m.raw[i]));
    unknowns_ += component_monomials_.back().size();
  }
  offsets_.push_back(unknowns_);
  cofactor_monomials_ = monomials_up_to(nv, m.cofactor_degree());
  unknowns_ += cofactor_monomials_.size();

  std::map<Monomial, std::size_t, GradedLex> rows;
  auto row_of = [&](const Monomial& mono) {
    auto [it, inserted] = rows.try_emplace(mono, rows.size());
    if (inserted) {
      for (auto& r : constraints_) r.resize(unknowns_);
      constraints_.emplace_back(unknowns_, Rational(0));
    }
    return it->second;
  };

  // X(G) = sum_i 2 x_i P_i.
  for (std::size_t i = 0; i < nv; ++i) {
    Monomial xi(nv);
    xi.set(i, 1);
    for (std::size_t k = 0; k < component_monomials_[i].size(); ++k) {
      const std::size_t col = offsets_[i] + k;
      constraints_[row_of(component_monomials_[i][k] * xi)][col] += 2;
    }
  }
  // -K*G = -K*(x_1^2 + ... + x_N^2) + K.
  for (std::size_t k = 0; k < cofactor_monomials_.size(); ++k) {
    const std::size_t col = offsets_[nv] + k;
    const Monomial& nu = cofactor_monomials_[k];
    for (std::size_t j = 0; j < nv; ++j) {
      Monomial sq(nv);
      sq.set(j, 2);
      constraints_[row_of(nu * sq)][col] -= 1;
    }
    constraints_[row_of(nu)][col] += 1;
  }

  Matrix a(constraints_.size(), unknowns_);
  for (std::size_t r = 0; r < constraints_.size(); ++r) {
    for (std::size_t c = 0; c < unknowns_; ++c) a(r, c) = constraints_[r][c];
  }
  for (const auto& v : null_space(std::move(a))) {
    std::vector<Rational> rv;
    rv.reserve(v.size());
    for (const auto& x : v) rv.push_back(x.re());
    basis_.push_back(std::move(rv));
  }
}

std::optional<std::size_t> TangentFieldSpace::component_index(std::size_t i, const Monomial& m) const {
  const auto& monos = component_monomials_.at(i);
  auto it = std::find(monos.begin(), monos.end(), m);
  if (it == monos.end()) return std::nullopt;
  return offsets_[i] + static_cast<std::size_t>(it - monos.begin());
}

PolyVectorField TangentFieldSpace::field_from(const std::vector<Rational>& coeffs) const {
  if (coeffs.size() != unknowns_) throw std::invalid_argument("field_from: coefficient count mismatch");
  const std::size_t nv = n_ + 1;
  std::vector<MultiPoly> comps;
  for (std::size_t i = 0; i < nv; ++i) {
    MultiPoly p(nv);
    for (std::size_t k = 0; k < component_monomials_[i].size(); ++k) {
      p.add_term(component_monomials_[i][k], coeffs[offsets_[i] + k]);
    }
    comps.push_back(std::move(p));
  }
  return PolyVectorField(std::move(comps));
}

MultiPoly TangentFieldSpace::cofactor_from(const std::vector<Rational>& coeffs) const {
  if (coeffs.size() != unknowns_) throw std::invalid_argument("cofactor_from: coefficient count mismatch");
  MultiPoly k(n_ + 1);
  for (std::size_t j = 0; j < cofactor_monomials_.size(); ++j) {
    k.add_term(cofactor_monomials_[j], coeffs[offsets_[n_ + 1] + j]);
  }
  return k;
}

std::vector<Rational> TangentFieldSpace::combine(const std::vector<Rational>& weights) const {
  if (weights.size() != basis_.size()) throw std::invalid_argument("combine: one weight per basis vector");
  std::vector<Rational> v(unknowns_, Rational(0));
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    if (sgn(weights[b]) == 0) continue;
    for (std::size_t c = 0; c < unknowns_; ++c) v[c] += weights[b] * basis_[b][c];
  }
  return v;
}

bool TangentFieldSpace::contains(const PolyVectorField& X) const {
  if (X.nvars() != n_ + 1) return false;
  std::vector<Rational> v(unknowns_, Rational(0));
  for (std::size_t i = 0; i <= n_; ++i) {
    for (const auto& [m, c] : X.component(i).terms()) {
      auto col = component_index(i, m);
      if (!col || !c.is_real()) return false;
      v[*col] = c.re();
    }
  }
  SphereContext ctx(n_);
  auto cert = check_on_sphere(X, ctx);
  if (!cert || cert->cofactor.degree() > degrees_.cofactor_degree()) return false;
  for (const auto& [m, c] : cert->cofactor.terms()) {
    auto it = std::find(cofactor_monomials_.begin(), cofactor_monomials_.end(), m);
    v[offsets_[n_ + 1] + static_cast<std::size_t>(it - cofactor_monomials_.begin())] = c.re();
  }
  for (const auto& row : constraints_) {
    Rational acc = 0;
    for (std::size_t c = 0; c < unknowns_; ++c) acc += row[c] * v[c];
    if (sgn(acc) != 0) return false;
  }
  return true;
}

PolyVectorField TangentFieldSpace::sample(std::uint64_t seed, double sparsity, int range) const {
  if (basis_.empty()) throw std::domain_error("sample_on_sphere_field: tangent field space is trivial");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution drop(sparsity);
  std::uniform_int_distribution<int> coeff(-range, range);
  std::vector<Rational> w(basis_.size(), Rational(0));
  for (auto& x : w) {
    if (!drop(rng)) x = coeff(rng);
  }
  return field_from(combine(w));
}

TangentFieldSpace tangent_field_space(std::size_t n, const DegreeVector& m) { return TangentFieldSpace(n, m); }

PolyVectorField sample_on_sphere_field(std::size_t n, const DegreeVector& m, std::uint64_t seed) {
  return tangent_field_space(n, m).sample(seed);
}

}  // namespace dkit

#include "dkit/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dkit {

namespace {

void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("polynomial variable-count mismatch: " + std::to_string(a.nvars()) +
                                " vs " + std::to_string(b.nvars()));
  }
}

std::string monomial_string(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t v = 0; v < m.nvars(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[v];
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out;
}

}  // namespace

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  degree_ = degree_ - exps_.at(i) + e;
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, int max_degree) {
  std::vector<Monomial> out;
  if (max_degree < 0) return out;
  std::vector<std::uint32_t> e(nvars, 0);
  // Enumerate exponent vectors with sum <= max_degree by odometer.
  while (true) {
    out.emplace_back(e);
    std::size_t i = 0;
    while (i < nvars) {
      ++e[i];
      std::uint32_t s = std::accumulate(e.begin(), e.end(), std::uint32_t{0});
      if (s <= static_cast<std::uint32_t>(max_degree)) break;
      e[i] = 0;
      ++i;
    }
    if (i == nvars) break;
  }
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const GaussianRational& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::invalid_argument("variable index out of range");
  Monomial m(nvars);
  m.set(index, 1);
  return term(m, 1);
}

MultiPoly MultiPoly::term(const Monomial& m, const GaussianRational& c) {
  MultiPoly p(m.nvars());
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

int MultiPoly::degree_in(std::size_t var) const {
  if (var >= nvars_) throw std::invalid_argument("variable index out of range");
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

GaussianRational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

GaussianRational MultiPoly::constant_term() const { return coefficient(Monomial(nvars_)); }

const MultiPoly::Terms::value_type& MultiPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return *terms_.rbegin();
}

void MultiPoly::add_term(const Monomial& m, const GaussianRational& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("monomial variable-count mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_ring(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_ring(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b);
  MultiPoly r(a.nvars());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::conj() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = c.conj();
  return r;
}

bool MultiPoly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

MultiPoly MultiPoly::real_part() const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.re());
  return r;
}

MultiPoly MultiPoly::imag_part() const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.im());
  return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw std::invalid_argument("partial derivative index out of range");
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d.set(var, m[var] - 1);
    r.add_term(d, c * GaussianRational(static_cast<long>(m[var])));
  }
  return r;
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images) const {
  if (images.size() != nvars_) throw std::invalid_argument("compose: one image per variable required");
  if (images.empty()) return *this;
  const std::size_t target = images.front().nvars();
  for (const auto& im : images) {
    if (im.nvars() != target) throw std::invalid_argument("compose: images live in different rings");
  }
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  auto power = [&](std::size_t v, std::uint32_t e) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (m[v] > 0) t *= power(v, m[v]);
    }
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::extend(std::size_t nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("extend: cannot drop variables");
  MultiPoly r(nvars);
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint32_t> e = m.exponents();
    e.resize(nvars, 0);
    r.terms_.emplace(Monomial(std::move(e)), c);
  }
  return r;
}

GaussianRational MultiPoly::evaluate(std::span<const GaussianRational> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluate: dimension mismatch");
  std::vector<std::vector<GaussianRational>> powers(nvars_);
  GaussianRational acc;
  for (const auto& [m, c] : terms_) {
    GaussianRational t = c;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (m[v] == 0) continue;
      auto& cache = powers[v];
      if (cache.empty()) cache.emplace_back(1);
      while (cache.size() <= m[v]) cache.push_back(cache.back() * point[v]);
      t *= cache[m[v]];
    }
    acc += t;
  }
  return acc;
}

std::complex<double> MultiPoly::evaluate(std::span<const double> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluate: dimension mismatch");
  std::complex<double> acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = 1.0;
    for (std::size_t v = 0; v < nvars_; ++v) {
      for (std::uint32_t k = 0; k < m[v]; ++k) t *= point[v];
    }
    acc += c.to_complex() * t;
  }
  return acc;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  std::vector<std::string> fallback;
  if (names.empty()) {
    fallback = default_names(nvars_);
    names = fallback;
  }
  if (names.size() != nvars_) throw std::invalid_argument("to_string: one name per variable required");
  if (terms_.empty()) return "0";

  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const std::string mono = monomial_string(m, names);
    bool negative = false;
    std::string coeff;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      Rational a = abs(c.re());
      if (!(a == 1) || mono.empty()) coeff = a.get_str();
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      Rational a = abs(c.im());
      coeff = a == 1 ? "i" : a.get_str() + "*i";
    } else {
      coeff = c.to_string();
    }
    std::string body = coeff;
    if (!mono.empty()) body = coeff.empty() ? mono : coeff + "*" + mono;
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g) {
  require_same_ring(f, g);
  if (g.is_zero()) throw std::domain_error("exact_divide: division by the zero polynomial");
  const auto& [lm, lc] = g.leading();
  const GaussianRational lc_inv = lc.inverse();
  MultiPoly rem = f;
  MultiPoly quot(f.nvars());
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    if (!lm.divides(rm)) return std::nullopt;
    const Monomial qm = rm / lm;
    const GaussianRational qc = rc * lc_inv;
    quot.add_term(qm, qc);
    for (const auto& [gm, gc] : g.terms()) rem.add_term(qm * gm, -(qc * gc));
  }
  return quot;
}

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace dkit

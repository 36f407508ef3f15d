#include "dkit/univariate.hpp"

#include "dkit/poly.hpp"

#include <algorithm>
#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>

namespace dkit {

namespace {

using Big = boost::multiprecision::mpfr_float;

struct BigComplex {
  Big re;
  Big im;
};

BigComplex add(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
BigComplex sub(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
BigComplex mul(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
BigComplex div(const BigComplex& a, const BigComplex& b) {
  Big d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Big abs2(const BigComplex& a) { return a.re * a.re + a.im * a.im; }

Big to_big(const Integer& z) { return Big(z.get_mpz_t()); }

// Sets the MPFR default precision for the lifetime of the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10) : saved_(Big::default_precision()) {
    Big::default_precision(digits10);
  }
  ~PrecisionGuard() { Big::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

Integer round_to_integer(const Big& x) {
  Big r = boost::multiprecision::round(x);
  Integer z;
  mpfr_get_z(z.get_mpz_t(), r.backend().data(), MPFR_RNDN);
  return z;
}

int sign_at(const UniPoly& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k].re();
  return sgn(acc);
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    auto [q, r] = divmod(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

std::size_t sign_variations(const std::vector<UniPoly>& seq, const Rational& x) {
  std::size_t changes = 0;
  int prev = 0;
  for (const auto& q : seq) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

UniPoly::UniPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::linear_root(const GaussianRational& root) { return UniPoly({-root, GaussianRational(1)}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool UniPoly::is_real() const {
  return std::all_of(c_.begin(), c_.end(), [](const GaussianRational& z) { return z.is_real(); });
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  GaussianRational inv = leading().inverse();
  std::vector<GaussianRational> c = c_;
  for (auto& z : c) z *= inv;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::derivative() const {
  std::vector<GaussianRational> c;
  for (std::size_t k = 1; k < c_.size(); ++k) c.push_back(c_[k] * GaussianRational(static_cast<long>(k)));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::conj() const {
  std::vector<GaussianRational> c = c_;
  for (auto& z : c) z = z.conj();
  return UniPoly(std::move(c));
}

UniPoly UniPoly::real_part() const {
  std::vector<GaussianRational> c;
  for (const auto& z : c_) c.emplace_back(z.re());
  return UniPoly(std::move(c));
}

UniPoly UniPoly::imag_part() const {
  std::vector<GaussianRational> c;
  for (const auto& z : c_) c.emplace_back(z.im());
  return UniPoly(std::move(c));
}

GaussianRational UniPoly::evaluate(const GaussianRational& s) const {
  GaussianRational acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * s + c_[k];
  return acc;
}

double UniPoly::evaluate_real(double s) const {
  double acc = 0.0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * s + c_[k].re().get_d();
  return acc;
}

UniPoly UniPoly::operator-() const {
  std::vector<GaussianRational> c = c_;
  for (auto& z : c) z = -z;
  return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(c));
}

std::string UniPoly::to_string(const std::string& var) const {
  MultiPoly p(1);
  for (std::size_t k = 0; k < c_.size(); ++k) p.add_term(Monomial(std::vector<std::uint32_t>{static_cast<std::uint32_t>(k)}), c_[k]);
  const std::string names[] = {var};
  return p.to_string(names);
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("univariate division by zero");
  std::vector<GaussianRational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly{}, a};
  std::vector<GaussianRational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const GaussianRational inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    const GaussianRational q = rem[static_cast<std::size_t>(k)] * inv;
    quot[static_cast<std::size_t>(k - db)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
  std::vector<UniPoly> out;
  if (p.degree() == 0) return out;
  const UniPoly dp = p.derivative();
  UniPoly a = gcd(p, dp);
  UniPoly b = divmod(p, a).first;
  UniPoly c = divmod(dp, a).first;
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly s = gcd(b, d);
    out.push_back(s);
    b = divmod(b, s).first;
    c = divmod(d, s).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("square-free part of the zero polynomial");
  if (p.degree() <= 0) return UniPoly::constant(1);
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

unsigned root_multiplicity(const UniPoly& p, const GaussianRational& root) {
  if (p.is_zero()) throw std::domain_error("root multiplicity in the zero polynomial");
  unsigned k = 0;
  UniPoly q = p;
  const UniPoly lin = UniPoly::linear_root(root);
  while (q.degree() >= 1) {
    auto [quot, rem] = divmod(q, lin);
    if (!rem.is_zero()) break;
    q = std::move(quot);
    ++k;
  }
  return k;
}

std::vector<GaussianRational> gaussian_rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  UniPoly q = squarefree_part(p);
  std::vector<GaussianRational> roots;
  if (q.degree() <= 0) return roots;
  if (q.degree() == 1) {
    roots.push_back(-q.coeff(0) / q.coeff(1));
    return roots;
  }

  Integer scale = 1;
  for (const auto& z : q.coeffs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), denominator_lcm(z).get_mpz_t());
  std::vector<Integer> re(q.coeffs().size());
  std::vector<Integer> im(q.coeffs().size());
  std::size_t bits = mpz_sizeinbase(scale.get_mpz_t(), 2);
  for (std::size_t k = 0; k < q.coeffs().size(); ++k) {
    Rational r = q.coeffs()[k].re() * scale;
    Rational i = q.coeffs()[k].im() * scale;
    re[k] = r.get_num();
    im[k] = i.get_num();
    bits = std::max({bits, mpz_sizeinbase(re[k].get_mpz_t(), 2), mpz_sizeinbase(im[k].get_mpz_t(), 2)});
  }
  const std::size_t n = static_cast<std::size_t>(q.degree());
  // Roots of a square-free integer polynomial are separated by a margin that
  // shrinks with degree and coefficient size; size the precision accordingly.
  const unsigned digits10 = static_cast<unsigned>(60 + (2 * bits * n + 8 * n) * 30103 / 100000);
  PrecisionGuard guard(digits10);

  std::vector<BigComplex> coef(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coef[k] = {to_big(re[k]), to_big(im[k])};

  auto eval = [&](const BigComplex& z, BigComplex& value, BigComplex& deriv) {
    value = coef[n];
    deriv = {Big(0), Big(0)};
    for (std::size_t k = n; k-- > 0;) {
      deriv = add(mul(deriv, z), value);
      value = add(mul(value, z), coef[k]);
    }
  };

  // Cauchy bound on root moduli.
  Big lead = boost::multiprecision::sqrt(abs2(coef[n]));
  Big radius = 0;
  for (std::size_t k = 0; k < n; ++k) radius = boost::multiprecision::max(radius, boost::multiprecision::sqrt(abs2(coef[k])) / lead);
  radius += 1;

  std::vector<BigComplex> z(n);
  const Big two_pi = 2 * boost::multiprecision::acos(Big(-1));
  for (std::size_t k = 0; k < n; ++k) {
    Big angle = two_pi * Big(k) / Big(n) + Big(0.4);
    z[k] = {radius * boost::multiprecision::cos(angle) / 2, radius * boost::multiprecision::sin(angle) / 2};
  }

  const Big eps = boost::multiprecision::pow(Big(10), -static_cast<int>(digits10) + 10);
  for (int iter = 0; iter < 2000; ++iter) {
    Big worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      BigComplex value;
      BigComplex deriv;
      eval(z[k], value, deriv);
      if (abs2(value) == 0) continue;
      BigComplex ratio = div(value, deriv);
      BigComplex sum{Big(0), Big(0)};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        BigComplex diff = sub(z[k], z[j]);
        if (abs2(diff) == 0) continue;
        sum = add(sum, div(BigComplex{Big(1), Big(0)}, diff));
      }
      BigComplex denom = sub(BigComplex{Big(1), Big(0)}, mul(ratio, sum));
      BigComplex step = abs2(denom) == 0 ? ratio : div(ratio, denom);
      z[k] = sub(z[k], step);
      worst = boost::multiprecision::max(worst, abs2(step) / (1 + abs2(z[k])));
    }
    if (worst < eps) break;
  }

  const Big big_scale = to_big(scale);
  for (const auto& zk : z) {
    Integer wr = round_to_integer(zk.re * big_scale);
    Integer wi = round_to_integer(zk.im * big_scale);
    Rational re(wr, scale), im(wi, scale);
    re.canonicalize();
    im.canonicalize();
    GaussianRational cand(re, im);
    if (!q.evaluate(cand).is_zero()) continue;
    if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
  }
  return roots;
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Rational& width) {
  if (p.is_zero()) throw std::domain_error("real roots of the zero polynomial");
  if (!p.is_real()) throw std::invalid_argument("isolate_real_roots requires real coefficients");
  UniPoly q = squarefree_part(p);
  std::vector<RootInterval> out;
  if (q.degree() <= 0) return out;

  Rational bound = 0;
  const Rational lead = abs(q.leading().re());
  for (int k = 0; k < q.degree(); ++k) {
    Rational r = abs(q.coeff(static_cast<std::size_t>(k)).re()) / lead;
    if (r > bound) bound = r;
  }
  bound += 1;

  const auto seq = sturm_sequence(q);
  auto count = [&](const Rational& lo, const Rational& hi) {
    return sign_variations(seq, lo) - sign_variations(seq, hi);
  };

  std::vector<RootInterval> work{{-bound, bound}};
  while (!work.empty()) {
    RootInterval iv = work.back();
    work.pop_back();
    const std::size_t c = count(iv.lo, iv.hi);
    if (c == 0) continue;
    if (c == 1) {
      while (iv.hi - iv.lo > width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        if (count(iv.lo, mid) == 1) {
          iv.hi = mid;
        } else {
          iv.lo = mid;
        }
      }
      out.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    work.push_back({mid, iv.hi});
    work.push_back({iv.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

UniPoly real_root_carrier(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("real roots of the zero polynomial");
  if (p.is_real()) return p.real_part();
  return gcd(p.real_part(), p.imag_part());
}

std::size_t count_real_roots(const UniPoly& p) { return isolate_real_roots(real_root_carrier(p)).size(); }

RootSplit split_roots(const UniPoly& p) {
  RootSplit out;
  const auto parts = squarefree_decomposition(p);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    UniPoly rest = parts[k];
    if (rest.degree() <= 0) continue;
    const auto mult = static_cast<unsigned>(k + 1);
    for (const auto& r : gaussian_rational_roots(rest)) {
      out.exact.push_back({r, mult});
      rest = divmod(rest, UniPoly::linear_root(r)).first;
    }
    if (rest.degree() > 0) {
      out.residual.push_back({rest, mult, isolate_real_roots(real_root_carrier(rest), Rational(1, 1 << 20))});
    }
  }
  return out;
}

}  // namespace dkit

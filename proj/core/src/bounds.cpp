#include "dkit/bounds.hpp"

#include <stdexcept>

namespace dkit {

Integer binomial(long top, long k) {
  if (k < 0 || top < k) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), Integer(top).get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

BoundsReport bounds(std::size_t n, const DegreeVector& m, int d) {
  if (n < 1) throw std::invalid_argument("bounds: n must be at least 1");
  if (m.size() < n) throw std::invalid_argument("bounds: need at least n component degrees");
  const long nn = static_cast<long>(n);
  const long m1 = m.max();
  BoundsReport r;

  r.thm1b = binomial(nn + m1 - 1, m1 - 1) + 1;
  r.thm1d = binomial(nn + m1 - 1, m1 - 1) + nn;

  Integer sum_n = 0;
  for (std::size_t k = 0; k < n; ++k) sum_n += m.sorted[k];
  const Integer sum_prev = sum_n - m.sorted[n - 1];
  r.thm2_total = binomial(nn, 2) * (m1 - 1) + sum_n;
  r.thm2_point = binomial(nn - 1, 2) * (m1 - 1) + sum_prev + 1;

  // (n + 2 m_1)/(n + m_1) * C(n + m_1, m_1) is always an integer:
  // it equals C(n+m_1, n) + C(n+m_1-1, n).
  Rational t3(nn + 2 * m1, nn + m1);
  t3.canonicalize();
  t3 *= Rational(binomial(nn + m1, m1));
  if (t3.get_den() != 1) throw std::logic_error("bounds: non-integral sphere threshold");
  r.thm3b = t3.get_num() + 1;
  r.thm3d = t3.get_num() + nn;

  r.thm4 = binomial(nn - 1, 2) * (m1 - 1) + sum_prev + 1;
  if (m.size() > n) r.thm5 = Integer(m.sorted[n]);

  const long big_n = nn + 1;
  r.d_of_m = binomial(big_n + m1, big_n) - binomial(big_n + m1 - d, big_n);
  return r;
}

}  // namespace dkit

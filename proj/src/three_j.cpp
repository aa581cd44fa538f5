#include "gtomo/three_j.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace gtomo {

namespace {

std::vector<int> primes_up_to(int n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<int> out;
  for (int p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (long q = static_cast<long>(p) * p; q <= n; q += p) composite[q] = true;
  }
  return out;
}

// Exponent of p in n! (Legendre).
int factorial_exponent(int n, int p) {
  int e = 0;
  for (long q = p; q <= n; q *= p) e += static_cast<int>(n / q);
  return e;
}

// Square root of prod_i (n_i!)^{sign_i}, reduced to rational * sqrt(squarefree).
SqrtRational sqrt_of_factorial_ratio(const std::vector<std::pair<int, int>>& factorials) {
  int top = 1;
  for (const auto& [n, s] : factorials) top = std::max(top, n);
  SqrtRational out;
  mpz_class num = 1, den = 1, rad = 1;
  for (int p : primes_up_to(top)) {
    int e = 0;
    for (const auto& [n, s] : factorials) e += s * factorial_exponent(n, p);
    // p^e = p^(2 floor(e/2)) * p^(e mod 2), with floor toward -infinity.
    int half = (e >= 0) ? e / 2 : -((-e + 1) / 2);
    int rem = e - 2 * half;
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), mpz_class(p).get_mpz_t(), static_cast<unsigned long>(std::abs(half)));
    if (half > 0) num *= pk;
    if (half < 0) den *= pk;
    if (rem == 1) rad *= p;
  }
  out.coefficient = mpq_class(num, den);
  out.coefficient.canonicalize();
  out.radicand = rad;
  return out;
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

bool half_integer_pair(int two_j, int two_m) {
  return two_j >= 0 && std::abs(two_m) <= two_j && (two_j - two_m) % 2 == 0;
}

int to_twice(double v) {
  double t = 2.0 * v;
  long r = std::lround(t);
  if (std::abs(t - static_cast<double>(r)) > 1e-9)
    throw std::invalid_argument("3j argument is not a half-integer");
  return static_cast<int>(r);
}

}  // namespace

double SqrtRational::to_double() const {
  return coefficient.get_d() * std::sqrt(radicand.get_d());
}

SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) {
  SqrtRational out;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.radicand.get_mpz_t(), b.radicand.get_mpz_t());
  // sqrt(a b) = g sqrt((a/g)(b/g)) for squarefree a, b.
  out.coefficient = a.coefficient * b.coefficient * g;
  out.radicand = (a.radicand / g) * (b.radicand / g);
  return out;
}

void SqrtSum::add(const SqrtRational& term) {
  if (term.is_zero()) return;
  terms_[term.radicand] += term.coefficient;
}

bool SqrtSum::equals(const mpq_class& q) const {
  for (const auto& [rad, c] : terms_) {
    if (rad == 1) {
      if (c != q) return false;
    } else if (c != 0) {
      return false;
    }
  }
  if (q != 0 && terms_.find(mpz_class(1)) == terms_.end()) return false;
  return true;
}

double SqrtSum::to_double() const {
  double s = 0.0;
  for (const auto& [rad, c] : terms_) s += c.get_d() * std::sqrt(rad.get_d());
  return s;
}

SqrtRational three_j_exact(int j1, int j2, int j3, int m1, int m2, int m3) {
  // Arguments are doubled throughout this function.
  SqrtRational zero;
  if (!half_integer_pair(j1, m1) || !half_integer_pair(j2, m2) || !half_integer_pair(j3, m3))
    return zero;
  if (m1 + m2 + m3 != 0) return zero;
  if ((j1 + j2 + j3) % 2 != 0) return zero;
  if (j3 < std::abs(j1 - j2) || j3 > j1 + j2) return zero;

  auto h = [](int twice) { return twice / 2; };  // exact for even arguments
  const int a1 = h(j1 + j2 - j3), a2 = h(j1 - j2 + j3), a3 = h(-j1 + j2 + j3);
  const int a4 = h(j1 + j2 + j3) + 1;
  SqrtRational root = sqrt_of_factorial_ratio({{a1, 1},
                                              {a2, 1},
                                              {a3, 1},
                                              {a4, -1},
                                              {h(j1 + m1), 1},
                                              {h(j1 - m1), 1},
                                              {h(j2 + m2), 1},
                                              {h(j2 - m2), 1},
                                              {h(j3 + m3), 1},
                                              {h(j3 - m3), 1}});

  const int b1 = h(j3 - j2 + m1), b2 = h(j3 - j1 - m2);
  const int c1 = h(j1 + j2 - j3), c2 = h(j1 - m1), c3 = h(j2 + m2);
  const int kmin = std::max({0, -b1, -b2});
  const int kmax = std::min({c1, c2, c3});
  mpq_class sum = 0;
  for (int k = kmin; k <= kmax; ++k) {
    mpz_class den = factorial(k) * factorial(b1 + k) * factorial(b2 + k) * factorial(c1 - k) *
                    factorial(c2 - k) * factorial(c3 - k);
    mpq_class term(1, den);
    term.canonicalize();
    if (k % 2) sum -= term;
    else sum += term;
  }
  const int phase = h(j1 - j2 - m3);
  if (((phase % 2) + 2) % 2 == 1) sum = -sum;
  root.coefficient *= sum;
  if (root.coefficient == 0) root.radicand = 1;
  return root;
}

double three_j(double j1, double j2, double j3, double m1, double m2, double m3) {
  return three_j_exact(to_twice(j1), to_twice(j2), to_twice(j3), to_twice(m1), to_twice(m2),
                       to_twice(m3))
      .to_double();
}

bool three_j_first_identity(int two_j, int two_J) {
  SqrtSum s;
  for (int tm = -two_j; tm <= two_j; tm += 2) {
    SqrtRational t = three_j_exact(two_j, two_j, two_J, tm, -tm, 0);
    SqrtRational sq = t * t;
    sq.coefficient *= (two_J + 1);
    s.add(sq);
  }
  return s.equals(1);
}

bool three_j_second_identity(int two_j, int m1, int m2, int m1p, int m2p) {
  SqrtSum s;
  for (int tJ = 0; tJ <= 2 * two_j; tJ += 2)
    for (int tM = -tJ; tM <= tJ; tM += 2) {
      SqrtRational p = three_j_exact(two_j, two_j, tJ, m2p, -m1p, -tM) *
                       three_j_exact(two_j, two_j, tJ, m1, -m2, -tM);
      p.coefficient *= (tJ + 1);
      s.add(p);
    }
  return s.equals((m1 == m2p && m2 == m1p) ? 1 : 0);
}

}  // namespace gtomo

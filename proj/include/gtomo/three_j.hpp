#pragma once

#include <map>

#include <gmpxx.h>

namespace gtomo {

/// Exact value coefficient * sqrt(radicand) with a squarefree positive radicand.
struct SqrtRational {
  mpq_class coefficient{0};
  mpz_class radicand{1};

  double to_double() const;
  bool is_zero() const { return coefficient == 0; }
};

SqrtRational operator*(const SqrtRational& a, const SqrtRational& b);

/// Exact linear combination of square roots, keyed by squarefree radicand.
class SqrtSum {
 public:
  void add(const SqrtRational& term);
  /// True when the sum is exactly the rational q.
  bool equals(const mpq_class& q) const;
  double to_double() const;

 private:
  std::map<mpz_class, mpq_class> terms_;
};

/// Wigner 3j symbol (j1 j2 j3; m1 m2 m3) by the Racah formula in exact
/// arithmetic. All arguments are doubled so half-integers stay integral.
/// Returns exactly zero when a selection rule fails.
SqrtRational three_j_exact(int two_j1, int two_j2, int two_j3, int two_m1, int two_m2, int two_m3);
double three_j(double j1, double j2, double j3, double m1, double m2, double m3);

/// (2J+1) sum_m (j j J; m -m 0)^2 for each J = 0..2j, exactly.
bool three_j_first_identity(int two_j, int two_J);
/// sum_{J,M} (2J+1) (j j J; m2' -m1' -M)(j j J; m1 -m2 -M) against the
/// Kronecker product delta(m1,m2') delta(m2,m1'), exactly.
bool three_j_second_identity(int two_j, int two_m1, int two_m2, int two_m1p, int two_m2p);

}  // namespace gtomo

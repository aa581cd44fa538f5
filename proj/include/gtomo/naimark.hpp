#pragma once

#include <vector>

#include "gtomo/irrep.hpp"

namespace gtomo {

/// N_ij = phi(g_i^{-1} g_j).
CMatrix naimark_matrix(const GroupFunction& phi);

struct PositivityCertificate {
  RVector eigenvalues;  // ascending, of the Hermitian part
  double min_eigenvalue = 0.0;
  double threshold = 0.0;  // verdict is min_eigenvalue >= -threshold
  double hermiticity_residual = 0.0;
  bool positive = false;
};

/// Certifies a Hermitian matrix as PSD at -relative * max(1, ||N||_2).
PositivityCertificate certify_matrix(const CMatrix& N, double relative = tol::kPsdRelative);
PositivityCertificate certify_positive(const GroupFunction& phi, double relative = tol::kPsdRelative);

struct GnsModel {
  int rank = 0;                 // r
  int dim = 0;                  // r * n
  CMatrix u;                    // rho = u diag(state_eigenvalues) u^+
  RVector state_eigenvalues;    // ascending
  std::vector<int> kept;        // eigenvalue indices above rank_tol
  std::vector<CMatrix> U;       // U(g_j) = D(g_j) repeated r times on the diagonal
  CVector xi;
  CMatrix rho_xi;               // xi xi^+

  /// (xi, U(g) xi) for every element.
  CVector reproduced() const;
  /// Rank of the Gram matrix of {U(g_j) xi}.
  int cyclic_rank(double relative = tol::kCyclicity) const;
};

/// GNS model of a positive-type function whose harmonic content lies in D.
/// Throws NotPositive or RankZero.
GnsModel gns_construct(const GroupFunction& phi, const Irrep& D, double rank_tol = tol::kGnsRank);

struct SeminormValue {
  double by_convolution = 0.0;  // sum_g (X* . X)(g) phi(g)^*
  double by_columns = 0.0;      // sum_q rho_q ||C_q||^2, C = sum_g X(g) D'(g)^*, D' = u^+ D u
};

/// F(X^+ X) for the functional attached to phi, evaluated two ways.
SeminormValue seminorm(const GroupFunction& X, const GroupFunction& phi, const Irrep& D);

}  // namespace gtomo

#pragma once

#include <vector>

#include "gtomo/tomography.hpp"

namespace gtomo {

/// Largest doubled spin accepted for states (j <= 4).
inline constexpr int kMaxStateTwoJ = 8;
/// Largest doubled spin for Wigner matrices; reconstruction needs J up to 2j.
inline constexpr int kMaxWignerTwoJ = 2 * kMaxStateTwoJ;

/// ZYZ Euler angles with alpha in [0,2pi), beta in [0,pi], gamma in [0,4pi).
struct SU2Element {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

SU2Element su2_normalize(double alpha, double beta, double gamma);
/// Spin-1/2 matrix of g.
CMatrix su2_matrix(const SU2Element& g);
/// Euler angles of a 2x2 special unitary matrix, including beta = 0 and beta = pi.
SU2Element su2_from_matrix(const CMatrix& U);
SU2Element su2_compose(const SU2Element& a, const SU2Element& b);
SU2Element su2_inverse(const SU2Element& g);

/// d^j(beta) = exp(-i beta J_y); row k is m = j - k. Throws SpinTooLarge.
RMatrix wigner_small_d(int two_j, double beta);
/// D^j = exp(-i alpha J_z) d^j(beta) exp(-i gamma J_z).
CMatrix wigner_D(int two_j, const SU2Element& g);
/// J_z eigenvalues in row order: j, j-1, ..., -j.
RVector spin_projections(int two_j);

/// Product rule on normalized Haar measure: trapezoid in alpha (2 order
/// points) and gamma (4 order points over [0,4pi)), Gauss-Legendre in cos beta.
struct QuadratureGrid {
  int order = 0;
  std::vector<SU2Element> nodes;
  RVector weights;
  int certified_two_j = -1;        // orthogonality holds for all j, j' up to this
  double certification_residual = 0.0;

  // Factors of the product rule.
  RVector alphas, alpha_weights;
  RVector betas, beta_weights;
  RVector gammas, gamma_weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

QuadratureGrid haar_grid(int order, double tolerance = tol::kGridCertification);
/// Smallest grid whose certified range covers J = 2j.
QuadratureGrid haar_grid_for(int two_j, double tolerance = tol::kGridCertification);

/// D^j at every node, computed once for use in parallel loops.
std::vector<CMatrix> wigner_table(int two_j, const QuadratureGrid& grid);

/// W(g; m) = <m| D^+(g) rho D(g) |m>.
RVector su2_tomogram(const DensityState& rho, int two_j, const SU2Element& g);
/// Tomogram at every grid node; nodes x (2j+1).
RMatrix su2_tomogram_grid(const DensityState& rho, int two_j, const QuadratureGrid& grid);

/// Reconstruction through Wigner 3j symbols from grid-sampled tomograms.
/// Throws GridOrderInsufficient when the grid does not cover J = 2j.
CMatrix su2_reconstruct(const RMatrix& W, int two_j, const QuadratureGrid& grid);

/// phi(g) = sum_m exp(i theta_m(g)) W_m(g) from the spectral frame of D^j(g) at each node.
CVector su2_phase_function_grid(const DensityState& rho, int two_j, const QuadratureGrid& grid);
/// (2j+1) sum_nodes w phi^* D^j.
CMatrix su2_reconstruct_generic(const CVector& phi, int two_j, const QuadratureGrid& grid);

struct HomogeneityReport {
  double phase_residual = 0.0;      // |sum_m e^{i k xi m} W_m - Tr[rho exp(i k X_xi)]|
  double weight_residual = 0.0;     // atom weights at k xi m versus xi m
  double conjugate_residual = 0.0;  // k < 0: phi(k xi) versus phi(|k| xi)^*
};

/// Homogeneity of the torus spectral measure: X_xi = D(g) xi J_z D(g)^+.
HomogeneityReport homogeneity_check(const DensityState& rho, int two_j, double k, double xi,
                                    const SU2Element& coset);

}  // namespace gtomo

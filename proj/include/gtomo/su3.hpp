#pragma once

#include <array>
#include <vector>

#include "gtomo/tomography.hpp"

namespace gtomo {

/// Gell-Mann matrices lambda_1..lambda_8 (index 0..7).
const std::array<CMatrix, 8>& gell_mann();

/// Cartan generators of the defining representation:
/// H1 = lambda_3 / 2, H2 = lambda_8 / 2.
CMatrix su3_cartan(int which);

/// exp(i sum_a p_a lambda_a / 2). Throws DimensionMismatch unless p has 8 entries.
CMatrix su3_defining(const std::vector<double>& params);

/// Gelfand-Zetlin label of a defining-representation basis vector: Cartan
/// weights (m1, m2) and isospin m3 with T^2 eigenvalue m3 (m3 + 1).
struct GZLabel {
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
};

/// Labels of e_1, e_2, e_3; for the conjugate representation the weights flip sign.
std::array<GZLabel, 3> su3_gz_labels(bool conjugate = false);

struct SU3Tomogram {
  RVector W;
  std::array<GZLabel, 3> labels;
};

/// W_m = (D^+ rho D)_mm for D = su3_defining(params).
SU3Tomogram su3_tomogram(const DensityState& rho, const std::vector<double>& params);
/// Same for an explicit 3x3 unitary D; `conjugate` selects the labels of D^*.
SU3Tomogram su3_tomogram(const DensityState& rho, const CMatrix& D, bool conjugate = false);

/// exp(i (xi1 H1 + xi2 H2)).
CMatrix su3_torus(double xi1, double xi2);
/// sum_m exp(i (xi1 m1 + xi2 m2)) W_m.
Complex su3_phase_sum(const SU3Tomogram& t, double xi1, double xi2);

/// diag(B^+ D^+ rho D B): tomogram of rho w.r.t. D in the basis given by the columns of B.
RVector tomogram_in_basis(const CMatrix& rho, const CMatrix& D, const CMatrix& B);
/// Tomogram of rho w.r.t. D in {|m>} against that of U^+ rho U w.r.t. U^+ D U
/// in {U^+ |m>}; returns the largest difference.
double basis_change_identity(const CMatrix& rho, const CMatrix& D, const CMatrix& U);

}  // namespace gtomo

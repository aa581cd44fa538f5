#include "gtomo/su3.hpp"

#include <cmath>

namespace gtomo {

const std::array<CMatrix, 8>& gell_mann() {
  static const auto lambdas = [] {
    std::array<CMatrix, 8> l;
    for (auto& m : l) m = CMatrix::Zero(3, 3);
    const Complex i = kI;
    l[0](0, 1) = 1.0, l[0](1, 0) = 1.0;
    l[1](0, 1) = -i, l[1](1, 0) = i;
    l[2](0, 0) = 1.0, l[2](1, 1) = -1.0;
    l[3](0, 2) = 1.0, l[3](2, 0) = 1.0;
    l[4](0, 2) = -i, l[4](2, 0) = i;
    l[5](1, 2) = 1.0, l[5](2, 1) = 1.0;
    l[6](1, 2) = -i, l[6](2, 1) = i;
    const double s = 1.0 / std::sqrt(3.0);
    l[7](0, 0) = s, l[7](1, 1) = s, l[7](2, 2) = -2.0 * s;
    return l;
  }();
  return lambdas;
}

CMatrix su3_cartan(int which) {
  if (which == 1) return gell_mann()[2] * 0.5;
  if (which == 2) return gell_mann()[7] * 0.5;
  throw IndexOutOfRange("Cartan generator index must be 1 or 2");
}

CMatrix su3_defining(const std::vector<double>& p) {
  if (p.size() != 8)
    throw DimensionMismatch("SU(3) element needs 8 parameters, got " + std::to_string(p.size()));
  CMatrix H = CMatrix::Zero(3, 3);
  for (int a = 0; a < 8; ++a) H += gell_mann()[a] * (0.5 * p[a]);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
  CVector e(3);
  for (int k = 0; k < 3; ++k) e(k) = std::polar(1.0, es.eigenvalues()(k));
  return es.eigenvectors() * e.asDiagonal() * es.eigenvectors().adjoint();
}

std::array<GZLabel, 3> su3_gz_labels(bool conjugate) {
  const double s = 1.0 / (2.0 * std::sqrt(3.0));
  std::array<GZLabel, 3> l{GZLabel{0.5, s, 0.5}, GZLabel{-0.5, s, 0.5}, GZLabel{0.0, -2.0 * s, 0.0}};
  if (conjugate)
    for (auto& x : l) x.m1 = -x.m1, x.m2 = -x.m2;
  return l;
}

SU3Tomogram su3_tomogram(const DensityState& rho, const std::vector<double>& params) {
  return su3_tomogram(rho, su3_defining(params));
}

SU3Tomogram su3_tomogram(const DensityState& rho, const CMatrix& D, bool conjugate) {
  if (rho.dim() != 3 || D.rows() != 3 || D.cols() != 3)
    throw DimensionMismatch("SU(3) tomogram needs 3x3 matrices");
  SU3Tomogram t;
  t.W = (D.adjoint() * rho.matrix() * D).diagonal().real();
  t.labels = su3_gz_labels(conjugate);
  return t;
}

CMatrix su3_torus(double xi1, double xi2) {
  CMatrix T = CMatrix::Zero(3, 3);
  const std::array<GZLabel, 3> labels = su3_gz_labels();
  for (int k = 0; k < 3; ++k) {
    const GZLabel& l = labels[k];
    T(k, k) = std::polar(1.0, xi1 * l.m1 + xi2 * l.m2);
  }
  return T;
}

Complex su3_phase_sum(const SU3Tomogram& t, double xi1, double xi2) {
  Complex s = 0.0;
  for (int k = 0; k < 3; ++k)
    s += std::polar(1.0, xi1 * t.labels[k].m1 + xi2 * t.labels[k].m2) * t.W(k);
  return s;
}

RVector tomogram_in_basis(const CMatrix& rho, const CMatrix& D, const CMatrix& B) {
  if (rho.rows() != D.rows() || D.rows() != B.rows())
    throw DimensionMismatch("basis change needs matrices of one size");
  return (B.adjoint() * D.adjoint() * rho * D * B).diagonal().real();
}

double basis_change_identity(const CMatrix& rho, const CMatrix& D, const CMatrix& U) {
  const Eigen::Index n = rho.rows();
  RVector original = tomogram_in_basis(rho, D, CMatrix::Identity(n, n));
  CMatrix rho_t = U.adjoint() * rho * U;
  CMatrix D_t = U.adjoint() * D * U;
  RVector transformed = tomogram_in_basis(rho_t, D_t, U.adjoint());
  return (original - transformed).cwiseAbs().maxCoeff<Eigen::PropagateNaN>();
}

}  // namespace gtomo

#include "gtomo/naimark.hpp"

#include <cmath>

#include "gtomo/kernels.hpp"
#include "gtomo/tomography.hpp"

namespace gtomo {

CMatrix naimark_matrix(const GroupFunction& phi) {
  return kernels::naimark_parallel(*phi.group(), phi.values());
}

PositivityCertificate certify_matrix(const CMatrix& N, double relative) {
  PositivityCertificate c;
  c.hermiticity_residual = max_abs(N - N.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es((N + N.adjoint()) * 0.5, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw EigenFailure("Hermitian eigensolver did not converge");
  c.eigenvalues = es.eigenvalues();
  c.min_eigenvalue = c.eigenvalues(0);
  const double spectral_norm = c.eigenvalues.cwiseAbs().maxCoeff();
  c.threshold = relative * std::max(1.0, spectral_norm);
  c.positive = c.hermiticity_residual <= c.threshold && c.min_eigenvalue >= -c.threshold;
  return c;
}

PositivityCertificate certify_positive(const GroupFunction& phi, double relative) {
  return certify_matrix(naimark_matrix(phi), relative);
}

CVector GnsModel::reproduced() const {
  CVector out(U.size());
  for (std::size_t g = 0; g < U.size(); ++g) out(g) = xi.dot(U[g] * xi);
  return out;
}

int GnsModel::cyclic_rank(double relative) const {
  CMatrix orbit(dim, U.size());
  for (std::size_t g = 0; g < U.size(); ++g) orbit.col(g) = U[g] * xi;
  Eigen::JacobiSVD<CMatrix> svd(orbit);
  const RVector& s = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > relative * s(0)) ++r;
  return r;
}

GnsModel gns_construct(const GroupFunction& phi, const Irrep& D, double rank_tol) {
  if (std::abs(phi[0]) <= rank_tol) throw RankZero("phi(e) vanishes; no GNS state exists");
  PositivityCertificate cert = certify_positive(phi);
  if (!cert.positive)
    throw NotPositive("function is not of positive type (min Naimark eigenvalue " +
                      std::to_string(cert.min_eigenvalue) + ")");
  const int n = D.dim();
  CMatrix rho = reconstruct(phi, D).matrix;
  Eigen::SelfAdjointEigenSolver<CMatrix> es((rho + rho.adjoint()) * 0.5);
  if (es.info() != Eigen::Success) throw EigenFailure("state eigensolver did not converge");

  GnsModel m;
  m.u = es.eigenvectors();
  m.state_eigenvalues = es.eigenvalues();
  for (int q = 0; q < n; ++q)
    if (m.state_eigenvalues(q) > rank_tol) m.kept.push_back(q);
  m.rank = static_cast<int>(m.kept.size());
  if (m.rank == 0) throw RankZero("reconstructed state has no eigenvalue above rank_tol");
  m.dim = m.rank * n;

  // xi' carries sqrt(rho_{s_j}) at position n(j-1)+s_j; xi = (u + ... + u) xi'.
  m.xi = CVector::Zero(m.dim);
  for (int j = 0; j < m.rank; ++j) {
    const int s = m.kept[j];
    CVector local = CVector::Zero(n);
    local(s) = std::sqrt(m.state_eigenvalues(s));
    m.xi.segment(j * n, n) = m.u * local;
  }
  m.rho_xi = m.xi * m.xi.adjoint();
  m.U.reserve(D.order());
  for (int g = 0; g < D.order(); ++g) {
    CMatrix block = CMatrix::Zero(m.dim, m.dim);
    for (int j = 0; j < m.rank; ++j) block.block(j * n, j * n, n, n) = D.matrix(g);
    m.U.push_back(std::move(block));
  }
  return m;
}

SeminormValue seminorm(const GroupFunction& X, const GroupFunction& phi, const Irrep& D) {
  require_same_group(X, phi);
  PositivityCertificate cert = certify_positive(phi);
  if (!cert.positive) throw NotPositive("seminorm needs a positive-type function");
  SeminormValue v;
  GroupFunction XX = convolve(involution(X, InvolutionKind::Star), X);
  v.by_convolution = XX.values().dot(phi.values()).real();  // sum XX(g) phi(g)^*, conjugated

  CMatrix rho = reconstruct(phi, D).matrix;
  Eigen::SelfAdjointEigenSolver<CMatrix> es((rho + rho.adjoint()) * 0.5);
  const CMatrix& u = es.eigenvectors();
  CMatrix C = CMatrix::Zero(D.dim(), D.dim());
  for (int g = 0; g < D.order(); ++g) C += X[g] * (u.adjoint() * D.matrix(g) * u).conjugate();
  for (int q = 0; q < D.dim(); ++q) v.by_columns += es.eigenvalues()(q) * C.col(q).squaredNorm();
  return v;
}

}  // namespace gtomo

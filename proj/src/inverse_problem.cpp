#include "gtomo/inverse_problem.hpp"

#include <cmath>

#include "gtomo/kernels.hpp"

namespace gtomo {

namespace {

void require_shape(const StochasticFamily& tau, const Irrep& D, const FrameSet& frames) {
  if (!same_group(tau.group, D.group()))
    throw GroupMismatch("family and irrep belong to different groups");
  if (tau.vectors.rows() != D.order() || tau.vectors.cols() != D.dim())
    throw DimensionMismatch("family is " + std::to_string(tau.vectors.rows()) + "x" +
                            std::to_string(tau.vectors.cols()) + ", irrep needs " +
                            std::to_string(D.order()) + "x" + std::to_string(D.dim()));
  if (static_cast<int>(frames.size()) != D.order())
    throw DimensionMismatch("frame count differs from group order");
}

CMatrix build_operator(const GroupFunction& psi, const Irrep& D) {
  return reconstruct(psi, D).matrix;
}

}  // namespace

double StochasticFamily::stochastic_defect() const {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < vectors.rows(); ++j) {
    worst = nan_max(worst, std::abs(vectors.row(j).sum() - 1.0));
    worst = nan_max(worst, -vectors.row(j).minCoeff<Eigen::PropagateNaN>());
  }
  return worst;
}

GroupFunction candidate_function(const StochasticFamily& tau, const FrameSet& frames) {
  const int K = static_cast<int>(tau.vectors.rows());
  if (static_cast<int>(frames.size()) != K) throw DimensionMismatch("frame count differs from family size");
  CVector psi(K);
  for (int j = 0; j < K; ++j) {
    Complex s = 0.0;
    for (Eigen::Index m = 0; m < tau.vectors.cols(); ++m)
      s += std::polar(1.0, frames[j].phases(m)) * tau.vectors(j, m);
    psi(j) = s;
  }
  return GroupFunction(tau.group, std::move(psi));
}

CMatrix reproducing_kernel(const Irrep& D, const FrameSet& frames, int j, int h) {
  const int n = D.dim();
  const CMatrix& Vh = frames.at(h).V;
  CVector diag = (Vh.adjoint() * D.matrix(j) * Vh).diagonal();
  CMatrix R(n, n);
  for (int p = 0; p < n; ++p)
    for (int m = 0; m < n; ++m) R(p, m) = std::polar(1.0, -frames.at(j).phases(m)) * diag(p);
  return R;
}

RMatrix observable_symbols(const CMatrix& A, const FrameSet& frames) {
  return frame_symbols(A, frames).real();
}

CheckResult check_compatibility(const StochasticFamily& tau, const Irrep& D, const FrameSet& frames,
                                double tolerance) {
  require_shape(tau, D, frames);
  // sum_j sum_m R_pm(g_j,g_h) tau_m(g_j) = (V_h^+ [sum_j psi(g_j)^* D(g_j)] V_h)_pp
  CMatrix A = build_operator(candidate_function(tau, frames), D);
  CMatrix lhs = frame_symbols(A, frames);
  CheckResult r;
  r.residual = (lhs - tau.vectors.cast<Complex>()).cwiseAbs().maxCoeff<Eigen::PropagateNaN>();
  r.passed = r.residual <= tolerance;
  return r;
}

CheckResult check_hermiticity(const StochasticFamily& tau, const Irrep& D, const FrameSet& frames,
                              double tolerance) {
  require_shape(tau, D, frames);
  GroupFunction psi = candidate_function(tau, frames);
  CMatrix A = build_operator(psi, D);
  // Same sum taken over inverse elements: (n/K) sum_j psi(g_j) D(g_j^{-1}) = A^+.
  const FiniteGroup& G = *D.group();
  CMatrix B = CMatrix::Zero(D.dim(), D.dim());
  for (int j = 0; j < D.order(); ++j) B += psi[j] * D.matrix(G.inv(j));
  B *= static_cast<double>(D.dim()) / D.order();
  CheckResult r;
  r.residual = max_abs(A - B);
  r.passed = r.residual <= tolerance;
  return r;
}

InverseVerdict decide(const StochasticFamily& tau, const Irrep& D, const FrameSet& frames,
                      const IrrepRegistry* registry, double tolerance) {
  require_shape(tau, D, frames);
  InverseVerdict v;
  v.stochastic_defect = tau.stochastic_defect();
  v.stochastic = v.stochastic_defect <= tolerance;
  CheckResult c = check_compatibility(tau, D, frames, tolerance);
  v.compatible = c.passed;
  v.compatibility_residual = c.residual;
  CheckResult h = check_hermiticity(tau, D, frames, tolerance);
  v.hermitian = h.passed;
  v.hermiticity_residual = h.residual;
  v.candidate_psi = candidate_function(tau, frames);
  v.certificate = certify_positive(v.candidate_psi);
  v.positive = v.certificate.positive;
  v.operator_tau = build_operator(v.candidate_psi, D);
  if (registry) {
    HarmonicCoefficients hc = harmonic_expand(v.candidate_psi, *registry);
    double off = 0.0;
    for (std::size_t a = 0; a < hc.labels.size(); ++a)
      if (hc.labels[a] != D.label()) off = nan_max(off, max_abs(hc.blocks[a]));
    v.off_block_weight = off;
  }
  if (v.stochastic && v.compatible && v.hermitian && v.positive) {
    CMatrix rho = (v.operator_tau + v.operator_tau.adjoint()) * 0.5;
    v.tomogram_residual = (frame_symbols(rho, frames).real() - tau.vectors).cwiseAbs().maxCoeff<Eigen::PropagateNaN>();
    if (v.tomogram_residual <= tolerance) v.recovered_state = rho;
  }
  return v;
}

InverseVerdict decide(const StochasticFamily& tau, const Irrep& D) {
  return decide(tau, D, standard_frames(D));
}

StochasticFamily transport(const StochasticFamily& tau_alpha, const Irrep& D_alpha,
                           const FrameSet& frames_alpha, const Irrep& D_beta,
                           const FrameSet& frames_beta) {
  if (D_alpha.dim() != D_beta.dim())
    throw DimensionMismatch("transport needs irreps of equal dimension");
  if (!same_group(D_alpha.group(), D_beta.group()))
    throw GroupMismatch("transport needs irreps of one group");
  InverseVerdict v = decide(tau_alpha, D_alpha, frames_alpha);
  if (!v.accepted())
    throw SourceNotTomogram("source family is not a tomogram for '" + D_alpha.label() + "'");
  DensityState rho(*v.recovered_state, 1e-8);
  Tomogram W = tomogram(rho, D_beta, frames_beta);
  return StochasticFamily::from(W);
}

StochasticFamily relabel_family(const StochasticFamily& tau, const FrameSet& from, const FrameSet& to) {
  const Eigen::Index K = tau.vectors.rows(), n = tau.vectors.cols();
  if (static_cast<Eigen::Index>(from.size()) != K || static_cast<Eigen::Index>(to.size()) != K)
    throw DimensionMismatch("frame count differs from family size");
  StochasticFamily out = tau;
  for (Eigen::Index g = 0; g < K; ++g) {
    // Overlap |V_from^+ V_to|: a permutation matrix when the frames differ by relabelling.
    RMatrix overlap = (from[g].V.adjoint() * to[g].V).cwiseAbs();
    for (Eigen::Index b = 0; b < n; ++b) {
      Eigen::Index a = 0;
      overlap.col(b).maxCoeff(&a);
      if (std::abs(overlap(a, b) - 1.0) > 1e-8 ||
          std::abs(std::remainder(from[g].phases(a) - to[g].phases(b), 2.0 * kPi)) > 1e-8)
        throw EigenFailure("frames at element " + std::to_string(g + 1) +
                           " are not related by a relabelling");
      out.vectors(g, b) = tau.vectors(g, a);
    }
  }
  return out;
}

}  // namespace gtomo

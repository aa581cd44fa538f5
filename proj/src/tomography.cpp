#include "gtomo/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gtomo/kernels.hpp"
#include "gtomo/naimark.hpp"

namespace gtomo {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
// Entries below this magnitude are skipped when fixing a column's phase.
constexpr double kSignificantEntry = 1e-8;

double normalized_phase(Complex z, double degeneracy) {
  double t = std::arg(z);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi - degeneracy) t = 0.0;
  return t;
}

void fix_column_gauge(CMatrix& V) {
  for (Eigen::Index c = 0; c < V.cols(); ++c) {
    Eigen::Index pick = 0;
    double best = V.col(c).cwiseAbs().maxCoeff();
    for (Eigen::Index r = 0; r < V.rows(); ++r)
      if (std::abs(V(r, c)) > std::max(kSignificantEntry, 1e-6 * best)) {
        pick = r;
        break;
      }
    Complex z = V(pick, c);
    V.col(c) *= std::conj(z) / std::abs(z);
    V(pick, c) = std::abs(V(pick, c));
  }
}

double frame_residual(const CMatrix& U, const CMatrix& V, const RVector& phases) {
  CVector d(phases.size());
  for (Eigen::Index m = 0; m < phases.size(); ++m) d(m) = std::polar(1.0, phases(m));
  return max_abs(V * d.asDiagonal() * V.adjoint() - U);
}

}  // namespace

StateDiagnostics diagnose_state(const CMatrix& A) {
  StateDiagnostics d;
  if (A.rows() != A.cols() || A.rows() == 0) throw DimensionMismatch("state matrix must be square");
  d.hermiticity_residual = max_abs(A - A.adjoint());
  d.trace_residual = std::abs(A.trace() - 1.0);
  CMatrix H = (A + A.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = es.eigenvalues()(0);
  return d;
}

DensityState::DensityState(CMatrix matrix, double tolerance) : matrix_(std::move(matrix)) {
  StateDiagnostics d = diagnose_state(matrix_);
  if (!(d.hermiticity_residual <= tolerance))
    throw InvalidState("state is not Hermitian (residual " + std::to_string(d.hermiticity_residual) + ")");
  if (!(d.trace_residual <= tolerance))
    throw InvalidState("state trace differs from 1 by " + std::to_string(d.trace_residual));
  if (d.min_eigenvalue < -tolerance)
    throw InvalidState("state has negative eigenvalue " + std::to_string(d.min_eigenvalue));
}

CMatrix bloch_matrix(double x, double y, double z) {
  CMatrix m(2, 2);
  m << Complex(1 + z, 0), Complex(x, -y), Complex(x, y), Complex(1 - z, 0);
  return m * 0.5;
}

DensityState DensityState::from_bloch(double x, double y, double z) {
  return DensityState(bloch_matrix(x, y, z));
}

DensityState DensityState::maximally_mixed(int n) {
  return DensityState(CMatrix::Identity(n, n) / static_cast<double>(n));
}

CVector SpectralFrame::eigenvalues() const {
  CVector d(phases.size());
  for (Eigen::Index m = 0; m < phases.size(); ++m) d(m) = std::polar(1.0, phases(m));
  return d;
}

SpectralFrame spectral_frame(const CMatrix& U, double degeneracy) {
  const Eigen::Index n = U.rows();
  if (U.cols() != n || n == 0) throw DimensionMismatch("spectral frame needs a square matrix");
  Eigen::ComplexSchur<CMatrix> schur(U);
  if (schur.info() != Eigen::Success) throw EigenFailure("Schur decomposition did not converge");
  const CMatrix& T = schur.matrixT();
  const CMatrix& Z = schur.matrixU();

  std::vector<double> raw(n);
  for (Eigen::Index i = 0; i < n; ++i) raw[i] = normalized_phase(T(i, i), degeneracy);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return raw[a] < raw[b]; });

  // Consecutive sorted phases closer than `degeneracy` share an eigenspace.
  std::vector<std::vector<int>> clusters;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || raw[order[k]] - raw[order[k - 1]] >= degeneracy) clusters.emplace_back();
    clusters.back().push_back(order[k]);
  }

  SpectralFrame frame;
  frame.V.resize(n, n);
  frame.phases.resize(n);
  Eigen::Index col = 0;
  for (const auto& cluster : clusters) {
    const Eigen::Index k = static_cast<Eigen::Index>(cluster.size());
    CMatrix basis(n, k);
    if (k == 1) {
      basis.col(0) = Z.col(cluster[0]);
    } else {
      CMatrix Zc(n, k);
      for (Eigen::Index c = 0; c < k; ++c) Zc.col(c) = Z.col(cluster[c]);
      CMatrix P = Zc * Zc.adjoint();
      Eigen::Index found = 0;
      for (Eigen::Index i = 0; i < n && found < k; ++i) {
        CVector w = P.col(i);
        for (int pass = 0; pass < 2; ++pass)
          for (Eigen::Index c = 0; c < found; ++c) w -= basis.col(c) * basis.col(c).dot(w);
        if (w.norm() > 1e-6) basis.col(found++) = w.normalized();
      }
      if (found < k) throw EigenFailure("could not span a degenerate eigenspace");
    }
    Complex mean = 0.0;
    for (Eigen::Index c = 0; c < k; ++c) mean += basis.col(c).dot(U * basis.col(c));
    const double phase = normalized_phase(mean, degeneracy);
    for (Eigen::Index c = 0; c < k; ++c, ++col) {
      frame.V.col(col) = basis.col(c);
      frame.phases(col) = phase;
    }
  }
  fix_column_gauge(frame.V);
  frame.residual = frame_residual(U, frame.V, frame.phases);
  if (!(frame.residual <= tol::kEigenResidual))
    throw EigenFailure("spectral frame residual " + std::to_string(frame.residual) +
                       " exceeds tolerance; is the matrix unitary?");
  return frame;
}

SpectralFrame spectral_frame(const Irrep& D, int g) {
  SpectralFrame f = spectral_frame(D.matrix(g));
  f.element = g;
  return f;
}

FrameSet standard_frames(const Irrep& D) {
  const int K = D.order();
  FrameSet frames(K);
  std::vector<std::string> errors(K);
#pragma omp parallel for schedule(dynamic) if (K > 16)
  for (int g = 0; g < K; ++g) {
    try {
      frames[g] = spectral_frame(D, g);
    } catch (const std::exception& e) {
      errors[g] = e.what();
    }
  }
  for (int g = 0; g < K; ++g)
    if (!errors[g].empty())
      throw EigenFailure("irrep '" + D.label() + "' element " + std::to_string(g + 1) + ": " +
                         errors[g]);
  return frames;
}

SpectralFrame make_frame(const CMatrix& U, const CMatrix& V, const RVector& phases, int element) {
  if (V.rows() != U.rows() || V.cols() != U.cols() || phases.size() != U.rows())
    throw DimensionMismatch("frame shape differs from matrix shape");
  SpectralFrame f;
  f.element = element;
  f.V = V;
  f.phases = phases;
  f.residual = frame_residual(U, V, phases);
  if (!(f.residual <= tol::kEigenResidual))
    throw EigenFailure("supplied frame does not diagonalize the matrix (residual " +
                       std::to_string(f.residual) + ")");
  return f;
}

double validate_frames(const Irrep& D, const FrameSet& frames) {
  if (static_cast<int>(frames.size()) != D.order())
    throw DimensionMismatch("frame count differs from group order");
  double worst = 0.0;
  for (int g = 0; g < D.order(); ++g) {
    const SpectralFrame& f = frames[g];
    if (f.V.rows() != D.dim() || f.V.cols() != D.dim())
      throw DimensionMismatch("frame " + std::to_string(g + 1) + " has the wrong size");
    worst = nan_max(worst, frame_residual(D.matrix(g), f.V, f.phases));
    worst = nan_max(worst, max_abs(f.V.adjoint() * f.V - CMatrix::Identity(D.dim(), D.dim())));
  }
  if (!(worst <= tol::kEigenResidual))
    throw EigenFailure("frames do not diagonalize irrep '" + D.label() + "' (residual " +
                       std::to_string(worst) + ")");
  return worst;
}

SpectralFrame sort_frame(const SpectralFrame& frame) {
  const Eigen::Index n = frame.phases.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return frame.phases(a) < frame.phases(b); });
  SpectralFrame out = frame;
  for (Eigen::Index c = 0; c < n; ++c) {
    out.V.col(c) = frame.V.col(order[c]);
    out.phases(c) = frame.phases(order[c]);
  }
  return out;
}

double Tomogram::stochastic_defect() const {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < vectors.rows(); ++j) {
    worst = nan_max(worst, std::abs(vectors.row(j).sum() - 1.0));
    worst = nan_max(worst, -vectors.row(j).minCoeff<Eigen::PropagateNaN>());
  }
  return worst;
}

CMatrix frame_symbols(const CMatrix& A, const FrameSet& frames) {
  std::vector<CMatrix> V;
  V.reserve(frames.size());
  for (const SpectralFrame& f : frames) V.push_back(f.V);
  return kernels::frame_diagonals_parallel(A, V);
}

Tomogram tomogram(const DensityState& rho, const Irrep& D) {
  return tomogram(rho, D, standard_frames(D));
}

Tomogram tomogram(const DensityState& rho, const Irrep& D, const FrameSet& frames) {
  if (rho.dim() != D.dim())
    throw DimensionMismatch("state dimension " + std::to_string(rho.dim()) +
                            " differs from irrep dimension " + std::to_string(D.dim()));
  if (static_cast<int>(frames.size()) != D.order())
    throw DimensionMismatch("frame count differs from group order");
  return Tomogram{D.group(), D.label(), frame_symbols(rho.matrix(), frames).real()};
}

GroupFunction positive_function(const DensityState& rho, const Irrep& D) {
  return positive_function(rho, D, standard_frames(D));
}

GroupFunction positive_function(const DensityState& rho, const Irrep& D, const FrameSet& frames) {
  Tomogram W = tomogram(rho, D, frames);
  CVector phi(D.order());
  for (int g = 0; g < D.order(); ++g) {
    Complex s = 0.0;
    for (int m = 0; m < D.dim(); ++m) s += std::polar(1.0, frames[g].phases(m)) * W.vectors(g, m);
    phi(g) = s;
  }
  return GroupFunction(D.group(), std::move(phi));
}

GroupFunction trace_function(const CMatrix& rho, const Irrep& D) {
  if (rho.rows() != D.dim() || rho.cols() != D.dim())
    throw DimensionMismatch("matrix dimension differs from irrep dimension");
  CVector phi(D.order());
  for (int g = 0; g < D.order(); ++g) phi(g) = (rho * D.matrix(g)).trace();
  return GroupFunction(D.group(), std::move(phi));
}

double hermitian_function_residual(const GroupFunction& phi) {
  const FiniteGroup& G = *phi.group();
  double worst = 0.0;
  for (int g = 0; g < G.order(); ++g)
    worst = nan_max(worst, std::abs(phi[G.inv(g)] - std::conj(phi[g])));
  return worst;
}

Reconstruction reconstruct(const GroupFunction& phi, const Irrep& D) {
  if (!same_group(phi.group(), D.group()))
    throw GroupMismatch("function and irrep belong to different groups");
  const double scale = static_cast<double>(D.dim()) / D.order();
  CMatrix rho = kernels::weighted_sum_parallel(phi.values().conjugate() * scale, D.matrices());
  return {rho, diagnose_state(rho)};
}

std::vector<ConvexTerm> convex_decompose(const GroupFunction& phi, const IrrepRegistry& registry,
                                         double tolerance) {
  registry.require_complete();
  PositivityCertificate cert = certify_positive(phi);
  if (!cert.positive)
    throw NotPositive("function is not of positive type (min Naimark eigenvalue " +
                      std::to_string(cert.min_eigenvalue) + ")");
  std::vector<ConvexTerm> terms;
  for (const Irrep& D : registry.irreps()) {
    CMatrix block = reconstruct(phi, D).matrix;
    double weight = block.trace().real();
    if (weight <= tolerance) continue;
    ConvexTerm t;
    t.label = D.label();
    t.weight = weight;
    t.rho = block / weight;
    t.phi = trace_function(t.rho, D);
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace gtomo

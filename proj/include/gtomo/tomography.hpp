#pragma once

#include <string>
#include <vector>

#include "gtomo/irrep.hpp"

namespace gtomo {

struct StateDiagnostics {
  double hermiticity_residual = 0.0;  // ||A - A^+||_max
  double trace_residual = 0.0;        // |Tr A - 1|
  double min_eigenvalue = 0.0;        // of (A + A^+)/2

  bool valid(double tolerance = tol::kDefault) const {
    return hermiticity_residual <= tolerance && trace_residual <= tolerance &&
           min_eigenvalue >= -tolerance;
  }
};

StateDiagnostics diagnose_state(const CMatrix& A);

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityState {
 public:
  /// Throws InvalidState when any of the three conditions fails at `tolerance`.
  explicit DensityState(CMatrix matrix, double tolerance = tol::kDefault);

  /// (1/2) [[1+z, x-iy], [x+iy, 1-z]].
  static DensityState from_bloch(double x, double y, double z);
  static DensityState maximally_mixed(int n);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const CMatrix& matrix() const { return matrix_; }

 private:
  CMatrix matrix_;
};

CMatrix bloch_matrix(double x, double y, double z);

/// Unitary eigendecomposition D(g) = V diag(exp(i theta)) V^+.
struct SpectralFrame {
  int element = -1;
  RVector phases;  // in [0, 2pi)
  CMatrix V;
  double residual = 0.0;

  CVector eigenvalues() const;
  int dim() const { return static_cast<int>(V.cols()); }
};

using FrameSet = std::vector<SpectralFrame>;

/// Deterministic frame of a unitary matrix: phases ascending in [0, 2pi),
/// degenerate eigenspaces spanned by projected standard basis vectors, and the
/// first significant entry of every column real positive. The identity gets V = I.
SpectralFrame spectral_frame(const CMatrix& U, double degeneracy = tol::kDegeneratePhase);
SpectralFrame spectral_frame(const Irrep& D, int g);
FrameSet standard_frames(const Irrep& D);

/// Frame from a supplied diagonalizer and phases; throws EigenFailure when
/// V diag(exp(i theta)) V^+ does not reproduce U.
SpectralFrame make_frame(const CMatrix& U, const CMatrix& V, const RVector& phases, int element = -1);
/// Checks that each frame reproduces its matrix; returns the largest residual.
double validate_frames(const Irrep& D, const FrameSet& frames);
/// Reorders columns so the phases ascend.
SpectralFrame sort_frame(const SpectralFrame& frame);

struct Tomogram {
  GroupPtr group;
  std::string irrep;
  RMatrix vectors;  // K x n; row j is W(g_j)

  /// Largest deviation from nonnegativity or unit row sums.
  double stochastic_defect() const;
};

/// Row j holds the diagonal of V_j^+ A V_j for arbitrary A.
CMatrix frame_symbols(const CMatrix& A, const FrameSet& frames);

Tomogram tomogram(const DensityState& rho, const Irrep& D);
Tomogram tomogram(const DensityState& rho, const Irrep& D, const FrameSet& frames);

/// phi(g) = sum_m exp(i theta_m(g)) W_m(g), evaluated through the frames.
GroupFunction positive_function(const DensityState& rho, const Irrep& D);
GroupFunction positive_function(const DensityState& rho, const Irrep& D, const FrameSet& frames);
/// phi(g) = Tr[rho D(g)] evaluated directly.
GroupFunction trace_function(const CMatrix& rho, const Irrep& D);
/// Largest |phi(g^{-1}) - phi(g)^*|.
double hermitian_function_residual(const GroupFunction& phi);

struct Reconstruction {
  CMatrix matrix;
  StateDiagnostics diagnostics;
};

/// (n/K) sum_j phi(g_j)^* D(g_j). Always returns the matrix.
Reconstruction reconstruct(const GroupFunction& phi, const Irrep& D);

struct ConvexTerm {
  std::string label;
  double weight = 0.0;
  GroupFunction phi;  // Tr[rho D(.)]
  CMatrix rho;
};

/// Splits a positive-type function over the irreps of a complete registry.
/// Throws NotPositive when the Naimark certificate fails.
std::vector<ConvexTerm> convex_decompose(const GroupFunction& phi, const IrrepRegistry& registry,
                                         double tolerance = tol::kDefault);

}  // namespace gtomo

#pragma once

#include <optional>
#include <string>

#include "gtomo/naimark.hpp"
#include "gtomo/tomography.hpp"

namespace gtomo {

/// Candidate tomogram: one n-vector per group element.
struct StochasticFamily {
  GroupPtr group;
  std::string irrep;
  RMatrix vectors;  // K x n

  /// Largest deviation from nonnegativity or unit row sums.
  double stochastic_defect() const;
  static StochasticFamily from(const Tomogram& W) { return {W.group, W.irrep, W.vectors}; }
};

/// psi(g_j) = sum_m exp(i theta_m(g_j)) tau_m(g_j).
GroupFunction candidate_function(const StochasticFamily& tau, const FrameSet& frames);

/// R_pm(g_j, g_h) = exp(-i theta_m(g_j)) (V_h^+ D(g_j) V_h)_pp.
CMatrix reproducing_kernel(const Irrep& D, const FrameSet& frames, int j, int h);

/// Diagonal symbols (V_g^+ A V_g)_mm of an arbitrary matrix (real parts).
RMatrix observable_symbols(const CMatrix& A, const FrameSet& frames);

struct CheckResult {
  double residual = 0.0;
  bool passed = false;
};

/// max over (h, p) of |(n/K) sum_j sum_m R_pm(g_j, g_h) tau_m(g_j) - tau_p(g_h)|.
CheckResult check_compatibility(const StochasticFamily& tau, const Irrep& D, const FrameSet& frames,
                                double tolerance = tol::kCompatibility);
/// Compares the operator built from psi with the one built over inverse elements.
CheckResult check_hermiticity(const StochasticFamily& tau, const Irrep& D, const FrameSet& frames,
                              double tolerance = tol::kCompatibility);

struct InverseVerdict {
  bool stochastic = false;
  bool compatible = false;
  bool hermitian = false;
  bool positive = false;
  double stochastic_defect = 0.0;
  double compatibility_residual = 0.0;
  double hermiticity_residual = 0.0;
  PositivityCertificate certificate;
  GroupFunction candidate_psi;
  CMatrix operator_tau;  // (n/K) sum_j psi(g_j)^* D(g_j)
  std::optional<CMatrix> recovered_state;
  double tomogram_residual = 0.0;  // only meaningful with a recovered state
  std::optional<double> off_block_weight;  // harmonic content outside D, if a registry was given

  bool accepted() const { return recovered_state.has_value(); }
};

/// Runs every check without short-circuiting; reconstructs and re-tomographs
/// the state when compatibility, hermiticity and positivity all hold.
InverseVerdict decide(const StochasticFamily& tau, const Irrep& D, const FrameSet& frames,
                      const IrrepRegistry* registry = nullptr,
                      double tolerance = tol::kCompatibility);
InverseVerdict decide(const StochasticFamily& tau, const Irrep& D);

/// Re-expresses a family given in one frame labelling in another. Components
/// are matched by eigenphase; eigenspaces must agree up to column phases.
StochasticFamily relabel_family(const StochasticFamily& tau, const FrameSet& from, const FrameSet& to);

/// Tomogram, w.r.t. D_beta, of the state recovered from tau_alpha.
StochasticFamily transport(const StochasticFamily& tau_alpha, const Irrep& D_alpha,
                           const FrameSet& frames_alpha, const Irrep& D_beta,
                           const FrameSet& frames_beta);

}  // namespace gtomo

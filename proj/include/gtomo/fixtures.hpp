#pragma once

#include "gtomo/inverse_problem.hpp"

namespace gtomo::fixtures {

/// S3 with the multiplication table used throughout the examples.
GroupPtr s3_group();
/// D0 (trivial), D1 (sign), D2 (two-dimensional, lambda = exp(2 pi i / 3)).
IrrepRegistry s3_registry();
GroupPtr z2_group();
IrrepRegistry z2_registry();
/// Characters D0..D(n-1) of Z_n: D_k(g_l) = exp(2 pi i k l / n).
IrrepRegistry zn_registry(int n);
/// Built-in registry by group name: "S3", "Z2" or "Z<n>". Throws on unknown names.
IrrepRegistry builtin_registry(const std::string& name);
bool has_builtin(const std::string& name);

/// Hand-chosen D2 frames: V = I on rotations, reflection frames with columns
/// (-c, 1)/sqrt2 and (c, 1)/sqrt2; phase order (pi, 0) on reflections.
FrameSet s3_reference_frames(const Irrep& D2);

/// tau(g_j) = ((1 + x_j)/2, (1 - x_j)/2).
StochasticFamily s3_family(const GroupPtr& s3, const std::array<double, 6>& x);
/// x_1 = x_2 = x_3 = z, x_4 = -x, x_5 = (x + sqrt3 y)/2, x_6 = (x - sqrt3 y)/2,
/// labelled according to s3_reference_frames.
StochasticFamily s3_bloch_family(const GroupPtr& s3, double x, double y, double z);

/// U(theta, phi, psi) diag(lambda1, -lambda2) U^+ with
/// U = [[c e^{i(phi+psi)/2}, s e^{i(phi-psi)/2}], [-s e^{-i(phi-psi)/2}, c e^{-i(phi+psi)/2}]].
CMatrix two_level_observable(double theta, double phi, double psi, double lambda1, double lambda2);

}  // namespace gtomo::fixtures

#pragma once

#include <cstdint>
#include <functional>

#include "gtomo/naimark.hpp"

namespace gtomo {

/// A function on a compact host group, evaluated on matrices of its
/// defining representation.
using HostFunction = std::function<Complex(const CMatrix&)>;

struct SubgroupPositivityResult {
  PositivityCertificate certificate;
  GroupFunction restricted;   // psi on the embedded subgroup
  CMatrix state_operator;     // (n/K) sum_j psi(g_j)^* D(g_j) on the subgroup images
  double subgroup_residual = 0.0;  // harmonic content outside the embedded irrep
  double host_residual = 0.0;      // |psi(U) - Tr[A U]| at sampled host elements
};

/// Haar-random element of U(n).
CMatrix random_unitary(int n, std::uint64_t seed);

/// Decides positivity of psi on the host group from its restriction to a
/// finite subgroup whose images form an irreducible representation.
/// Throws CompatibilityUnverified when psi is not of the form Tr[A U].
SubgroupPositivityResult finite_subgroup_positivity(const HostFunction& psi,
                                                    const SubgroupEmbedding& embedding,
                                                    std::uint64_t seed = 1, int host_samples = 32,
                                                    double tolerance = tol::kCompatibility);

}  // namespace gtomo

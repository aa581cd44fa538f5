#include "gtomo/subgroup_positivity.hpp"

#include <random>

#include "gtomo/tomography.hpp"

namespace gtomo {

CMatrix random_unitary(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  CMatrix Z(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) Z(r, c) = Complex(normal(rng), normal(rng));
  Eigen::HouseholderQR<CMatrix> qr(Z);
  CMatrix Q = qr.householderQ();
  CMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases of R's diagonal so Q is Haar distributed.
  for (int c = 0; c < n; ++c) {
    Complex d = R(c, c);
    if (std::abs(d) > 0) Q.col(c) *= d / std::abs(d);
  }
  return Q;
}

SubgroupPositivityResult finite_subgroup_positivity(const HostFunction& psi,
                                                    const SubgroupEmbedding& embedding,
                                                    std::uint64_t seed, int host_samples,
                                                    double tolerance) {
  const GroupPtr& G = embedding.subgroup;
  if (!G) throw Error("embedding without a subgroup");
  const double hom = embedding.homomorphism_residual();
  if (!(hom <= tol::kDefault))
    throw Error("embedding images do not respect the group law (residual " + std::to_string(hom) + ")");
  Irrep D(G, embedding.host_label, embedding.images);
  ValidationReport report = validate_irrep(D);
  if (!report.is_representation() || !report.irreducible)
    throw Error("embedded images are not an irreducible unitary representation");

  const int K = G->order();
  CVector values(K);
  for (int j = 0; j < K; ++j) values(j) = psi(embedding.images[j]);

  SubgroupPositivityResult out;
  out.restricted = GroupFunction(G, values);
  out.state_operator = reconstruct(out.restricted, D).matrix;
  // A function compatible with the embedded irrep equals Tr[A D(g)] on the subgroup.
  for (int j = 0; j < K; ++j)
    out.subgroup_residual = nan_max(
        out.subgroup_residual, std::abs(values(j) - (out.state_operator * D.matrix(j)).trace()));
  for (int s = 0; s < host_samples; ++s) {
    CMatrix U = random_unitary(D.dim(), seed + static_cast<std::uint64_t>(s));
    out.host_residual =
        nan_max(out.host_residual, std::abs(psi(U) - (out.state_operator * U).trace()));
  }
  if (!(out.subgroup_residual <= tolerance) || !(out.host_residual <= tolerance))
    throw CompatibilityUnverified("function is not carried by the embedded representation "
                                  "(subgroup residual " + std::to_string(out.subgroup_residual) +
                                  ", host residual " + std::to_string(out.host_residual) + ")");
  out.certificate = certify_positive(out.restricted);
  return out;
}

}  // namespace gtomo

#include "gtomo/irrep.hpp"

#include <cmath>

namespace gtomo {

Irrep::Irrep(GroupPtr group, std::string label, std::vector<CMatrix> matrices)
    : group_(std::move(group)), label_(std::move(label)), matrices_(std::move(matrices)) {
  if (!group_) throw Error("irrep without a group");
  if (static_cast<int>(matrices_.size()) != group_->order())
    throw DimensionMismatch("irrep '" + label_ + "' has " + std::to_string(matrices_.size()) +
                            " matrices for a group of order " + std::to_string(group_->order()));
  dim_ = static_cast<int>(matrices_.front().rows());
  for (std::size_t g = 0; g < matrices_.size(); ++g)
    if (matrices_[g].rows() != dim_ || matrices_[g].cols() != dim_)
      throw DimensionMismatch("irrep '" + label_ + "' matrix " + std::to_string(g + 1) +
                              " is not " + std::to_string(dim_) + "x" + std::to_string(dim_));
}

ValidationReport validate_irrep(const Irrep& D, double tolerance) {
  const FiniteGroup& G = *D.group();
  const int K = G.order(), n = D.dim();
  ValidationReport r;
  r.tolerance = tolerance;
  const CMatrix I = CMatrix::Identity(n, n);
  r.identity_residual = max_abs(D.matrix(0) - I);
  for (int g = 0; g < K; ++g) {
    r.unitarity_residual =
        nan_max(r.unitarity_residual, max_abs(D.matrix(g).adjoint() * D.matrix(g) - I));
    for (int h = 0; h < K; ++h)
      r.homomorphism_residual = nan_max(
          r.homomorphism_residual, max_abs(D.matrix(g) * D.matrix(h) - D.matrix(G.mul(g, h))));
  }
  // sum_j D_rs(g_j)^* D_pq(g_j) = (K/n) delta_rp delta_sq, as an n^2 x n^2 Gram matrix.
  CMatrix E(K, n * n);
  for (int j = 0; j < K; ++j)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) E(j, a * n + b) = D.matrix(j)(a, b);
  CMatrix gram = E.adjoint() * E;
  r.orthogonality_residual =
      max_abs(gram - CMatrix::Identity(n * n, n * n) * (static_cast<double>(K) / n));
  GroupFunction chi = character(D);
  r.character_norm = chi.values().squaredNorm();
  r.irreducible = std::abs(r.character_norm - K) < K * tol::kIrreducibility;
  return r;
}

IrrepRegistry::IrrepRegistry(GroupPtr group, std::vector<Irrep> irreps)
    : group_(std::move(group)), irreps_(std::move(irreps)) {
  for (const Irrep& D : irreps_) {
    if (!same_group(D.group(), group_))
      throw GroupMismatch("irrep '" + D.label() + "' belongs to a different group");
    for (const Irrep& E : irreps_)
      if (&D != &E && D.label() == E.label())
        throw Error("duplicate irrep label '" + D.label() + "'");
  }
}

const Irrep& IrrepRegistry::find(const std::string& label) const {
  for (const Irrep& D : irreps_)
    if (D.label() == label) return D;
  throw IndexOutOfRange("no irrep labelled '" + label + "'");
}

bool IrrepRegistry::contains(const std::string& label) const {
  for (const Irrep& D : irreps_)
    if (D.label() == label) return true;
  return false;
}

int IrrepRegistry::dimension_sum_of_squares() const {
  int s = 0;
  for (const Irrep& D : irreps_) s += D.dim() * D.dim();
  return s;
}

void IrrepRegistry::require_complete() const {
  if (!complete())
    throw IncompleteIrrepSet("registry dimensions square-sum to " +
                             std::to_string(dimension_sum_of_squares()) + ", group order is " +
                             std::to_string(group_ ? group_->order() : 0));
}

GroupFunction character(const Irrep& D) {
  CVector chi(D.order());
  for (int g = 0; g < D.order(); ++g) chi(g) = D.matrix(g).trace();
  return GroupFunction(D.group(), std::move(chi));
}

HarmonicCoefficients harmonic_expand(const GroupFunction& f, const IrrepRegistry& registry) {
  registry.require_complete();
  if (!same_group(f.group(), registry.group()))
    throw GroupMismatch("function and registry belong to different groups");
  const int K = f.size();
  HarmonicCoefficients c;
  for (const Irrep& D : registry.irreps()) {
    const int n = D.dim();
    CMatrix block = CMatrix::Zero(n, n);
    for (int j = 0; j < K; ++j) block += D.matrix(j).conjugate() * f[j];
    c.labels.push_back(D.label());
    c.blocks.push_back(block * (static_cast<double>(n) / K));
  }
  return c;
}

GroupFunction harmonic_synthesize(const HarmonicCoefficients& c, const IrrepRegistry& registry) {
  const int K = registry.group()->order();
  CVector f = CVector::Zero(K);
  for (std::size_t a = 0; a < c.blocks.size(); ++a) {
    const Irrep& D = registry.find(c.labels[a]);
    for (int j = 0; j < K; ++j) f(j) += D.matrix(j).cwiseProduct(c.blocks[a]).sum();
  }
  return GroupFunction(registry.group(), std::move(f));
}

CMatrix lift_operator(const GroupFunction& f, const Irrep& D) {
  if (!same_group(f.group(), D.group()))
    throw GroupMismatch("function and irrep belong to different groups");
  CMatrix A = CMatrix::Zero(D.dim(), D.dim());
  for (int j = 0; j < D.order(); ++j) A += f[j] * D.matrix(j);
  return A;
}

GroupFunction invert_operator(const CMatrix& A, const Irrep& D) {
  const int n = D.dim(), K = D.order();
  if (A.rows() != n || A.cols() != n)
    throw DimensionMismatch("operator is " + std::to_string(A.rows()) + "x" +
                            std::to_string(A.cols()) + ", irrep dimension " + std::to_string(n));
  CVector f(K);
  for (int j = 0; j < K; ++j)
    f(j) = (A * D.matrix(j).adjoint()).trace() * (static_cast<double>(n) / K);
  return GroupFunction(D.group(), std::move(f));
}

CMatrix m_matrix(const IrrepRegistry& registry) {
  registry.require_complete();
  const int K = registry.group()->order();
  CMatrix M(K, K);
  int row = 0;
  for (const Irrep& D : registry.irreps()) {
    const double scale = std::sqrt(static_cast<double>(D.dim()) / K);
    for (int r = 0; r < D.dim(); ++r)
      for (int s = 0; s < D.dim(); ++s, ++row)
        for (int j = 0; j < K; ++j) M(row, j) = scale * D.matrix(j)(r, s);
  }
  return M;
}

std::vector<int> decompose_regular(const IrrepRegistry& registry) {
  const GroupPtr& G = registry.group();
  const int K = G->order();
  GroupFunction chiL = character(regular_representation(G));
  std::vector<int> mult;
  for (const Irrep& D : registry.irreps()) {
    Complex m = inner_product(character(D), chiL) / static_cast<double>(K);
    mult.push_back(static_cast<int>(std::lround(m.real())));
  }
  return mult;
}

Irrep regular_representation(const GroupPtr& group) {
  const int K = group->order();
  std::vector<CMatrix> mats(K, CMatrix::Zero(K, K));
  for (int g = 0; g < K; ++g)
    for (int k = 0; k < K; ++k) mats[g](group->mul(g, k), k) = 1.0;
  return Irrep(group, "regular", std::move(mats));
}

Irrep direct_sum(const Irrep& a, const Irrep& b, const std::string& label) {
  if (!same_group(a.group(), b.group())) throw GroupMismatch("direct sum across groups");
  const int n = a.dim() + b.dim();
  std::vector<CMatrix> mats;
  for (int g = 0; g < a.order(); ++g) {
    CMatrix m = CMatrix::Zero(n, n);
    m.topLeftCorner(a.dim(), a.dim()) = a.matrix(g);
    m.bottomRightCorner(b.dim(), b.dim()) = b.matrix(g);
    mats.push_back(std::move(m));
  }
  return Irrep(a.group(), label.empty() ? a.label() + "+" + b.label() : label, std::move(mats));
}

Irrep conjugate_irrep(const Irrep& D, const std::string& label) {
  std::vector<CMatrix> mats;
  for (const CMatrix& m : D.matrices()) mats.push_back(m.conjugate());
  return Irrep(D.group(), label.empty() ? D.label() + "*" : label, std::move(mats));
}

Irrep conjugated_by(const Irrep& D, const CMatrix& W, const std::string& label) {
  if (W.rows() != D.dim() || W.cols() != D.dim())
    throw DimensionMismatch("conjugating matrix has the wrong size");
  std::vector<CMatrix> mats;
  for (const CMatrix& m : D.matrices()) mats.push_back(W.adjoint() * m * W);
  return Irrep(D.group(), label.empty() ? D.label() + "'" : label, std::move(mats));
}

}  // namespace gtomo

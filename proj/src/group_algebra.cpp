#include "gtomo/group_algebra.hpp"

#include <cmath>

#include "gtomo/irrep.hpp"
#include "gtomo/kernels.hpp"

namespace gtomo {

GroupFunction::GroupFunction(GroupPtr group, CVector values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_) throw Error("group function without a group");
  if (values_.size() != group_->order())
    throw DimensionMismatch("group function has " + std::to_string(values_.size()) +
                            " values for a group of order " + std::to_string(group_->order()));
  if (!values_.allFinite()) throw Error("group function values must be finite");
}

GroupFunction GroupFunction::zero(GroupPtr group) {
  const int K = group->order();
  return GroupFunction(std::move(group), CVector::Zero(K));
}

GroupFunction GroupFunction::constant(GroupPtr group, Complex c) {
  const int K = group->order();
  return GroupFunction(std::move(group), CVector::Constant(K, c));
}

GroupFunction GroupFunction::delta(GroupPtr group, int k) {
  const int K = group->order();
  if (k < 0 || k >= K) throw IndexOutOfRange("delta index outside group");
  CVector v = CVector::Zero(K);
  v(k) = 1.0;
  return GroupFunction(std::move(group), std::move(v));
}

GroupFunction GroupFunction::operator+(const GroupFunction& other) const {
  require_same_group(*this, other);
  return GroupFunction(group_, values_ + other.values_);
}

GroupFunction GroupFunction::operator-(const GroupFunction& other) const {
  require_same_group(*this, other);
  return GroupFunction(group_, values_ - other.values_);
}

GroupFunction GroupFunction::operator*(Complex c) const { return GroupFunction(group_, values_ * c); }

void require_same_group(const GroupFunction& f, const GroupFunction& h) {
  if (!same_group(f.group(), h.group()))
    throw GroupMismatch("functions live on different groups ('" + f.group()->name() + "' vs '" +
                        h.group()->name() + "')");
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& h) {
  require_same_group(f, h);
  return GroupFunction(f.group(), kernels::convolve_parallel(*f.group(), f.values(), h.values()));
}

GroupFunction involution(const GroupFunction& f, InvolutionKind kind) {
  const FiniteGroup& G = *f.group();
  CVector out(G.order());
  for (int g = 0; g < G.order(); ++g) {
    switch (kind) {
      case InvolutionKind::Conjugate:
        out(g) = std::conj(f[g]);
        break;
      case InvolutionKind::Transpose:
        out(g) = f[G.inv(g)];
        break;
      case InvolutionKind::Star:
        out(g) = std::conj(f[G.inv(g)]);
        break;
    }
  }
  return GroupFunction(f.group(), std::move(out));
}

Complex trace(const GroupFunction& f) { return f[0]; }

Complex inner_product(const GroupFunction& f, const GroupFunction& h) {
  require_same_group(f, h);
  return f.values().dot(h.values());  // Eigen's dot conjugates the left operand
}

GroupFunction hadamard(const GroupFunction& f, const GroupFunction& h) {
  require_same_group(f, h);
  return GroupFunction(f.group(), f.values().cwiseProduct(h.values()));
}

double max_distance(const GroupFunction& f, const GroupFunction& h) {
  require_same_group(f, h);
  return (f.values() - h.values()).cwiseAbs().maxCoeff<Eigen::PropagateNaN>();
}

UnitaryElement solve_unitary_element(const std::vector<CMatrix>& targets,
                                     const std::vector<Irrep>& irreps, double tolerance) {
  if (irreps.empty()) throw IncompleteIrrepSet("no irreps supplied");
  if (targets.size() != irreps.size())
    throw DimensionMismatch(std::to_string(targets.size()) + " targets for " +
                            std::to_string(irreps.size()) + " irreps");
  const GroupPtr& group = irreps.front().group();
  const int K = group->order();
  int total = 0;
  for (std::size_t a = 0; a < irreps.size(); ++a) {
    const Irrep& D = irreps[a];
    if (!same_group(D.group(), group)) throw GroupMismatch("irreps belong to different groups");
    const int n = D.dim();
    if (targets[a].rows() != n || targets[a].cols() != n)
      throw DimensionMismatch("target " + std::to_string(a) + " is " +
                              std::to_string(targets[a].rows()) + "x" +
                              std::to_string(targets[a].cols()) + ", irrep '" + D.label() +
                              "' has dimension " + std::to_string(n));
    double defect = max_abs(targets[a].adjoint() * targets[a] - CMatrix::Identity(n, n));
    if (!(defect <= tolerance))
      throw NonUnitaryTarget("target for '" + D.label() + "' is not unitary (defect " +
                             std::to_string(defect) + ")");
    total += n * n;
  }
  if (total != K)
    throw IncompleteIrrepSet("sum of squared dimensions is " + std::to_string(total) +
                             ", group order is " + std::to_string(K));

  CMatrix A(K, K);
  CVector b(K);
  int row = 0;
  for (std::size_t a = 0; a < irreps.size(); ++a) {
    const Irrep& D = irreps[a];
    for (int r = 0; r < D.dim(); ++r)
      for (int s = 0; s < D.dim(); ++s, ++row) {
        for (int j = 0; j < K; ++j) A(row, j) = D.matrix(j)(r, s);
        b(row) = targets[a](r, s);
      }
  }
  Eigen::JacobiSVD<CMatrix> svd(A);
  const RVector& sv = svd.singularValues();
  double cond = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1)
                                      : std::numeric_limits<double>::infinity();
  if (!(cond <= tol::kConditionLimit))
    throw IllConditioned("unitary-element system condition number " + std::to_string(cond));
  CVector f = A.fullPivLu().solve(b);
  return {GroupFunction(group, std::move(f)), cond};
}

StructureConstants::StructureConstants(int n) : n_(n) {
  if (n < 1) throw Error("matrix-unit algebra needs n >= 1");
}

std::optional<int> StructureConstants::product(int j, int k) const {
  const int d = dimension();
  if (j < 1 || j > d || k < 1 || k > d) throw IndexOutOfRange("basis index outside 1..n^2");
  const int a = (j - 1) / n_, b = (j - 1) % n_;
  const int c = (k - 1) / n_, e = (k - 1) % n_;
  if (b != c) return std::nullopt;
  return a * n_ + e + 1;
}

double StructureConstants::gamma(int j, int k, int l) const {
  if (l < 1 || l > dimension()) throw IndexOutOfRange("basis index outside 1..n^2");
  auto p = product(j, k);
  return (p && *p == l) ? 1.0 : 0.0;
}

RMatrix StructureConstants::realization(int j) const {
  const int d = dimension();
  RMatrix L = RMatrix::Zero(d, d);
  for (int k = 1; k <= d; ++k)
    if (auto l = product(j, k)) L(*l - 1, k - 1) = 1.0;
  return L;
}

double StructureConstants::associativity_defect() const {
  const int d = dimension();
  double worst = 0.0;
  for (int j = 1; j <= d; ++j)
    for (int k = 1; k <= d; ++k)
      for (int l = 1; l <= d; ++l)
        for (int r = 1; r <= d; ++r) {
          double lhs = 0.0, rhs = 0.0;
          for (int m = 1; m <= d; ++m) {
            lhs += gamma(j, k, m) * gamma(m, l, r);
            rhs += gamma(k, l, m) * gamma(j, m, r);
          }
          worst = nan_max(worst, std::abs(lhs - rhs));
        }
  return worst;
}

double StructureConstants::hs_norm(const CVector& c) const {
  if (c.size() != dimension()) throw DimensionMismatch("coefficient vector length != n^2");
  // Matrix units are orthonormal under the Hilbert-Schmidt inner product.
  return c.norm();
}

double StructureConstants::hs_norm_rescaled(const CVector& c) const {
  return hs_norm(c) / std::sqrt(static_cast<double>(n_));
}

StructureConstants matrix_unit_algebra(int n) { return StructureConstants(n); }

}  // namespace gtomo

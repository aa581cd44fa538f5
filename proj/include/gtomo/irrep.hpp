#pragma once

#include <string>
#include <vector>

#include "gtomo/group_algebra.hpp"

namespace gtomo {

/// Unitary representation of a finite group given by its K matrices.
/// Construction checks shapes only; validate_irrep() checks the algebra.
class Irrep {
 public:
  Irrep() = default;
  Irrep(GroupPtr group, std::string label, std::vector<CMatrix> matrices);

  const GroupPtr& group() const { return group_; }
  const std::string& label() const { return label_; }
  int dim() const { return dim_; }
  int order() const { return static_cast<int>(matrices_.size()); }
  const CMatrix& matrix(int g) const { return matrices_.at(g); }
  const std::vector<CMatrix>& matrices() const { return matrices_; }

 private:
  GroupPtr group_;
  std::string label_;
  int dim_ = 0;
  std::vector<CMatrix> matrices_;
};

struct ValidationReport {
  double homomorphism_residual = 0.0;
  double unitarity_residual = 0.0;
  double identity_residual = 0.0;
  double orthogonality_residual = 0.0;
  double character_norm = 0.0;  // sum_g |chi(g)|^2
  bool irreducible = false;
  double tolerance = 0.0;

  bool is_representation() const {
    return homomorphism_residual <= tolerance && unitarity_residual <= tolerance &&
           identity_residual <= tolerance;
  }
  bool ok() const { return is_representation() && irreducible && orthogonality_residual <= tolerance; }
};

ValidationReport validate_irrep(const Irrep& D, double tolerance = tol::kDefault);

/// An ordered collection of irreps of one group.
class IrrepRegistry {
 public:
  IrrepRegistry() = default;
  IrrepRegistry(GroupPtr group, std::vector<Irrep> irreps);

  const GroupPtr& group() const { return group_; }
  const std::vector<Irrep>& irreps() const { return irreps_; }
  int size() const { return static_cast<int>(irreps_.size()); }
  const Irrep& at(int a) const { return irreps_.at(a); }
  /// Throws IndexOutOfRange when the label is unknown.
  const Irrep& find(const std::string& label) const;
  bool contains(const std::string& label) const;

  int dimension_sum_of_squares() const;
  bool complete() const { return group_ && dimension_sum_of_squares() == group_->order(); }
  void require_complete() const;

 private:
  GroupPtr group_;
  std::vector<Irrep> irreps_;
};

struct HarmonicCoefficients {
  std::vector<std::string> labels;
  std::vector<CMatrix> blocks;  // c^a_{rs} = (n_a/K) sum_j D^a_{rs}(g_j)^* f(g_j)
};

GroupFunction character(const Irrep& D);
HarmonicCoefficients harmonic_expand(const GroupFunction& f, const IrrepRegistry& registry);
/// f(g_j) = sum_a sum_{rs} c^a_{rs} D^a_{rs}(g_j).
GroupFunction harmonic_synthesize(const HarmonicCoefficients& c, const IrrepRegistry& registry);

/// sum_j f(g_j) D(g_j).
CMatrix lift_operator(const GroupFunction& f, const Irrep& D);
/// f(g) = (n/K) Tr[A D(g)^+].
GroupFunction invert_operator(const CMatrix& A, const Irrep& D);

/// Rows sqrt(n_a/K) D^a_{rs}(.), blocks in registry order, (r,s) row-major.
CMatrix m_matrix(const IrrepRegistry& registry);

/// Multiplicity of each irrep in the left regular representation.
std::vector<int> decompose_regular(const IrrepRegistry& registry);

/// Left regular representation (L(g))_{lk} = [g_l = g g_k].
Irrep regular_representation(const GroupPtr& group);
Irrep direct_sum(const Irrep& a, const Irrep& b, const std::string& label = "");
/// g -> D(g)^*.
Irrep conjugate_irrep(const Irrep& D, const std::string& label = "");
/// g -> W^+ D(g) W.
Irrep conjugated_by(const Irrep& D, const CMatrix& W, const std::string& label = "");

}  // namespace gtomo

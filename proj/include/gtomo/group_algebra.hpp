#pragma once

#include <optional>
#include <vector>

#include "gtomo/finite_group.hpp"

namespace gtomo {

class Irrep;

/// Complex function on a finite group, i.e. an element of the group algebra.
class GroupFunction {
 public:
  GroupFunction() = default;
  GroupFunction(GroupPtr group, CVector values);

  static GroupFunction zero(GroupPtr group);
  static GroupFunction constant(GroupPtr group, Complex c);
  /// Indicator of element k (0-based).
  static GroupFunction delta(GroupPtr group, int k);

  const GroupPtr& group() const { return group_; }
  const CVector& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  Complex operator[](int k) const { return values_(k); }
  Complex& operator[](int k) { return values_(k); }

  GroupFunction operator+(const GroupFunction& other) const;
  GroupFunction operator-(const GroupFunction& other) const;
  GroupFunction operator*(Complex c) const;

 private:
  GroupPtr group_;
  CVector values_;
};

enum class InvolutionKind { Conjugate, Transpose, Star };

void require_same_group(const GroupFunction& f, const GroupFunction& h);

/// (f.h)(g_k) = sum_j f(g_j) h(g_j^{-1} g_k).
GroupFunction convolve(const GroupFunction& f, const GroupFunction& h);
GroupFunction involution(const GroupFunction& f, InvolutionKind kind);
Complex trace(const GroupFunction& f);
/// sum_j f(g_j)^* h(g_j).
Complex inner_product(const GroupFunction& f, const GroupFunction& h);
GroupFunction hadamard(const GroupFunction& f, const GroupFunction& h);
/// Largest |f(g) - h(g)|.
double max_distance(const GroupFunction& f, const GroupFunction& h);

struct UnitaryElement {
  GroupFunction f;
  double condition_number = 0.0;
};

/// Solves sum_j f(g_j) D^a(g_j) = u^a for every irrep a of a complete set.
UnitaryElement solve_unitary_element(const std::vector<CMatrix>& targets,
                                     const std::vector<Irrep>& irreps,
                                     double tolerance = tol::kDefault);

/// Structure constants of the algebra spanned by the n^2 matrix units
/// E_(a,b) = |a><b|. Basis element A_l (1-based) is E_(a,b) with
/// l = (a-1) n + b.
class StructureConstants {
 public:
  explicit StructureConstants(int n);

  int n() const { return n_; }
  int dimension() const { return n_ * n_; }
  /// gamma_{jk}^l for 1-based basis indices.
  double gamma(int j, int k, int l) const;
  /// Index l with A_j A_k = A_l, or nothing when the product vanishes.
  std::optional<int> product(int j, int k) const;
  /// Regular realization (L_j)_{lk} = gamma_{jk}^l.
  RMatrix realization(int j) const;
  /// Largest violation of gamma_{jk}^m gamma_{ml}^r = gamma_{kl}^m gamma_{jm}^r summed over m.
  double associativity_defect() const;

  /// Hilbert-Schmidt norm of sum_l c_l A_l, and the same divided by sqrt(n)
  /// so that the identity has norm 1.
  double hs_norm(const CVector& coefficients) const;
  double hs_norm_rescaled(const CVector& coefficients) const;

 private:
  int n_;
};

StructureConstants matrix_unit_algebra(int n);

}  // namespace gtomo

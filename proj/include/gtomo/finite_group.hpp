#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gtomo/types.hpp"

namespace gtomo {

/// A finite group given by its multiplication table.
///
/// Elements are addressed by 0-based indices internally; element 0 is the
/// identity. Serialized tables (JSON, CLI) use 1-based numbering so that
/// element k here is g_{k+1} there.
///
/// Instances are immutable and are shared through `GroupPtr`.
class FiniteGroup {
 public:
  int order() const { return order_; }
  const std::string& name() const { return name_; }

  int identity() const { return 0; }
  int mul(int i, int k) const { return mul_[index(i, k)]; }
  int inv(int i) const { return inv_[check(i)]; }
  /// g_i^{-1} g_k.
  int left_quotient(int i, int k) const { return left_[index(i, k)]; }

  /// Table rows in 1-based form, as serialized.
  std::vector<std::vector<int>> mul_table_one_based() const;
  std::vector<std::vector<int>> left_table_one_based() const;

  /// Conjugacy classes by orbit scan, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> conjugacy_classes() const;

  bool same_table(const FiniteGroup& other) const { return mul_ == other.mul_; }

 private:
  friend std::shared_ptr<const FiniteGroup> build_group(const std::vector<std::vector<int>>&,
                                                        const std::string&);
  FiniteGroup() = default;

  int check(int i) const {
    if (i < 0 || i >= order_)
      throw IndexOutOfRange("element index " + std::to_string(i + 1) + " outside 1.." +
                            std::to_string(order_));
    return i;
  }
  std::size_t index(int i, int k) const {
    return static_cast<std::size_t>(check(i)) * order_ + check(k);
  }

  int order_ = 0;
  std::string name_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> left_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Validates a 1-based multiplication table and derives inverse and
/// left-quotient tables. Throws NotAGroup naming the first violated axiom.
GroupPtr build_group(const std::vector<std::vector<int>>& mul_table_one_based,
                     const std::string& name);

/// Cyclic group Z_n with g_{k} g_{l} = g_{(k+l) mod n} (0-based).
GroupPtr cyclic_group(int n, const std::string& name = "");

/// 1-based convenience wrapper around FiniteGroup::left_quotient.
int left_quotient(int g_one_based, int h_one_based, const FiniteGroup& group);

bool same_group(const GroupPtr& a, const GroupPtr& b);

/// A finite group mapped into the unitary matrices of some host group
/// representation.
struct SubgroupEmbedding {
  GroupPtr subgroup;
  std::string host_label;
  std::vector<CMatrix> images;  // images[j] represents subgroup element j

  /// Largest ||image(gh) - image(g) image(h)||_max over all pairs.
  double homomorphism_residual() const;
};

}  // namespace gtomo

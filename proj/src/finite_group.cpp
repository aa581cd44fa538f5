#include "gtomo/finite_group.hpp"

#include <algorithm>

namespace gtomo {

namespace {

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

}  // namespace

GroupPtr build_group(const std::vector<std::vector<int>>& table, const std::string& name) {
  const int K = static_cast<int>(table.size());
  if (K == 0) throw NotAGroup("nonempty", {}, "empty table");
  for (int i = 0; i < K; ++i) {
    if (static_cast<int>(table[i].size()) != K)
      throw NotAGroup("square table", {i + 1}, "row " + std::to_string(i + 1) + " has " +
                                                   std::to_string(table[i].size()) +
                                                   " entries, expected " + std::to_string(K));
    for (int k = 0; k < K; ++k)
      if (table[i][k] < 1 || table[i][k] > K)
        throw NotAGroup("closure", {i + 1, k + 1},
                        "entry " + pair_str(i, k) + " = " + std::to_string(table[i][k]) +
                            " outside 1.." + std::to_string(K));
  }

  std::vector<int> mul(static_cast<std::size_t>(K) * K);
  for (int i = 0; i < K; ++i)
    for (int k = 0; k < K; ++k) mul[static_cast<std::size_t>(i) * K + k] = table[i][k] - 1;
  auto R = [&](int i, int k) { return mul[static_cast<std::size_t>(i) * K + k]; };

  // Element 1 must be the identity: first row and first column reproduce indices.
  for (int k = 0; k < K; ++k) {
    if (R(0, k) != k)
      throw NotAGroup("identity", {1, k + 1},
                      "g1 * g" + std::to_string(k + 1) + " = g" + std::to_string(R(0, k) + 1));
    if (R(k, 0) != k)
      throw NotAGroup("identity", {k + 1, 1},
                      "g" + std::to_string(k + 1) + " * g1 = g" + std::to_string(R(k, 0) + 1));
  }

  // Latin square: rows then columns.
  std::vector<int> seen(K);
  for (int i = 0; i < K; ++i) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int k = 0; k < K; ++k) {
      int v = R(i, k);
      if (seen[v] >= 0)
        throw NotAGroup("latin square", {i + 1, seen[v] + 1, k + 1},
                        "row " + std::to_string(i + 1) + " repeats g" + std::to_string(v + 1) +
                            " at columns " + std::to_string(seen[v] + 1) + " and " +
                            std::to_string(k + 1));
      seen[v] = k;
    }
  }
  for (int k = 0; k < K; ++k) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int i = 0; i < K; ++i) {
      int v = R(i, k);
      if (seen[v] >= 0)
        throw NotAGroup("latin square", {seen[v] + 1, i + 1, k + 1},
                        "column " + std::to_string(k + 1) + " repeats g" + std::to_string(v + 1) +
                            " at rows " + std::to_string(seen[v] + 1) + " and " +
                            std::to_string(i + 1));
      seen[v] = i;
    }
  }

  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j)
      for (int k = 0; k < K; ++k)
        if (R(R(i, j), k) != R(i, R(j, k)))
          throw NotAGroup("associativity", {i + 1, j + 1, k + 1},
                          "(g" + std::to_string(i + 1) + " g" + std::to_string(j + 1) + ") g" +
                              std::to_string(k + 1) + " != g" + std::to_string(i + 1) + " (g" +
                              std::to_string(j + 1) + " g" + std::to_string(k + 1) + ")");

  std::vector<int> inv(K, -1);
  for (int i = 0; i < K; ++i) {
    for (int j = 0; j < K; ++j)
      if (R(i, j) == 0) inv[i] = j;
    // The Latin property guarantees a unique right inverse; it must also be a left inverse.
    if (R(inv[i], i) != 0)
      throw NotAGroup("inverse", {i + 1, inv[i] + 1},
                      "right inverse of g" + std::to_string(i + 1) + " is not a left inverse");
  }

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->order_ = K;
  group->name_ = name;
  group->mul_ = std::move(mul);
  group->inv_ = inv;
  group->left_.resize(static_cast<std::size_t>(K) * K);
  for (int i = 0; i < K; ++i)
    for (int k = 0; k < K; ++k)
      group->left_[static_cast<std::size_t>(i) * K + k] =
          group->mul_[static_cast<std::size_t>(inv[i]) * K + k];
  return group;
}

GroupPtr cyclic_group(int n, const std::string& name) {
  if (n < 1) throw Error("cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) table[i][k] = (i + k) % n + 1;
  return build_group(table, name.empty() ? "Z" + std::to_string(n) : name);
}

std::vector<std::vector<int>> FiniteGroup::mul_table_one_based() const {
  std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
  for (int i = 0; i < order_; ++i)
    for (int k = 0; k < order_; ++k) t[i][k] = mul(i, k) + 1;
  return t;
}

std::vector<std::vector<int>> FiniteGroup::left_table_one_based() const {
  std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
  for (int i = 0; i < order_; ++i)
    for (int k = 0; k < order_; ++k) t[i][k] = left_quotient(i, k) + 1;
  return t;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<int> cls(order_, -1);
  std::vector<std::vector<int>> out;
  for (int g = 0; g < order_; ++g) {
    if (cls[g] >= 0) continue;
    std::vector<int> members;
    for (int h = 0; h < order_; ++h) {
      int c = mul(mul(h, g), inv(h));
      if (cls[c] < 0) {
        cls[c] = static_cast<int>(out.size());
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

int left_quotient(int g, int h, const FiniteGroup& group) {
  return group.left_quotient(g - 1, h - 1) + 1;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->order() == b->order() && a->same_table(*b);
}

double SubgroupEmbedding::homomorphism_residual() const {
  const int K = subgroup->order();
  if (static_cast<int>(images.size()) != K)
    throw DimensionMismatch("embedding has " + std::to_string(images.size()) +
                            " images for a group of order " + std::to_string(K));
  double worst = 0.0;
  for (int g = 0; g < K; ++g)
    for (int h = 0; h < K; ++h)
      worst = nan_max(worst, max_abs(images[subgroup->mul(g, h)] - images[g] * images[h]));
  return worst;
}

}  // namespace gtomo

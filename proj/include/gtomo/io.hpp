#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtomo/inverse_problem.hpp"

namespace gtomo::io {

using Json = nlohmann::json;

Json to_json(Complex z);
Json to_json(const CMatrix& m);
Json to_json(const CVector& v);
Json to_json(const RVector& v);
Json to_json(const RMatrix& m);
Json to_json(const FiniteGroup& g);
Json to_json(const Irrep& D);
Json to_json(const GroupFunction& f);
Json to_json(const Tomogram& W);
Json to_json(const StochasticFamily& tau);

/// Accepts [re, im] or a bare number.
Complex complex_from_json(const Json& j);
CMatrix matrix_from_json(const Json& j);
CVector vector_from_json(const Json& j);
RMatrix real_matrix_from_json(const Json& j);
std::vector<double> reals_from_json(const Json& j);

GroupPtr group_from_json(const Json& j);
Irrep irrep_from_json(const Json& j, const GroupPtr& group);
GroupFunction function_from_json(const Json& j, const GroupPtr& group);
StochasticFamily family_from_json(const Json& j, const GroupPtr& group);
/// A bare complex matrix, {"matrix": ...} or {"bloch": [x, y, z]}.
DensityState state_from_json(const Json& j, double tolerance = tol::kDefault);

/// Sorted keys, two-space indent, floats as %.12e, integers verbatim.
std::string dump(const Json& j);
/// Rows are group elements, columns are components.
std::string tomogram_csv(const RMatrix& vectors);

Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

/// Groups and irreps known by name: the built-ins plus any loaded directory.
class Catalog {
 public:
  Catalog();
  /// Loads every *.json in a directory: group documents first, then irreps.
  void load_directory(const std::filesystem::path& dir);
  void add_group(const GroupPtr& group);
  void add_irrep(const Irrep& D);
  GroupPtr group(const std::string& name) const;
  /// Directory irreps for the group if any, otherwise the built-in registry.
  IrrepRegistry registry(const std::string& name) const;
  const Irrep& irrep(const std::string& group, const std::string& label) const;

 private:
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, std::vector<Irrep>> irreps_;
  mutable std::map<std::string, IrrepRegistry> cache_;
};

}  // namespace gtomo::io

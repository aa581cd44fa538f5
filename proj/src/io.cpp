#include "gtomo/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gtomo/fixtures.hpp"

namespace gtomo::io {

namespace {

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

void dump_into(const Json& j, int indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map keeps keys sorted
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        dump_into(it.value(), indent + 2, out);
      }
      out += "\n" + std::string(indent, ' ') + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool scalars = true;
      for (const auto& e : j)
        if (e.is_structured()) scalars = false;
      if (scalars) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump_into(j[i], indent, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump_into(j[i], indent + 2, out);
      }
      out += "\n" + std::string(indent, ' ') + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_real(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DimensionMismatch(what);
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const RVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json to_json(const RMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const FiniteGroup& g) {
  return {{"name", g.name()}, {"order", g.order()}, {"mul_table", g.mul_table_one_based()}};
}

Json to_json(const Irrep& D) {
  Json mats = Json::array();
  for (const CMatrix& m : D.matrices()) mats.push_back(to_json(m));
  return {{"group", D.group()->name()}, {"label", D.label()}, {"dim", D.dim()}, {"matrices", mats}};
}

Json to_json(const GroupFunction& f) {
  return {{"group", f.group()->name()}, {"values", to_json(f.values())}};
}

Json to_json(const Tomogram& W) {
  return {{"group", W.group->name()}, {"irrep", W.irrep}, {"vectors", to_json(W.vectors)}};
}

Json to_json(const StochasticFamily& tau) {
  return {{"group", tau.group->name()}, {"irrep", tau.irrep}, {"vectors", to_json(tau.vectors)}};
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
          "complex number must be [re, im] or a real number");
  return {j[0].get<double>(), j[1].get<double>()};
}

CMatrix matrix_from_json(const Json& j) {
  require(j.is_array() && !j.empty() && j[0].is_array(), "matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    require(j[r].is_array() && static_cast<Eigen::Index>(j[r].size()) == cols, "ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

CVector vector_from_json(const Json& j) {
  require(j.is_array(), "vector must be an array");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

RMatrix real_matrix_from_json(const Json& j) {
  require(j.is_array() && !j.empty() && j[0].is_array(), "table must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  RMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    require(j[r].is_array() && static_cast<Eigen::Index>(j[r].size()) == cols, "ragged table rows");
    for (Eigen::Index c = 0; c < cols; ++c) {
      require(j[r][c].is_number(), "table entries must be numbers");
      m(r, c) = j[r][c].get<double>();
    }
  }
  return m;
}

std::vector<double> reals_from_json(const Json& j) {
  const Json& a = (j.is_object() && j.contains("params")) ? j["params"] : j;
  require(a.is_array(), "expected an array of numbers");
  std::vector<double> out;
  for (const auto& e : a) {
    require(e.is_number(), "expected an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

GroupPtr group_from_json(const Json& j) {
  require(j.is_object() && j.contains("mul_table"), "group document needs a mul_table");
  std::vector<std::vector<int>> table = j["mul_table"].get<std::vector<std::vector<int>>>();
  if (j.contains("order") && j["order"].get<int>() != static_cast<int>(table.size()))
    throw NotAGroup("square", {}, "order field differs from table size");
  return build_group(table, j.value("name", std::string()));
}

Irrep irrep_from_json(const Json& j, const GroupPtr& group) {
  require(j.is_object() && j.contains("matrices"), "irrep document needs matrices");
  std::vector<CMatrix> mats;
  for (const auto& m : j["matrices"]) mats.push_back(matrix_from_json(m));
  if (j.contains("dim") && !mats.empty() && j["dim"].get<int>() != mats.front().rows())
    throw DimensionMismatch("dim field differs from matrix size");
  return Irrep(group, j.value("label", std::string()), std::move(mats));
}

GroupFunction function_from_json(const Json& j, const GroupPtr& group) {
  require(j.is_object() && j.contains("values"), "function document needs values");
  return GroupFunction(group, vector_from_json(j["values"]));
}

StochasticFamily family_from_json(const Json& j, const GroupPtr& group) {
  require(j.is_object() && j.contains("vectors"), "family document needs vectors");
  StochasticFamily tau;
  tau.group = group;
  tau.irrep = j.value("irrep", std::string());
  tau.vectors = real_matrix_from_json(j["vectors"]);
  return tau;
}

DensityState state_from_json(const Json& j, double tolerance) {
  if (j.is_object() && j.contains("bloch")) {
    std::vector<double> b = reals_from_json(j["bloch"]);
    require(b.size() == 3, "bloch vector needs three components");
    return DensityState(bloch_matrix(b[0], b[1], b[2]), tolerance);
  }
  if (j.is_object() && j.contains("matrix")) return DensityState(matrix_from_json(j["matrix"]), tolerance);
  return DensityState(matrix_from_json(j), tolerance);
}

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, 0, out);
  out += "\n";
  return out;
}

std::string tomogram_csv(const RMatrix& vectors) {
  std::string out = "element";
  for (Eigen::Index m = 0; m < vectors.cols(); ++m) out += ",w" + std::to_string(m + 1);
  out += "\n";
  for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
    out += std::to_string(r + 1);
    for (Eigen::Index m = 0; m < vectors.cols(); ++m) out += "," + format_real(vectors(r, m));
    out += "\n";
  }
  return out;
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return Json::parse(in);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

Catalog::Catalog() {
  add_group(fixtures::s3_group());
  add_group(fixtures::z2_group());
}

void Catalog::add_group(const GroupPtr& group) {
  groups_[group->name()] = group;
  cache_.erase(group->name());
}

void Catalog::add_irrep(const Irrep& D) {
  irreps_[D.group()->name()].push_back(D);
  cache_.erase(D.group()->name());
}

void Catalog::load_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Json> irrep_docs;
  for (const auto& p : files) {
    Json j = read_file(p);
    if (j.is_object() && j.contains("mul_table"))
      add_group(group_from_json(j));
    else if (j.is_object() && j.contains("matrices") && j.contains("group"))
      irrep_docs.push_back(std::move(j));
  }
  for (const Json& j : irrep_docs) add_irrep(irrep_from_json(j, group(j["group"].get<std::string>())));
}

GroupPtr Catalog::group(const std::string& name) const {
  auto it = groups_.find(name);
  if (it != groups_.end()) return it->second;
  if (fixtures::has_builtin(name)) return fixtures::builtin_registry(name).group();
  throw IndexOutOfRange("unknown group '" + name + "'");
}

IrrepRegistry Catalog::registry(const std::string& name) const {
  auto hit = cache_.find(name);
  if (hit != cache_.end()) return hit->second;
  IrrepRegistry reg;
  auto it = irreps_.find(name);
  if (it != irreps_.end())
    reg = IrrepRegistry(group(name), it->second);
  else if (fixtures::has_builtin(name))
    reg = fixtures::builtin_registry(name);
  else
    throw IndexOutOfRange("no irreps known for group '" + name + "'");
  return cache_.emplace(name, std::move(reg)).first->second;
}

const Irrep& Catalog::irrep(const std::string& group_name, const std::string& label) const {
  registry(group_name);
  return cache_.at(group_name).find(label);
}

}  // namespace gtomo::io

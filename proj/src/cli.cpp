#include "gtomo/cli.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gtomo/fixtures.hpp"
#include "gtomo/io.hpp"
#include "gtomo/su2.hpp"
#include "gtomo/su3.hpp"

namespace gtomo::cli {

namespace {

using io::Json;

struct Outcome {
  Outcome(Json d, int c = kOk) : doc(std::move(d)), code(c) {}
  Json doc;
  int code;
  std::optional<std::string> csv;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int parse_two_j(const std::string& text) {
  double value = 0.0;
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos)
      value = std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
    else
      value = std::stod(text);
  } catch (const std::exception&) {
    throw UsageError("--j expects a half-integer such as 1/2, 1 or 1.5");
  }
  const double twice = 2.0 * value;
  if (value < 0 || std::abs(twice - std::round(twice)) > 1e-12)
    throw UsageError("--j expects a nonnegative half-integer");
  return static_cast<int>(std::lround(twice));
}

Json state_diagnostics(const StateDiagnostics& d, double tolerance) {
  return {{"hermiticity_residual", d.hermiticity_residual},
          {"trace_residual", d.trace_residual},
          {"min_eigenvalue", d.min_eigenvalue},
          {"valid", d.valid(tolerance)}};
}

Json certificate_json(const PositivityCertificate& c) {
  return {{"eigenvalues", io::to_json(c.eigenvalues)},
          {"min_eigenvalue", c.min_eigenvalue},
          {"threshold", c.threshold},
          {"hermiticity_residual", c.hermiticity_residual},
          {"verdict", c.positive ? "positive" : "indefinite"}};
}

Json grid_json(const QuadratureGrid& grid) {
  Json nodes = Json::array();
  for (const SU2Element& g : grid.nodes) nodes.push_back(Json::array({g.alpha, g.beta, g.gamma}));
  return {{"order", grid.order},
          {"nodes", nodes},
          {"weights", io::to_json(grid.weights)},
          {"certified_two_j", grid.certified_two_j}};
}

class Runner {
 public:
  explicit Runner(const RunConfig& config) : config_(config) {
    if (!config_.registry_path.empty()) catalog_.load_directory(config_.registry_path);
  }

  GroupPtr group_of(const Json& doc, const std::string& fallback = "") const {
    std::string name = (doc.is_object() && doc.contains("group")) ? doc["group"].get<std::string>() : fallback;
    if (name.empty()) throw UsageError("document names no group; pass --group");
    return catalog_.group(name);
  }

  const Irrep& irrep(const GroupPtr& G, const std::string& label) const {
    if (label.empty()) throw UsageError("--irrep is required");
    return catalog_.irrep(G->name(), label);
  }

  FrameSet frames(const Irrep& D, const std::string& kind) const {
    if (kind == "standard") return standard_frames(D);
    if (kind == "reference") return fixtures::s3_reference_frames(D);
    throw UsageError("--frames must be standard or reference");
  }

  Outcome group_validate(const std::string& file) const {
    Json doc = io::read_file(file);
    try {
      GroupPtr G = io::group_from_json(doc);
      std::vector<int> inverses;
      for (int g = 0; g < G->order(); ++g) inverses.push_back(G->inv(g) + 1);
      return {{{"name", G->name()}, {"order", G->order()}, {"valid", true}, {"inverses", inverses}}};
    } catch (const NotAGroup& e) {
      Outcome o{{{"valid", false}, {"axiom", e.axiom()}, {"witness", e.witness()}, {"detail", e.what()}}};
      o.code = kNegative;
      return o;
    }
  }

  Outcome algebra_convolve(const std::string& f_file, const std::string& h_file) const {
    Json fd = io::read_file(f_file), hd = io::read_file(h_file);
    GroupFunction f = io::function_from_json(fd, group_of(fd));
    GroupFunction h = io::function_from_json(hd, group_of(hd));
    return {io::to_json(convolve(f, h))};
  }

  Outcome algebra_unitary_solve(const std::string& targets_file, const std::string& irreps_file) const {
    Json td = io::read_file(targets_file), id = io::read_file(irreps_file);
    const Json& list = id.is_object() && id.contains("irreps") ? id["irreps"] : id;
    if (!list.is_array() || list.empty()) throw UsageError("irreps file must hold an array of irreps");
    std::vector<Irrep> irreps;
    for (const Json& d : list) irreps.push_back(io::irrep_from_json(d, group_of(d)));
    const Json& tl = td.is_object() && td.contains("targets") ? td["targets"] : td;
    if (!tl.is_array()) throw UsageError("targets file must hold an array of matrices");
    std::vector<CMatrix> targets;
    for (const Json& m : tl) targets.push_back(io::matrix_from_json(m));
    UnitaryElement u = solve_unitary_element(targets, irreps, config_.tolerance);
    return {{{"function", io::to_json(u.f)}, {"condition_number", u.condition_number}}};
  }

  Outcome irrep_check(const std::string& file) const {
    Json doc = io::read_file(file);
    Irrep D = io::irrep_from_json(doc, group_of(doc));
    ValidationReport r = validate_irrep(D, config_.tolerance);
    Outcome o{{{"label", D.label()},
               {"dim", D.dim()},
               {"homomorphism_residual", r.homomorphism_residual},
               {"unitarity_residual", r.unitarity_residual},
               {"identity_residual", r.identity_residual},
               {"character_norm", r.character_norm},
               {"irreducible", r.irreducible},
               {"representation", r.is_representation()}}};
    o.code = (r.is_representation() && r.irreducible) ? kOk : kNegative;
    return o;
  }

  Outcome irrep_expand(const std::string& file) const {
    Json doc = io::read_file(file);
    GroupPtr G = group_of(doc);
    GroupFunction f = io::function_from_json(doc, G);
    IrrepRegistry reg = catalog_.registry(G->name());
    HarmonicCoefficients c = harmonic_expand(f, reg);
    Json blocks = Json::array();
    for (std::size_t a = 0; a < c.labels.size(); ++a)
      blocks.push_back({{"label", c.labels[a]}, {"block", io::to_json(c.blocks[a])}});
    double err = max_distance(harmonic_synthesize(c, reg), f);
    return {{{"group", G->name()}, {"coefficients", blocks}, {"synthesis_residual", err}}};
  }

  Outcome tomogram_compute(const std::string& file, const std::string& group_name,
                           const std::string& label, const std::string& frame_kind) const {
    Json doc = io::read_file(file);
    DensityState rho = io::state_from_json(doc, config_.tolerance);
    const Irrep& D = irrep(catalog_.group(group_name), label);
    Tomogram W = tomogram(rho, D, frames(D, frame_kind));
    Outcome o{io::to_json(W)};
    if (config_.format == "csv") o.csv = io::tomogram_csv(W.vectors);
    return o;
  }

  Outcome tomogram_reconstruct(const std::string& file, const std::string& label,
                               const std::string& frame_kind) const {
    Json doc = io::read_file(file);
    GroupPtr G = group_of(doc);
    std::string lab = label.empty() ? doc.value("irrep", std::string()) : label;
    const Irrep& D = irrep(G, lab);
    GroupFunction phi;
    if (doc.contains("vectors"))
      phi = candidate_function(io::family_from_json(doc, G), frames(D, frame_kind));
    else
      phi = io::function_from_json(doc, G);
    Reconstruction r = reconstruct(phi, D);
    return {{{"irrep", D.label()},
             {"matrix", io::to_json(r.matrix)},
             {"diagnostics", state_diagnostics(r.diagnostics, config_.tolerance)}}};
  }

  Outcome tomogram_invert(const std::string& file, const std::string& label,
                          const std::string& frame_kind) const {
    Json doc = io::read_file(file);
    GroupPtr G = group_of(doc);
    std::string lab = label.empty() ? doc.value("irrep", std::string()) : label;
    const Irrep& D = irrep(G, lab);
    StochasticFamily tau = io::family_from_json(doc, G);
    tau.irrep = D.label();
    std::optional<IrrepRegistry> reg;
    try {
      reg = catalog_.registry(G->name());
    } catch (const IndexOutOfRange&) {
    }
    InverseVerdict v = decide(tau, D, frames(D, frame_kind), reg ? &*reg : nullptr, config_.tolerance);
    std::string verdict = v.accepted()    ? "tomogram"
                          : !v.stochastic ? "not-stochastic"
                          : !v.compatible ? "incompatible"
                          : !v.hermitian  ? "non-hermitian"
                          : !v.positive   ? "indefinite"
                                          : "residual";
    Json d{{"verdict", verdict},
           {"stochastic", v.stochastic},
           {"compatible", v.compatible},
           {"hermitian", v.hermitian},
           {"positive", v.positive},
           {"stochastic_defect", v.stochastic_defect},
           {"compatibility_residual", v.compatibility_residual},
           {"hermiticity_residual", v.hermiticity_residual},
           {"certificate", certificate_json(v.certificate)},
           {"candidate", io::to_json(v.candidate_psi)}};
    if (v.off_block_weight) d["off_block_weight"] = *v.off_block_weight;
    if (v.recovered_state) {
      d["recovered_state"] = io::to_json(*v.recovered_state);
      d["tomogram_residual"] = v.tomogram_residual;
    }
    Outcome o{d};
    o.code = v.accepted() ? kOk : kNegative;
    return o;
  }

  Outcome naimark_check(const std::string& file) const {
    Json doc = io::read_file(file);
    GroupFunction phi = io::function_from_json(doc, group_of(doc));
    PositivityCertificate c = certify_positive(phi);
    Outcome o{certificate_json(c)};
    o.code = c.positive ? kOk : kNegative;
    return o;
  }

  Outcome naimark_gns(const std::string& file, const std::string& label) const {
    Json doc = io::read_file(file);
    GroupPtr G = group_of(doc);
    const Irrep& D = irrep(G, label);
    GnsModel m = gns_construct(io::function_from_json(doc, G), D);
    Json blocks = Json::array();
    for (const CMatrix& U : m.U) blocks.push_back(io::to_json(U));
    double err = (m.reproduced() - io::function_from_json(doc, G).values()).cwiseAbs().maxCoeff<Eigen::PropagateNaN>();
    return {{{"rank", m.rank},
             {"dim", m.dim},
             {"U", blocks},
             {"xi", io::to_json(m.xi)},
             {"rho_xi", io::to_json(m.rho_xi)},
             {"reproduction_residual", err},
             {"cyclic_rank", m.cyclic_rank()}}};
  }

  Outcome su2_tomogram_cmd(const std::string& file, const std::string& j_text, int grid_order) const {
    const int two_j = parse_two_j(j_text);
    DensityState rho = io::state_from_json(io::read_file(file), config_.tolerance);
    if (rho.dim() != two_j + 1)
      throw DimensionMismatch("state dimension " + std::to_string(rho.dim()) + " does not match j");
    QuadratureGrid grid = grid_order > 0 ? haar_grid(grid_order) : haar_grid_for(two_j);
    if (grid.certified_two_j < 2 * two_j)
      throw GridOrderInsufficient("grid order " + std::to_string(grid.order) + " certifies 2j <= " +
                                      std::to_string(grid.certified_two_j) + ", need " +
                                      std::to_string(2 * two_j),
                                  grid.certification_residual);
    RMatrix W = su2_tomogram_grid(rho, two_j, grid);
    Outcome o{{{"two_j", two_j}, {"grid", grid_json(grid)}, {"vectors", io::to_json(W)}}};
    if (config_.format == "csv") o.csv = io::tomogram_csv(W);
    return o;
  }

  Outcome su2_reconstruct_cmd(const std::string& file, const std::string& j_text) const {
    Json doc = io::read_file(file);
    if (!doc.contains("grid") || !doc.contains("vectors") || !doc.contains("two_j"))
      throw UsageError("SU(2) tomogram document needs two_j, grid and vectors");
    const int two_j = doc["two_j"].get<int>();
    if (!j_text.empty() && parse_two_j(j_text) != two_j) throw UsageError("--j differs from the document");
    QuadratureGrid grid = haar_grid(doc["grid"]["order"].get<int>());
    RMatrix W = io::real_matrix_from_json(doc["vectors"]);
    if (W.rows() != grid.size() || W.cols() != two_j + 1)
      throw DimensionMismatch("tomogram table does not match the grid");
    CMatrix rho = su2_reconstruct(W, two_j, grid);
    return {{{"two_j", two_j},
             {"matrix", io::to_json(rho)},
             {"diagnostics", state_diagnostics(diagnose_state(rho), config_.tolerance)}}};
  }

  Outcome su3_tomogram_cmd(const std::string& file, const std::string& params_file, bool conjugate) const {
    DensityState rho = io::state_from_json(io::read_file(file), config_.tolerance);
    std::vector<double> p = io::reals_from_json(io::read_file(params_file));
    SU3Tomogram t = su3_tomogram(rho, conjugate ? su3_defining(p).conjugate().eval() : su3_defining(p),
                                 conjugate);
    Json labels = Json::array();
    for (const GZLabel& l : t.labels) labels.push_back(Json::array({l.m1, l.m2, l.m3}));
    return {{{"W", io::to_json(t.W)}, {"labels", labels}, {"conjugate", conjugate}}};
  }

 private:
  const RunConfig& config_;
  io::Catalog catalog_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Group-theoretic quantum tomography toolkit", "gtomo"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--tolerance", config.tolerance, "Absolute tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Seed for randomized checks");
  app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--registry", config.registry_path, "Directory of group and irrep documents");
  app.add_option("-o,--output", config.output_path, "Write the document to a file");

  std::function<Outcome(Runner&)> action;
  std::string a1, a2, label, group_name = "S3", frame_kind = "standard", j_text, params;
  int grid_order = 0;
  bool conjugate = false;

  auto add_sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    return s;
  };

  CLI::App* group = app.add_subcommand("group", "Finite group tables")->require_subcommand(1);
  CLI::App* gv = add_sub(group, "validate", "Check the group axioms of a table");
  gv->add_option("file", a1)->required();
  gv->callback([&] { action = [&](Runner& r) { return r.group_validate(a1); }; });

  CLI::App* algebra = app.add_subcommand("algebra", "Group algebra")->require_subcommand(1);
  CLI::App* ac = add_sub(algebra, "convolve", "Convolution f * h");
  ac->add_option("first", a1)->required();
  ac->add_option("second", a2)->required();
  ac->callback([&] { action = [&](Runner& r) { return r.algebra_convolve(a1, a2); }; });
  CLI::App* au = add_sub(algebra, "unitary-solve", "Group-algebra element with prescribed irrep images");
  au->add_option("targets", a1)->required();
  au->add_option("irreps", a2)->required();
  au->callback([&] { action = [&](Runner& r) { return r.algebra_unitary_solve(a1, a2); }; });

  CLI::App* irrep = app.add_subcommand("irrep", "Irreducible representations")->require_subcommand(1);
  CLI::App* ic = add_sub(irrep, "check", "Validate an irrep");
  ic->add_option("file", a1)->required();
  ic->callback([&] { action = [&](Runner& r) { return r.irrep_check(a1); }; });
  CLI::App* ie = add_sub(irrep, "expand", "Harmonic coefficients of a group function");
  ie->add_option("file", a1)->required();
  ie->callback([&] { action = [&](Runner& r) { return r.irrep_expand(a1); }; });

  CLI::App* tomo = app.add_subcommand("tomogram", "Tomograms of finite groups")->require_subcommand(1);
  auto frames_opt = [&](CLI::App* s) {
    s->add_option("--frames", frame_kind, "Frame labelling")->check(CLI::IsMember({"standard", "reference"}));
  };
  CLI::App* tc = add_sub(tomo, "compute", "Tomogram of a density state");
  tc->add_option("file", a1)->required();
  tc->add_option("--irrep", label)->required();
  tc->add_option("--group", group_name, "Group of the irrep");
  frames_opt(tc);
  tc->callback([&] {
    action = [&](Runner& r) { return r.tomogram_compute(a1, group_name, label, frame_kind); };
  });
  CLI::App* tr = add_sub(tomo, "reconstruct", "Density state from a positive function or tomogram");
  tr->add_option("file", a1)->required();
  tr->add_option("--irrep", label);
  frames_opt(tr);
  tr->callback([&] { action = [&](Runner& r) { return r.tomogram_reconstruct(a1, label, frame_kind); }; });
  CLI::App* ti = add_sub(tomo, "invert", "Decide whether a stochastic family is a tomogram");
  ti->add_option("file", a1)->required();
  ti->add_option("--irrep", label);
  frames_opt(ti);
  ti->callback([&] { action = [&](Runner& r) { return r.tomogram_invert(a1, label, frame_kind); }; });

  CLI::App* naimark = app.add_subcommand("naimark", "Positive-type functions")->require_subcommand(1);
  CLI::App* nc = add_sub(naimark, "check", "Naimark positivity certificate");
  nc->add_option("file", a1)->required();
  nc->callback([&] { action = [&](Runner& r) { return r.naimark_check(a1); }; });
  CLI::App* ng = add_sub(naimark, "gns", "Cyclic representation reproducing the function");
  ng->add_option("file", a1)->required();
  ng->add_option("--irrep", label)->required();
  ng->callback([&] { action = [&](Runner& r) { return r.naimark_gns(a1, label); }; });

  CLI::App* su2 = app.add_subcommand("su2", "SU(2) tomography")->require_subcommand(1);
  CLI::App* s2t = add_sub(su2, "tomogram", "Tomogram on a Haar quadrature grid");
  s2t->add_option("file", a1)->required();
  s2t->add_option("--j", j_text, "Spin, e.g. 1/2")->required();
  s2t->add_option("--grid-order", grid_order, "Quadrature order (default: smallest certified)");
  s2t->callback([&] { action = [&](Runner& r) { return r.su2_tomogram_cmd(a1, j_text, grid_order); }; });
  CLI::App* s2r = add_sub(su2, "reconstruct", "Density state from a grid tomogram");
  s2r->add_option("file", a1)->required();
  s2r->add_option("--j", j_text, "Spin, checked against the document");
  s2r->callback([&] { action = [&](Runner& r) { return r.su2_reconstruct_cmd(a1, j_text); }; });

  CLI::App* su3 = app.add_subcommand("su3", "SU(3) tomography")->require_subcommand(1);
  CLI::App* s3t = add_sub(su3, "tomogram", "Tomogram in the defining representation");
  s3t->add_option("file", a1)->required();
  s3t->add_option("--params", params, "Eight Gell-Mann coordinates")->required();
  s3t->add_flag("--conjugate", conjugate, "Use the conjugate representation");
  s3t->callback([&] { action = [&](Runner& r) { return r.su3_tomogram_cmd(a1, params, conjugate); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    app.exit(e, err, err);
    err << app.help();
    return kUsage;
  }

  try {
    Runner runner(config);
    Outcome o = action(runner);
    std::string text = o.csv ? *o.csv : io::dump(o.doc);
    if (config.output_path.empty())
      out << text;
    else
      io::write_file(config.output_path, text);
    return o.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotAGroup& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const NotPositive& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const SourceNotTomogram& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const IllConditioned& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const EigenFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const GridOrderInsufficient& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const CompatibilityUnverified& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    // Malformed input: unreadable files, bad JSON, shape or range errors.
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace gtomo::cli

// Regenerates the shipped fixture documents.
#include <cmath>
#include <iostream>

#include "gtomo/fixtures.hpp"
#include "gtomo/io.hpp"

using namespace gtomo;
namespace fs = std::filesystem;

namespace {

void put(const fs::path& dir, const std::string& name, const io::Json& doc) {
  io::write_file(dir / name, io::dump(doc));
  std::cout << (dir / name).string() << "\n";
}

// Bloch family along (1,1,1)/sqrt3 with radius r, in the standard labelling.
StochasticFamily diagonal_family(double r, const Irrep& D2) {
  const double c = r / std::sqrt(3.0);
  StochasticFamily tau = fixtures::s3_bloch_family(D2.group(), c, c, c);
  return relabel_family(tau, fixtures::s3_reference_frames(D2), standard_frames(D2));
}

}  // namespace

int main(int argc, char** argv) {
  fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path("fixtures");
  fs::create_directories(dir);

  IrrepRegistry s3 = fixtures::s3_registry();
  IrrepRegistry z2 = fixtures::z2_registry();
  const Irrep& D2 = s3.find("D2");

  put(dir, "s3.json", io::to_json(*s3.group()));
  put(dir, "z2.json", io::to_json(*z2.group()));
  for (const Irrep& D : s3.irreps()) put(dir, "s3_" + D.label() + ".json", io::to_json(D));
  for (const Irrep& D : z2.irreps()) put(dir, "z2_" + D.label() + ".json", io::to_json(D));

  put(dir, "chi2.json", io::to_json(character(D2)));

  put(dir, "bloch_z.json", {{"bloch", {0.0, 0.0, 1.0}}});
  put(dir, "bloch_mixed.json", io::to_json(bloch_matrix(0.3, -0.2, 0.5)));

  for (auto [name, r] : {std::pair{"tau_r0.50.json", 0.5}, {"tau_r1.00.json", 1.0}, {"tau_r1.21.json", 1.1}})
    put(dir, name, io::to_json(diagonal_family(r, D2)));
  StochasticFamily bad = fixtures::s3_family(s3.group(), {0.2, 0.1, 0.2, 0.0, 0.0, 0.0});
  put(dir, "tau_incompatible.json", io::to_json(relabel_family(bad, fixtures::s3_reference_frames(D2),
                                                               standard_frames(D2))));

  io::Json irreps = io::Json::array();
  for (const Irrep& D : z2.irreps()) irreps.push_back(io::to_json(D));
  put(dir, "z2_irreps.json", {{"irreps", irreps}});
  put(dir, "z2_targets.json",
      {{"targets", {io::to_json(CMatrix(CMatrix::Constant(1, 1, std::polar(1.0, 0.7)))),
                    io::to_json(CMatrix(CMatrix::Constant(1, 1, std::polar(1.0, -1.3))))}}});

  CMatrix qutrit(3, 3);
  qutrit << 0.5, Complex(0.1, 0.1), 0.0, Complex(0.1, -0.1), 0.3, Complex(0.0, 0.05), 0.0,
      Complex(0.0, -0.05), 0.2;
  put(dir, "qutrit.json", io::to_json(qutrit));
  put(dir, "su3_params.json", {{"params", {0.3, -0.2, 0.5, 0.1, 0.7, -0.4, 0.2, 0.6}}});
  put(dir, "spin1.json", io::to_json(CMatrix(CMatrix::Identity(3, 3) / 3.0)));
  return 0;
}

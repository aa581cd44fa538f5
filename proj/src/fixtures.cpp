#include "gtomo/fixtures.hpp"

#include <cmath>
#include <mutex>

namespace gtomo::fixtures {

namespace {

const Complex kLambda = std::polar(1.0, 2.0 * kPi / 3.0);

CMatrix m2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

CMatrix scalar(Complex a) { return CMatrix::Constant(1, 1, a); }

}  // namespace

GroupPtr s3_group() {
  static const GroupPtr g = build_group({{1, 2, 3, 4, 5, 6},
                                         {2, 3, 1, 5, 6, 4},
                                         {3, 1, 2, 6, 4, 5},
                                         {4, 6, 5, 1, 3, 2},
                                         {5, 4, 6, 2, 1, 3},
                                         {6, 5, 4, 3, 2, 1}},
                                        "S3");
  return g;
}

IrrepRegistry s3_registry() {
  GroupPtr G = s3_group();
  const Complex l = kLambda, l2 = kLambda * kLambda;
  std::vector<CMatrix> d0, d1;
  for (int g = 0; g < 6; ++g) {
    d0.push_back(scalar(1.0));
    d1.push_back(scalar(g < 3 ? 1.0 : -1.0));
  }
  std::vector<CMatrix> d2{m2(1, 0, 0, 1),
                          m2(l, 0, 0, std::conj(l)),
                          m2(l2, 0, 0, std::conj(l2)),
                          m2(0, 1, 1, 0),
                          m2(0, l, std::conj(l), 0),
                          m2(0, l2, std::conj(l2), 0)};
  return IrrepRegistry(G, {Irrep(G, "D0", d0), Irrep(G, "D1", d1), Irrep(G, "D2", d2)});
}

GroupPtr z2_group() {
  static const GroupPtr g = cyclic_group(2, "Z2");
  return g;
}

IrrepRegistry z2_registry() {
  GroupPtr G = z2_group();
  return IrrepRegistry(G, {Irrep(G, "D0", {scalar(1.0), scalar(1.0)}),
                           Irrep(G, "D1", {scalar(1.0), scalar(-1.0)})});
}

IrrepRegistry zn_registry(int n) {
  GroupPtr G = (n == 2) ? z2_group() : cyclic_group(n);
  std::vector<Irrep> irreps;
  for (int k = 0; k < n; ++k) {
    std::vector<CMatrix> mats;
    for (int l = 0; l < n; ++l) {
      // Exact values at the quarter turns keep small cases free of rounding.
      const int e = (k * l) % n;
      Complex v = (4 * e % n == 0) ? std::pow(kI, 4 * e / n) : std::polar(1.0, 2.0 * kPi * e / n);
      mats.push_back(scalar(v));
    }
    irreps.emplace_back(G, "D" + std::to_string(k), std::move(mats));
  }
  return IrrepRegistry(G, std::move(irreps));
}

bool has_builtin(const std::string& name) {
  if (name == "S3" || name == "Z2") return true;
  if (name.size() > 1 && name[0] == 'Z') {
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    int n = std::stoi(name.substr(1));
    return n >= 1 && n <= 512;
  }
  return false;
}

IrrepRegistry builtin_registry(const std::string& name) {
  if (!has_builtin(name)) throw IndexOutOfRange("no built-in registry named '" + name + "'");
  if (name == "S3") return s3_registry();
  if (name == "Z2") return z2_registry();
  return zn_registry(std::stoi(name.substr(1)));
}

FrameSet s3_reference_frames(const Irrep& D2) {
  if (D2.dim() != 2 || D2.order() != 6) throw DimensionMismatch("reference frames are for S3 D2");
  const double r = 1.0 / std::sqrt(2.0);
  const Complex l = kLambda, l2 = kLambda * kLambda;
  const CMatrix I = CMatrix::Identity(2, 2);
  auto reflection = [&](Complex c) { return m2(-c * r, c * r, r, r); };
  auto phases = [](double a, double b) {
    RVector p(2);
    p << a, b;
    return p;
  };
  const double t = 2.0 * kPi / 3.0;
  FrameSet f;
  f.push_back(make_frame(D2.matrix(0), I, phases(0, 0), 0));
  f.push_back(make_frame(D2.matrix(1), I, phases(t, 2 * t), 1));
  f.push_back(make_frame(D2.matrix(2), I, phases(2 * t, t), 2));
  f.push_back(make_frame(D2.matrix(3), reflection(1.0), phases(kPi, 0), 3));
  f.push_back(make_frame(D2.matrix(4), reflection(l), phases(kPi, 0), 4));
  f.push_back(make_frame(D2.matrix(5), reflection(l2), phases(kPi, 0), 5));
  return f;
}

StochasticFamily s3_family(const GroupPtr& s3, const std::array<double, 6>& x) {
  StochasticFamily tau;
  tau.group = s3;
  tau.irrep = "D2";
  tau.vectors.resize(6, 2);
  for (int j = 0; j < 6; ++j) {
    tau.vectors(j, 0) = 0.5 * (1 + x[j]);
    tau.vectors(j, 1) = 0.5 * (1 - x[j]);
  }
  return tau;
}

StochasticFamily s3_bloch_family(const GroupPtr& s3, double x, double y, double z) {
  const double s = std::sqrt(3.0);
  return s3_family(s3, {z, z, z, -x, 0.5 * (x + s * y), 0.5 * (x - s * y)});
}

CMatrix two_level_observable(double theta, double phi, double psi, double lambda1, double lambda2) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  CMatrix U = m2(c * std::polar(1.0, (phi + psi) / 2), s * std::polar(1.0, (phi - psi) / 2),
                 -s * std::polar(1.0, -(phi - psi) / 2), c * std::polar(1.0, -(phi + psi) / 2));
  CMatrix d = m2(lambda1, 0, 0, -lambda2);
  return U * d * U.adjoint();
}

}  // namespace gtomo::fixtures

#include <doctest.h>

#include "gtomo/fixtures.hpp"
#include "oracles.hpp"

using namespace gtomo;

namespace {

const IrrepRegistry& s3() {
  static const IrrepRegistry reg = fixtures::s3_registry();
  return reg;
}
const Irrep& d2() { return s3().find("D2"); }
const FrameSet& ref() {
  static const FrameSet f = fixtures::s3_reference_frames(d2());
  return f;
}

StochasticFamily family(const std::array<double, 6>& x) { return fixtures::s3_family(s3().group(), x); }

CMatrix haar_unitary(int n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<CMatrix> qr(oracle::ginibre(n, rng));
  return qr.householderQ();
}

}  // namespace

TEST_CASE("candidate function") {
  SUBCASE("uniform family gives chi / n") {
    StochasticFamily tau = family({0, 0, 0, 0, 0, 0});
    GroupFunction psi = candidate_function(tau, ref());
    CHECK(max_distance(psi, character(d2()) * 0.5) < 1e-15);
  }
  SUBCASE("tomogram of a state gives Tr[rho D]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      CMatrix r = oracle::random_density(2, rng);
      StochasticFamily tau = StochasticFamily::from(tomogram(DensityState(r), d2()));
      CHECK(max_distance(candidate_function(tau, standard_frames(d2())), trace_function(r, d2())) < 1e-13);
    }
  }
}

TEST_CASE("compatibility and hermiticity on the S3 family") {
  SUBCASE("Bloch families pass both") {
    StochasticFamily tau = fixtures::s3_bloch_family(s3().group(), 0.3, -0.2, 0.5);
    CHECK(check_compatibility(tau, d2(), ref()).passed);
    CHECK(check_hermiticity(tau, d2(), ref()).passed);
  }
  SUBCASE("x4 + x5 + x6 != 0 is incompatible") {
    CheckResult c = check_compatibility(family({0.2, 0.2, 0.2, 1.0 / 3, 1.0 / 3, 1.0 / 3}), d2(), ref());
    CHECK_FALSE(c.passed);
    CHECK(c.residual > 0.1);
  }
  SUBCASE("x4 + x5 + x6 = 0 with equal rotation entries is compatible") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int trial = 0; trial < 20; ++trial) {
      const double z = u(rng), x5 = u(rng), x6 = u(rng);
      CHECK(check_compatibility(family({z, z, z, -x5 - x6, x5, x6}), d2(), ref()).residual < 1e-14);
    }
  }
  SUBCASE("x1 must match x2 = x3") {
    // Compatibility at the identity forces x1 = (x2 + x3) / 2.
    CHECK_FALSE(check_compatibility(family({0.4, 0.1, 0.1, 0, 0, 0}), d2(), ref()).passed);
  }
  SUBCASE("x2 != x3 is not hermitian") {
    CheckResult h = check_hermiticity(family({0, 0.5, -0.5, 0, 0, 0}), d2(), ref());
    CHECK_FALSE(h.passed);
    CHECK(h.residual > 0.1);
  }
}

TEST_CASE("Naimark spectrum of the candidate function") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int trial = 0; trial < 20; ++trial) {
    const double x = u(rng), y = u(rng), z = u(rng);
    StochasticFamily tau = fixtures::s3_bloch_family(s3().group(), x, y, z);
    const double x5 = tau.vectors(4, 0) * 2 - 1, x6 = tau.vectors(5, 0) * 2 - 1, x2 = tau.vectors(1, 0) * 2 - 1;
    const double q = 3 * x2 * x2 + 4 * x5 * x6 + 4 * x5 * x5 + 4 * x6 * x6;
    CHECK(q == doctest::Approx(3 * (x * x + y * y + z * z)));
    PositivityCertificate c = certify_positive(candidate_function(tau, ref()));
    const double root = 0.5 * std::sqrt(3 * q);
    const double expected[6] = {0, 0, 1.5 - root, 1.5 - root, 1.5 + root, 1.5 + root};
    std::vector<double> ev(c.eigenvalues.data(), c.eigenvalues.data() + 6);
    std::vector<double> want(expected, expected + 6);
    std::sort(want.begin(), want.end());
    for (int k = 0; k < 6; ++k) CHECK(std::abs(ev[k] - want[k]) < 1e-12);
    CHECK(c.positive == (q <= 3));
  }
}

TEST_CASE("decide") {
  SUBCASE("a Bloch family is a tomogram of its state") {
    const double x = 0.3, y = -0.2, z = 0.5;
    InverseVerdict v = decide(fixtures::s3_bloch_family(s3().group(), x, y, z), d2(), ref(), &s3());
    REQUIRE(v.accepted());
    CHECK(max_abs(*v.recovered_state - oracle::bloch(x, y, z)) < 1e-12);
    CHECK(v.tomogram_residual < 1e-12);
    REQUIRE(v.off_block_weight.has_value());
    CHECK(*v.off_block_weight < 1e-12);
  }
  SUBCASE("outside the Bloch ball: compatible, hermitian, not positive") {
    const double s = 1.1 / std::sqrt(3.0);
    InverseVerdict v = decide(fixtures::s3_bloch_family(s3().group(), s, s, s), d2(), ref());
    CHECK(v.stochastic);
    CHECK(v.compatible);
    CHECK(v.hermitian);
    CHECK_FALSE(v.positive);
    CHECK_FALSE(v.accepted());
    CHECK(v.certificate.min_eigenvalue == doctest::Approx(1.5 - 1.5 * 1.1));
  }
  SUBCASE("every check runs even after a failure") {
    InverseVerdict v = decide(family({0, 0.5, -0.5, 1.0 / 3, 1.0 / 3, 1.0 / 3}), d2(), ref());
    CHECK_FALSE(v.compatible);
    CHECK_FALSE(v.hermitian);
    CHECK(v.compatibility_residual > 0.0);
    CHECK(v.hermiticity_residual > 0.0);
    CHECK(v.certificate.eigenvalues.size() == 6);
  }
  SUBCASE("non-stochastic input is never accepted") {
    StochasticFamily tau = family({0, 0, 0, 0, 0, 0});
    tau.vectors(0, 0) = 0.7;
    InverseVerdict v = decide(tau, d2(), ref());
    CHECK_FALSE(v.stochastic);
    CHECK(v.stochastic_defect == doctest::Approx(0.2));
    CHECK_FALSE(v.accepted());
  }
  SUBCASE("shape errors") {
    StochasticFamily tau = family({0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(decide(tau, s3().find("D1")), DimensionMismatch);
    StochasticFamily z2{fixtures::z2_group(), "D1", RMatrix::Constant(2, 2, 0.5)};
    CHECK_THROWS_AS(decide(z2, d2()), GroupMismatch);
    FrameSet short_frames(ref().begin(), ref().begin() + 3);
    CHECK_THROWS_AS(decide(tau, d2(), short_frames), DimensionMismatch);
  }
}

TEST_CASE("observable symbols with a negative eigenvalue") {
  // theta = pi/2, lambda1 - lambda2 = 1: rotations give (1/2, 1/2), reflections
  // give (1 +- (1 + 2 lambda2) cos(phi + alpha)) / 2.
  for (double phi : {0.0, kPi / 12, kPi / 6, 0.25}) {
    for (double l2 : {0.0, 0.05, 0.1, 0.2, 0.4}) {
      CMatrix A = fixtures::two_level_observable(kPi / 2, phi, 0.3, 1.0 + l2, l2);
      RMatrix s = observable_symbols(A, ref());
      for (int g = 0; g < 3; ++g) {
        CHECK(s(g, 0) == doctest::Approx(0.5));
        CHECK(s(g, 1) == doctest::Approx(0.5));
      }
      std::vector<double> got, want;
      double M = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double c = std::cos(phi + 2 * kPi * k / 3);
        M = std::max(M, std::abs(c));
        want.push_back(0.5 * (1 + (1 + 2 * l2) * c));
        want.push_back(0.5 * (1 - (1 + 2 * l2) * c));
        got.push_back(s(3 + k, 0));
        got.push_back(s(3 + k, 1));
      }
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      for (int k = 0; k < 6; ++k) CHECK(got[k] == doctest::Approx(want[k]).epsilon(1e-12));

      StochasticFamily tau{s3().group(), "D2", s};
      InverseVerdict v = decide(tau, d2(), ref());
      CHECK(v.stochastic == ((1 + 2 * l2) * M <= 1 + 1e-12));
      CHECK(v.compatible);
      CHECK(v.hermitian);
      CHECK(v.positive == (l2 == 0.0));
      CHECK(max_abs(v.operator_tau - A) < 1e-12);
    }
  }
}

TEST_CASE("reproducing kernel") {
  std::mt19937_64 rng(14);
  FrameSet frames = standard_frames(d2());
  for (int trial = 0; trial < 5; ++trial) {
    CMatrix G = oracle::ginibre(2, rng);
    CMatrix A = G + G.adjoint();
    RMatrix v = observable_symbols(A, frames);
    for (int h = 0; h < 6; ++h)
      for (int p = 0; p < 2; ++p) {
        Complex acc = 0.0;
        for (int j = 0; j < 6; ++j) {
          CMatrix R = reproducing_kernel(d2(), frames, j, h);
          for (int m = 0; m < 2; ++m) acc += R(p, m) * v(j, m);
        }
        CHECK(std::abs(acc * (2.0 / 6.0) - v(h, p)) < 1e-12);
      }
  }
}

TEST_CASE("relabelling between frame sets") {
  std::mt19937_64 rng(15);
  FrameSet std_frames = standard_frames(d2());
  for (int trial = 0; trial < 10; ++trial) {
    DensityState rho(oracle::random_density(2, rng));
    StochasticFamily a = StochasticFamily::from(tomogram(rho, d2(), ref()));
    StochasticFamily b = relabel_family(a, ref(), std_frames);
    CHECK((relabel_family(b, std_frames, ref()).vectors - a.vectors).cwiseAbs().maxCoeff() == 0.0);
    CHECK((b.vectors - tomogram(rho, d2()).vectors).cwiseAbs().maxCoeff() < 1e-14);
  }
  FrameSet other = std_frames;
  std::mt19937_64 r2(16);
  other[3].V = haar_unitary(2, r2);
  CHECK_THROWS_AS(relabel_family(family({0, 0, 0, 0, 0, 0}), std_frames, other), EigenFailure);
}

TEST_CASE("transport between equivalent irreps") {
  std::mt19937_64 rng(17);
  FrameSet frames = standard_frames(d2());
  SUBCASE("to itself is the identity") {
    CMatrix r = oracle::random_density(2, rng);
    StochasticFamily tau = StochasticFamily::from(tomogram(DensityState(r), d2()));
    StochasticFamily out = transport(tau, d2(), frames, d2(), frames);
    CHECK((out.vectors - tau.vectors).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("to a unitarily conjugated copy") {
    for (int trial = 0; trial < 10; ++trial) {
      CMatrix r = oracle::random_density(2, rng);
      CMatrix W = haar_unitary(2, rng);
      Irrep Db = conjugated_by(d2(), W, "D2w");
      // Frames of W^+ D W are W^+ V with the same phases.
      FrameSet fb = frames;
      for (SpectralFrame& f : fb) f.V = W.adjoint() * f.V;
      StochasticFamily tau = StochasticFamily::from(tomogram(DensityState(r), d2()));
      StochasticFamily out = transport(tau, d2(), frames, Db, fb);
      CMatrix moved = W * r * W.adjoint();
      CHECK((out.vectors - tomogram(DensityState(moved), d2()).vectors).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SUBCASE("a non-tomogram source is rejected") {
    const double s = 1.1 / std::sqrt(3.0);
    StochasticFamily tau = relabel_family(fixtures::s3_bloch_family(s3().group(), s, s, s), ref(), frames);
    CHECK_THROWS_AS(transport(tau, d2(), frames, d2(), frames), SourceNotTomogram);
  }
  SUBCASE("dimension mismatch") {
    StochasticFamily tau = StochasticFamily::from(tomogram(DensityState::maximally_mixed(2), d2()));
    CHECK_THROWS_AS(transport(tau, d2(), frames, s3().at(1), standard_frames(s3().at(1))), DimensionMismatch);
  }
}

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

CMatrix reassemble(const SpectralFrame& f) {
  CVector e(f.dim());
  for (int m = 0; m < f.dim(); ++m) e(m) = std::polar(1.0, f.phases(m));
  return f.V * e.asDiagonal() * f.V.adjoint();
}

}  // namespace

TEST_CASE("density states") {
  CHECK_NOTHROW(DensityState(oracle::bloch(0.3, 0.4, 0.5)));
  CHECK_THROWS_AS(DensityState(oracle::bloch(1.0, 1.0, 0.0)), InvalidState);
  CMatrix non_herm = oracle::bloch(0.1, 0.1, 0.1);
  non_herm(0, 1) += 0.1;
  CHECK_THROWS_AS(DensityState{non_herm}, InvalidState);
  CHECK_THROWS_AS(DensityState(CMatrix::Identity(2, 2)), InvalidState);
  CHECK(max_abs(DensityState::from_bloch(0.1, -0.2, 0.3).matrix() - oracle::bloch(0.1, -0.2, 0.3)) == 0.0);
  CHECK(max_abs(DensityState::maximally_mixed(3).matrix() - CMatrix::Identity(3, 3) / 3.0) == 0.0);
  StateDiagnostics d = diagnose_state(oracle::bloch(0, 0, 1.2));
  CHECK(d.min_eigenvalue == doctest::Approx(-0.1));
}

TEST_CASE("spectral frames") {
  SUBCASE("reflection g4") {
    SpectralFrame f = spectral_frame(d2(), 3);
    CHECK(f.phases(0) == doctest::Approx(0.0));
    CHECK(f.phases(1) == doctest::Approx(kPi));
    const double r = 1 / std::sqrt(2.0);
    CHECK(std::abs(f.V(0, 0) - r) < 1e-14);
    CHECK(std::abs(f.V(1, 0) - r) < 1e-14);
    CHECK(std::abs(f.V(0, 1) - r) < 1e-14);
    CHECK(std::abs(f.V(1, 1) + r) < 1e-14);
  }
  SUBCASE("identity") {
    SpectralFrame f = spectral_frame(d2(), 0);
    CHECK(f.phases.cwiseAbs().maxCoeff() == 0.0);
    CHECK(max_abs(f.V - CMatrix::Identity(2, 2)) == 0.0);
  }
  SUBCASE("every element reassembles") {
    FrameSet frames = standard_frames(d2());
    for (const SpectralFrame& f : frames) {
      CHECK(max_abs(reassemble(f) - d2().matrix(f.element)) < 1e-12);
      CHECK(max_abs(f.V.adjoint() * f.V - CMatrix::Identity(2, 2)) < 1e-12);
      for (int m = 0; m < f.dim(); ++m) {
        CHECK(f.phases(m) >= 0.0);
        CHECK(f.phases(m) < 2 * kPi);
      }
    }
    CHECK(validate_frames(d2(), frames) < 1e-12);
    CHECK(validate_frames(d2(), fixtures::s3_reference_frames(d2())) < 1e-12);
  }
  SUBCASE("random unitaries with degenerate spectra") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::HouseholderQR<CMatrix> qr(oracle::ginibre(4, rng));
      CMatrix W = qr.householderQ();
      Eigen::Vector4cd e(std::polar(1.0, 0.3), std::polar(1.0, 0.3), std::polar(1.0, -2.0), 1.0);
      CMatrix U = W * e.asDiagonal() * W.adjoint();
      SpectralFrame f = spectral_frame(U);
      CHECK(max_abs(reassemble(f) - U) < 1e-12);
      CHECK(f.phases(0) == doctest::Approx(0.0));
      CHECK(f.phases(1) == doctest::Approx(0.3));
      CHECK(f.phases(2) == doctest::Approx(0.3));
      CHECK(f.phases(3) == doctest::Approx(2 * kPi - 2.0));
    }
  }
  SUBCASE("sorting a hand-made frame") {
    SpectralFrame f = sort_frame(fixtures::s3_reference_frames(d2())[3]);
    CHECK(f.phases(0) == doctest::Approx(0.0));
    CHECK(max_abs(reassemble(f) - d2().matrix(3)) < 1e-12);
  }
}

TEST_CASE("tomograms") {
  FrameSet ref = fixtures::s3_reference_frames(d2());
  SUBCASE("Bloch state at g4 and g5") {
    const double x = 0.3, y = -0.4, z = 0.5;
    Tomogram W = tomogram(DensityState(oracle::bloch(x, y, z)), d2(), ref);
    CHECK(W.vectors(3, 0) == doctest::Approx((1 - x) / 2).epsilon(1e-14));
    CHECK(W.vectors(3, 1) == doctest::Approx((1 + x) / 2).epsilon(1e-14));
    const double u = (x + std::sqrt(3.0) * y) / 2;
    CHECK(W.vectors(4, 0) == doctest::Approx((1 + u) / 2).epsilon(1e-14));
    CHECK(W.vectors(4, 1) == doctest::Approx((1 - u) / 2).epsilon(1e-14));
    for (int g = 0; g < 3; ++g) CHECK(W.vectors(g, 0) == doctest::Approx((1 + z) / 2).epsilon(1e-14));
    CHECK(W.stochastic_defect() < 1e-14);
  }
  SUBCASE("maximally mixed state is uniform") {
    Tomogram W = tomogram(DensityState::maximally_mixed(2), d2());
    CHECK((W.vectors.array() - 0.5).abs().maxCoeff() < 1e-15);
  }
  SUBCASE("standard and reference labellings carry the same content") {
    std::mt19937_64 rng(4);
    DensityState rho(oracle::random_density(2, rng));
    StochasticFamily a = StochasticFamily::from(tomogram(rho, d2(), ref));
    StochasticFamily b = StochasticFamily::from(tomogram(rho, d2()));
    CHECK((relabel_family(a, ref, standard_frames(d2())).vectors - b.vectors).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("positive functions") {
  std::mt19937_64 rng(5);
  SUBCASE("identity element gives the trace") {
    DensityState rho(oracle::random_density(2, rng));
    CHECK(std::abs(positive_function(rho, d2())[0] - 1.0) < 1e-15);
  }
  SUBCASE("phase-weighted tomogram equals the trace formula") {
    for (int trial = 0; trial < 20; ++trial) {
      CMatrix r = oracle::random_density(2, rng);
      GroupFunction a = positive_function(DensityState(r), d2());
      GroupFunction b = trace_function(r, d2());
      CHECK(max_distance(a, b) < 1e-12);
      CHECK(hermitian_function_residual(a) < 1e-14);
    }
  }
  SUBCASE("block state over D0 + D1 + D2") {
    const double alpha = 0.2, beta = 0.3, gamma = 0.5, x = 0.3, y = 0.4, z = -0.5;
    Irrep D = direct_sum(direct_sum(s3().at(0), s3().at(1)), d2(), "D");
    CMatrix rho = CMatrix::Zero(4, 4);
    rho(0, 0) = alpha;
    rho(1, 1) = beta;
    rho.block(2, 2, 2, 2) = gamma * oracle::bloch(x, y, z);
    GroupFunction phi = positive_function(DensityState(rho), D);
    const Complex i(0, 1);
    const double s = std::sqrt(3.0);
    CVector expected(6);
    expected << 1.0, alpha + beta - 0.5 * gamma * (1.0 - i * s * z),
        alpha + beta - 0.5 * gamma * (1.0 + i * s * z), alpha - beta + gamma * x,
        alpha - beta - 0.5 * gamma * (x + s * y), alpha - beta - 0.5 * gamma * (x - s * y);
    CHECK((phi.values() - expected).cwiseAbs().maxCoeff() < 1e-14);

    std::vector<ConvexTerm> terms = convex_decompose(phi, s3());
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].weight == doctest::Approx(alpha));
    CHECK(terms[1].weight == doctest::Approx(beta));
    CHECK(terms[2].weight == doctest::Approx(gamma));
    CHECK(max_abs(terms[2].rho - oracle::bloch(x, y, z)) < 1e-12);
  }
}

TEST_CASE("reconstruction") {
  std::mt19937_64 rng(6);
  SUBCASE("round trip") {
    for (int trial = 0; trial < 50; ++trial) {
      CMatrix r = oracle::random_density(2, rng);
      Reconstruction rec = reconstruct(positive_function(DensityState(r), d2()), d2());
      CHECK(max_abs(rec.matrix - r) < 1e-12);
      CHECK(rec.diagnostics.valid());
    }
  }
  SUBCASE("normalized character gives the maximally mixed state") {
    GroupFunction half = character(d2()) * 0.5;
    CHECK(max_abs(reconstruct(half, d2()).matrix - CMatrix::Identity(2, 2) * 0.5) < 1e-15);
  }
  SUBCASE("trivial representation") {
    GroupFunction one = GroupFunction::constant(s3().group(), 1.0);
    CHECK(std::abs(reconstruct(one, s3().at(0)).matrix(0, 0) - 1.0) < 1e-15);
  }
}

TEST_CASE("convex decomposition") {
  std::mt19937_64 rng(7);
  SUBCASE("pure D2 block") {
    GroupFunction phi = positive_function(DensityState(oracle::bloch(0, 0, 1)), d2());
    std::vector<ConvexTerm> terms = convex_decompose(phi, s3());
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].label == "D2");
    CHECK(terms[0].weight == doctest::Approx(1.0));
  }
  SUBCASE("random mixtures") {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      double w[3] = {u(rng), u(rng), u(rng)};
      const double total = w[0] + w[1] + w[2];
      for (double& x : w) x /= total;
      CMatrix r = oracle::random_density(2, rng);
      GroupFunction phi = GroupFunction::constant(s3().group(), w[0]) + character(s3().at(1)) * w[1] +
                          trace_function(r, d2()) * w[2];
      std::vector<ConvexTerm> terms = convex_decompose(phi, s3());
      REQUIRE(terms.size() == 3);
      for (int a = 0; a < 3; ++a) CHECK(std::abs(terms[a].weight - w[a]) < 1e-10);
      CHECK(max_abs(terms[2].rho - r) < 1e-10);
    }
  }
  SUBCASE("non-positive input") {
    CVector v(6);
    v << 1, 0, 0, 1.5, 0, 0;
    CHECK_THROWS_AS(convex_decompose(GroupFunction(s3().group(), v), s3()), NotPositive);
  }
}

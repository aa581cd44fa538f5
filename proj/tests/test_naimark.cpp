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

GroupFunction bloch_function(double x, double y, double z) {
  return positive_function(DensityState(oracle::bloch(x, y, z)), d2());
}

}  // namespace

TEST_CASE("Naimark matrices") {
  SUBCASE("character of D2") {
    RMatrix expected(6, 6);
    expected << 2, -1, -1, 0, 0, 0, -1, 2, -1, 0, 0, 0, -1, -1, 2, 0, 0, 0,  //
        0, 0, 0, 2, -1, -1, 0, 0, 0, -1, 2, -1, 0, 0, 0, -1, -1, 2;
    CHECK(max_abs(naimark_matrix(character(d2())) - expected.cast<Complex>()) < 1e-14);
  }
  SUBCASE("delta and constant") {
    CHECK(max_abs(naimark_matrix(GroupFunction::delta(s3().group(), 0)) - CMatrix::Identity(6, 6)) == 0.0);
    CHECK(max_abs(naimark_matrix(GroupFunction::constant(s3().group(), 1.0)) - CMatrix::Ones(6, 6)) == 0.0);
  }
  SUBCASE("general hermitian family") {
    const double a = 0.1, b = 0.2, r = 0.1, s = 0.0, t = 0.0;
    CVector f(6);
    f << 1.0, Complex(a, b), Complex(a, -b), r, s, t;
    CMatrix N = naimark_matrix(GroupFunction(s3().group(), f));
    const Complex p(a, b), m(a, -b);
    CMatrix expected(6, 6);
    expected << 1, p, m, r, s, t,  //
        m, 1, p, t, r, s,          //
        p, m, 1, s, t, r,          //
        r, t, s, 1, m, p,          //
        s, r, t, p, 1, m,          //
        t, s, r, m, p, 1;
    CHECK(max_abs(N - expected) < 1e-15);
    PositivityCertificate c = certify_matrix(N);
    const double root = std::sqrt(3 * b * b - r * t - s * t - r * s + r * r + s * s + t * t);
    std::vector<double> ev{2 * a + 1 + (r + s + t), 2 * a + 1 - (r + s + t), 1 - a + root,
                           1 - a + root, 1 - a - root, 1 - a - root};
    std::sort(ev.begin(), ev.end());
    for (int k = 0; k < 6; ++k) CHECK(c.eigenvalues(k) == doctest::Approx(ev[k]).epsilon(1e-12));
  }
}

TEST_CASE("positivity certificates") {
  PositivityCertificate c = certify_positive(character(d2()));
  CHECK(c.positive);
  const double expected[6] = {0, 0, 3, 3, 3, 3};
  for (int k = 0; k < 6; ++k) CHECK(std::abs(c.eigenvalues(k) - expected[k]) < 1e-12);

  CVector f(6);
  f << 1, 0, 0, 1.5, 0, 0;
  PositivityCertificate bad = certify_positive(GroupFunction(s3().group(), f));
  CHECK_FALSE(bad.positive);
  CHECK(bad.min_eigenvalue == doctest::Approx(-0.5));

  // Boundary: a pure state has a zero Naimark eigenvalue and must still pass.
  CHECK(certify_positive(bloch_function(0, 0, 1)).positive);
}

TEST_CASE("GNS construction") {
  SUBCASE("rank-2 Bloch state") {
    const double x = 0.2, y = -0.1, z = 0.4;
    GroupFunction phi = bloch_function(x, y, z);
    GnsModel m = gns_construct(phi, d2());
    CHECK(m.rank == 2);
    CHECK(m.dim == 4);
    CHECK((m.reproduced() - phi.values()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(m.cyclic_rank() == 4);
    // rho_xi = U4 [[r-,0,0,sqrt(r- r+)],[0,0,0,0],[0,0,0,0],[sqrt(r- r+),0,0,r+]] U4^+ with U4 = diag(u, u).
    const double r = std::sqrt(x * x + y * y + z * z);
    const double lo = (1 - r) / 2, hi = (1 + r) / 2;
    CMatrix inner = CMatrix::Zero(4, 4);
    inner(0, 0) = lo;
    inner(3, 3) = hi;
    inner(0, 3) = inner(3, 0) = std::sqrt(lo * hi);
    CMatrix U4 = CMatrix::Zero(4, 4);
    U4.block(0, 0, 2, 2) = m.u;
    U4.block(2, 2, 2, 2) = m.u;
    CHECK(max_abs(m.rho_xi - U4 * inner * U4.adjoint()) < 1e-12);
    for (int g = 0; g < 6; ++g) {
      CHECK(max_abs(m.U[g].block(0, 0, 2, 2) - d2().matrix(g)) == 0.0);
      CHECK(max_abs(m.U[g].block(2, 2, 2, 2) - d2().matrix(g)) == 0.0);
    }
  }
  SUBCASE("pure state") {
    CVector psi(2);
    psi << Complex(0.6, 0.0), Complex(0.0, 0.8);
    CMatrix rho = psi * psi.adjoint();
    GroupFunction phi = positive_function(DensityState(rho), d2());
    GnsModel m = gns_construct(phi, d2());
    CHECK(m.rank == 1);
    CHECK(m.dim == 2);
    CHECK(std::abs(std::abs(m.xi.dot(psi)) - 1.0) < 1e-12);
    CHECK((m.reproduced() - phi.values()).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("maximally mixed state") {
    GroupFunction phi = character(d2()) * 0.5;
    GnsModel m = gns_construct(phi, d2());
    CHECK(m.rank == 2);
    CHECK((m.reproduced() - phi.values()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(m.rho_xi.trace() - 1.0) < 1e-12);
    CHECK(std::abs((m.rho_xi * m.rho_xi).trace() - 1.0) < 1e-12);
  }
  SUBCASE("failures") {
    CHECK_THROWS_AS(gns_construct(GroupFunction::zero(s3().group()), d2()), RankZero);
    CVector f(6);
    f << 1, 0, 0, 1.5, 0, 0;
    CHECK_THROWS_AS(gns_construct(GroupFunction(s3().group(), f), d2()), NotPositive);
  }
}

TEST_CASE("seminorm") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> n;
  auto random_function = [&] {
    CVector v(6);
    for (int k = 0; k < 6; ++k) v(k) = Complex(n(rng), n(rng));
    return GroupFunction(s3().group(), v);
  };
  auto direct = [&](const GroupFunction& X, const CMatrix& rho) {
    CMatrix P = CMatrix::Zero(2, 2);
    for (int g = 0; g < 6; ++g) P += X[g] * d2().matrix(g).adjoint();
    return (rho * P * P.adjoint()).trace().real();
  };
  SUBCASE("delta at the identity") {
    CMatrix rho = oracle::random_density(2, rng);
    SeminormValue v = seminorm(GroupFunction::delta(s3().group(), 0), trace_function(rho, d2()), d2());
    CHECK(v.by_convolution == doctest::Approx(1.0));
    CHECK(v.by_columns == doctest::Approx(1.0));
  }
  SUBCASE("random X: both routes agree and are nonnegative") {
    for (int trial = 0; trial < 20; ++trial) {
      CMatrix rho = oracle::random_density(2, rng);
      GroupFunction X = random_function();
      SeminormValue v = seminorm(X, trace_function(rho, d2()), d2());
      CHECK(v.by_convolution >= 0.0);
      CHECK(v.by_convolution == doctest::Approx(v.by_columns).epsilon(1e-12));
      CHECK(v.by_convolution == doctest::Approx(direct(X, rho)).epsilon(1e-12));
    }
  }
  SUBCASE("kernel of a pure state") {
    GroupFunction phi = bloch_function(0, 0, 1);
    GnsModel m = gns_construct(phi, d2());
    REQUIRE(m.kept.size() == 1);
    const int q = m.kept[0];
    // Pick the coefficient matrix C with the kept column zero and solve for X.
    CMatrix C = oracle::ginibre(2, rng);
    C.col(q).setZero();
    CVector x(6);
    for (int g = 0; g < 6; ++g) {
      CMatrix Dp = m.u.adjoint() * d2().matrix(g) * m.u;
      x(g) = (C.cwiseProduct(Dp)).sum() * (2.0 / 6.0);
    }
    SeminormValue v = seminorm(GroupFunction(s3().group(), x), phi, d2());
    CHECK(std::abs(v.by_columns) < 1e-12);
    CHECK(std::abs(v.by_convolution) < 1e-12);
  }
}

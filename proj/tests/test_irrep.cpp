#include <doctest.h>

#include "gtomo/fixtures.hpp"
#include "gtomo/naimark.hpp"
#include "oracles.hpp"

using namespace gtomo;

namespace {

const IrrepRegistry& s3() {
  static const IrrepRegistry reg = fixtures::s3_registry();
  return reg;
}

double block_norm(const HarmonicCoefficients& c, const std::string& label) {
  for (std::size_t a = 0; a < c.labels.size(); ++a)
    if (c.labels[a] == label) return max_abs(c.blocks[a]);
  return -1.0;
}

}  // namespace

TEST_CASE("validation of the S3 irreps") {
  for (const Irrep& D : s3().irreps()) {
    ValidationReport r = validate_irrep(D);
    CHECK(r.homomorphism_residual < 1e-12);
    CHECK(r.unitarity_residual < 1e-12);
    CHECK(r.identity_residual < 1e-12);
    CHECK(r.irreducible);
    CHECK(r.ok());
    CHECK(r.character_norm == doctest::Approx(6.0));
  }
  CHECK(s3().complete());
  CHECK(s3().dimension_sum_of_squares() == 6);
}

TEST_CASE("trivial representation of a cyclic group") {
  IrrepRegistry z5 = fixtures::zn_registry(5);
  CHECK(validate_irrep(z5.at(0)).ok());
  CHECK(z5.complete());
}

TEST_CASE("direct sum is flagged reducible") {
  Irrep D = direct_sum(s3().find("D2"), s3().find("D2"));
  ValidationReport r = validate_irrep(D);
  CHECK(r.is_representation());
  CHECK_FALSE(r.irreducible);
  CHECK(r.character_norm == doctest::Approx(24.0));
}

TEST_CASE("broken matrices are caught") {
  std::vector<CMatrix> mats = s3().find("D2").matrices();
  std::swap(mats[1], mats[2]);
  ValidationReport r = validate_irrep(Irrep(s3().group(), "bad", mats));
  CHECK(r.homomorphism_residual > 0.5);
  CHECK_FALSE(r.ok());
  mats = s3().find("D2").matrices();
  mats[3] *= 1.5;
  CHECK(validate_irrep(Irrep(s3().group(), "bad", mats)).unitarity_residual > 0.5);
  CHECK_THROWS_AS(Irrep(s3().group(), "short", {CMatrix::Identity(2, 2)}), DimensionMismatch);
}

TEST_CASE("registry bookkeeping") {
  CHECK(s3().contains("D1"));
  CHECK_FALSE(s3().contains("D7"));
  CHECK_THROWS(s3().find("D7"));
  CHECK_THROWS(IrrepRegistry(s3().group(), {s3().at(0), s3().at(0)}));
  IrrepRegistry partial(s3().group(), {s3().at(0), s3().at(1)});
  CHECK_FALSE(partial.complete());
  CHECK_THROWS_AS(partial.require_complete(), IncompleteIrrepSet);
}

TEST_CASE("harmonic expansion") {
  SUBCASE("character of D2") {
    HarmonicCoefficients c = harmonic_expand(character(s3().find("D2")), s3());
    CHECK(block_norm(c, "D0") < 1e-14);
    CHECK(block_norm(c, "D1") < 1e-14);
    CHECK(max_abs(c.blocks[2] - CMatrix::Identity(2, 2)) < 1e-14);
  }
  SUBCASE("delta at the identity") {
    HarmonicCoefficients c = harmonic_expand(GroupFunction::delta(s3().group(), 0), s3());
    for (int a = 0; a < 3; ++a) {
      const int n = s3().at(a).dim();
      CHECK(max_abs(c.blocks[a] - CMatrix::Identity(n, n) * (n / 6.0)) < 1e-15);
    }
  }
  SUBCASE("sign representation") {
    CVector v(6);
    v << 1, 1, 1, -1, -1, -1;
    HarmonicCoefficients c = harmonic_expand(GroupFunction(s3().group(), v), s3());
    CHECK(block_norm(c, "D0") < 1e-15);
    CHECK(block_norm(c, "D1") == doctest::Approx(1.0));
    CHECK(block_norm(c, "D2") < 1e-15);
  }
  SUBCASE("synthesis inverts expansion") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> n;
    CVector v(6);
    for (int k = 0; k < 6; ++k) v(k) = Complex(n(rng), n(rng));
    GroupFunction f(s3().group(), v);
    CHECK(max_distance(harmonic_synthesize(harmonic_expand(f, s3()), s3()), f) < 1e-14);
  }
}

TEST_CASE("operator lift and inversion") {
  std::mt19937_64 rng(6);
  const Irrep& D2 = s3().find("D2");
  CMatrix A = oracle::ginibre(2, rng);
  CHECK(max_abs(lift_operator(invert_operator(A, D2), D2) - A) < 1e-14);
  CHECK_THROWS_AS(invert_operator(CMatrix::Identity(3, 3), D2), DimensionMismatch);
}

TEST_CASE("M matrix") {
  CMatrix M = m_matrix(s3());
  const double r6 = 1 / std::sqrt(6.0), r3 = 1 / std::sqrt(3.0);
  const Complex l = std::polar(1.0, 2 * kPi / 3), l2 = l * l;
  CMatrix expected(6, 6);
  expected << r6, r6, r6, r6, r6, r6,                      //
      r6, r6, r6, -r6, -r6, -r6,                           //
      r3, l * r3, l2 * r3, 0, 0, 0,                        //
      0, 0, 0, r3, l * r3, l2 * r3,                        //
      0, 0, 0, r3, std::conj(l) * r3, std::conj(l2) * r3,  //
      r3, std::conj(l) * r3, std::conj(l2) * r3, 0, 0, 0;
  CHECK(max_abs(M - expected) < 1e-15);
  CHECK(max_abs(M * M.adjoint() - CMatrix::Identity(6, 6)) < 1e-12);
  // With rows indexed by matrix elements, the Naimark matrix is diagonalized by M N M^+.
  CMatrix N = naimark_matrix(character(s3().find("D2")));
  CMatrix d = M * N * M.adjoint();
  CMatrix diag = CMatrix::Zero(6, 6);
  diag.diagonal() << 0, 0, 3, 3, 3, 3;
  CHECK(max_abs(d - diag) < 1e-12);
}

TEST_CASE("regular representation") {
  Irrep L = regular_representation(s3().group());
  CHECK(validate_irrep(L).is_representation());
  GroupFunction chi = character(L);
  CHECK(std::abs(chi[0] - 6.0) < 1e-15);
  for (int g = 1; g < 6; ++g) CHECK(std::abs(chi[g]) < 1e-15);
  CHECK(decompose_regular(s3()) == std::vector<int>{1, 1, 2});
}

TEST_CASE("conjugation") {
  std::mt19937_64 rng(7);
  Eigen::HouseholderQR<CMatrix> qr(oracle::ginibre(2, rng));
  CMatrix W = qr.householderQ();
  Irrep D = conjugated_by(s3().find("D2"), W);
  CHECK(validate_irrep(D).ok());
  GroupFunction a = character(D), b = character(s3().find("D2"));
  CHECK(max_distance(a, b) < 1e-14);
  Irrep C = conjugate_irrep(s3().find("D2"));
  CHECK(validate_irrep(C).ok());
}

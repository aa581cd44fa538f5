#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gtomo {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

// Library-wide numerical thresholds.
namespace tol {
inline constexpr double kDefault = 1e-9;          // matrix/vector comparisons, state validation
inline constexpr double kPsdRelative = 1e-9;      // eigenvalue >= -kPsdRelative * max(1, ||N||_2)
inline constexpr double kDegeneratePhase = 1e-8;  // eigenphases closer than this share an eigenspace
inline constexpr double kEigenResidual = 1e-8;    // ||V d V^+ - D(g)|| limit for spectral frames
inline constexpr double kGnsRank = 1e-10;         // state eigenvalues above this count toward rank
inline constexpr double kCompatibility = 1e-8;    // stochastic-family compatibility residual
inline constexpr double kCyclicity = 1e-8;        // relative singular-value cutoff for cyclic rank
inline constexpr double kConditionLimit = 1e12;   // unitary-element system conditioning
inline constexpr double kIrreducibility = 1e-9;   // |<chi,chi> - K| < K * this
inline constexpr double kGridCertification = 1e-9;
}  // namespace tol

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAGroup : public Error {
 public:
  NotAGroup(std::string axiom, std::vector<int> witness, const std::string& detail)
      : Error("not a group: " + axiom + " violated (" + detail + ")"),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}
  const std::string& axiom() const { return axiom_; }
  // 1-based element indices exhibiting the violation.
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::vector<int> witness_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};
class GroupMismatch : public Error {
 public:
  using Error::Error;
};
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};
class NonUnitaryTarget : public Error {
 public:
  using Error::Error;
};
class IncompleteIrrepSet : public Error {
 public:
  using Error::Error;
};
class IllConditioned : public Error {
 public:
  using Error::Error;
};
class EigenFailure : public Error {
 public:
  using Error::Error;
};
class InvalidState : public Error {
 public:
  using Error::Error;
};
class NotPositive : public Error {
 public:
  using Error::Error;
};
class RankZero : public Error {
 public:
  using Error::Error;
};
class SourceNotTomogram : public Error {
 public:
  using Error::Error;
};
class CompatibilityUnverified : public Error {
 public:
  using Error::Error;
};
class SpinTooLarge : public Error {
 public:
  using Error::Error;
};
class GridOrderInsufficient : public Error {
 public:
  GridOrderInsufficient(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

inline double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().template maxCoeff<Eigen::PropagateNaN>();
}
/// max that returns NaN when either argument is NaN.
inline double nan_max(double a, double b) { return (a != a || b != b) ? a + b : (a < b ? b : a); }

}  // namespace gtomo

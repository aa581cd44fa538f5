#include "gtomo/su2.hpp"

#include <array>
#include <cmath>

#include <boost/math/special_functions/legendre.hpp>

#include "gtomo/kernels.hpp"
#include "gtomo/three_j.hpp"

namespace gtomo {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kFourPi = 4.0 * kPi;
constexpr double kPoleThreshold = 1e-10;

void require_wigner_spin(int two_j) {
  if (two_j < 0) throw Error("spin must be nonnegative");
  if (two_j > kMaxWignerTwoJ)
    throw SpinTooLarge("2j = " + std::to_string(two_j) + " exceeds " +
                       std::to_string(kMaxWignerTwoJ));
}

void require_state_spin(int two_j) {
  if (two_j < 0) throw Error("spin must be nonnegative");
  if (two_j > kMaxStateTwoJ)
    throw SpinTooLarge("j = " + std::to_string(two_j / 2.0) + " exceeds j_max = " +
                       std::to_string(kMaxStateTwoJ / 2));
}

struct JyEigen {
  CMatrix vectors;
  RVector values;
};

// Eigendecompositions of J_y for every supported spin, built once.
const std::array<JyEigen, kMaxWignerTwoJ + 1>& jy_table() {
  static const auto table = [] {
    std::array<JyEigen, kMaxWignerTwoJ + 1> t;
    for (int two_j = 0; two_j <= kMaxWignerTwoJ; ++two_j) {
      const int n = two_j + 1;
      const double j = two_j / 2.0;
      CMatrix jp = CMatrix::Zero(n, n);
      for (int k = 1; k < n; ++k) {
        const double m = j - k;
        jp(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
      }
      CMatrix jy = (jp - jp.adjoint()) / Complex(0.0, 2.0);
      Eigen::SelfAdjointEigenSolver<CMatrix> es(jy);
      t[two_j] = {es.eigenvectors(), es.eigenvalues()};
    }
    return t;
  }();
  return table;
}

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0) r += period;
  if (r >= period) r -= period;
  return r;
}

}  // namespace

RVector spin_projections(int two_j) {
  RVector m(two_j + 1);
  for (int k = 0; k <= two_j; ++k) m(k) = two_j / 2.0 - k;
  return m;
}

RMatrix wigner_small_d(int two_j, double beta) {
  require_wigner_spin(two_j);
  const JyEigen& e = jy_table()[two_j];
  CVector phases(e.values.size());
  for (Eigen::Index i = 0; i < e.values.size(); ++i) phases(i) = std::polar(1.0, -beta * e.values(i));
  return (e.vectors * phases.asDiagonal() * e.vectors.adjoint()).real();
}

CMatrix wigner_D(int two_j, const SU2Element& g) {
  RMatrix d = wigner_small_d(two_j, g.beta);
  RVector m = spin_projections(two_j);
  const int n = two_j + 1;
  CMatrix D(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      D(r, c) = std::polar(d(r, c), -g.alpha * m(r) - g.gamma * m(c));
  return D;
}

CMatrix su2_matrix(const SU2Element& g) { return wigner_D(1, g); }

SU2Element su2_from_matrix(const CMatrix& U) {
  if (U.rows() != 2 || U.cols() != 2) throw DimensionMismatch("SU(2) element must be 2x2");
  const double c = std::abs(U(0, 0)), s = std::abs(U(1, 0));
  const double beta = 2.0 * std::atan2(s, c);
  double alpha = 0.0, gamma = 0.0;
  if (s < kPoleThreshold) {
    gamma = -2.0 * std::arg(U(0, 0));
  } else if (c < kPoleThreshold) {
    gamma = -2.0 * std::arg(U(1, 0));
  } else {
    const double a00 = std::arg(U(0, 0)), a10 = std::arg(U(1, 0));
    alpha = a10 - a00;
    gamma = -a00 - a10;
  }
  // (alpha + 2pi, gamma + 2pi) and gamma + 4pi give the same matrix.
  const double shift = std::floor(alpha / kTwoPi) * kTwoPi;
  SU2Element g;
  g.alpha = wrap(alpha - shift, kTwoPi);
  g.beta = std::min(std::max(beta, 0.0), kPi);
  g.gamma = wrap(gamma - shift, kFourPi);
  return g;
}

SU2Element su2_normalize(double alpha, double beta, double gamma) {
  return su2_from_matrix(su2_matrix(SU2Element{alpha, beta, gamma}));
}

SU2Element su2_compose(const SU2Element& a, const SU2Element& b) {
  return su2_from_matrix(su2_matrix(a) * su2_matrix(b));
}

SU2Element su2_inverse(const SU2Element& g) {
  return su2_from_matrix(su2_matrix(g).adjoint());
}

QuadratureGrid haar_grid(int order, double tolerance) {
  if (order < 1) throw Error("grid order must be positive");
  QuadratureGrid grid;
  grid.order = order;

  const int na = 2 * order, ng = 4 * order, nb = order;
  grid.alphas.resize(na);
  grid.alpha_weights = RVector::Constant(na, 1.0 / na);
  for (int a = 0; a < na; ++a) grid.alphas(a) = kTwoPi * a / na;
  grid.gammas.resize(ng);
  grid.gamma_weights = RVector::Constant(ng, 1.0 / ng);
  for (int c = 0; c < ng; ++c) grid.gammas(c) = kFourPi * c / ng;

  // Gauss-Legendre in x = cos(beta); the half-weight normalizes dx over [-1,1].
  grid.betas.resize(nb);
  grid.beta_weights.resize(nb);
  std::vector<double> zeros = boost::math::legendre_p_zeros<double>(nb);
  std::vector<double> xs;
  for (double z : zeros) {
    xs.push_back(z);
    if (z > 0) xs.push_back(-z);
  }
  std::sort(xs.begin(), xs.end());
  for (int b = 0; b < nb; ++b) {
    const double x = xs[b];
    const double dp = boost::math::legendre_p_prime(nb, x);
    grid.betas(b) = std::acos(x);
    grid.beta_weights(b) = 0.5 * 2.0 / ((1.0 - x * x) * dp * dp);
  }

  grid.nodes.reserve(static_cast<std::size_t>(na) * nb * ng);
  grid.weights.resize(static_cast<Eigen::Index>(na) * nb * ng);
  Eigen::Index i = 0;
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      for (int c = 0; c < ng; ++c, ++i) {
        grid.nodes.push_back({grid.alphas(a), grid.betas(b), grid.gammas(c)});
        grid.weights(i) = grid.alpha_weights(a) * grid.beta_weights(b) * grid.gamma_weights(c);
      }

  // Certify sum_g w D^j_rs(g)^* D^j'_pq(g) = delta/(2j+1), factorized per Euler angle.
  auto circle_sum = [](const RVector& angles, const RVector& w, double freq) {
    Complex s = 0.0;
    for (Eigen::Index k = 0; k < angles.size(); ++k) s += w(k) * std::polar(1.0, freq * angles(k));
    return s;
  };
  std::vector<std::vector<RMatrix>> dtab(kMaxWignerTwoJ + 1);
  for (int tj = 0; tj <= kMaxWignerTwoJ; ++tj)
    for (int b = 0; b < nb; ++b) dtab[tj].push_back(wigner_small_d(tj, grid.betas(b)));

  double accepted_residual = 0.0;
  for (int top = 0; top <= kMaxWignerTwoJ; ++top) {
    double worst = 0.0;
    for (int tj = 0; tj <= top; ++tj)
      for (int tk = 0; tk <= top; ++tk) {
        if (tj != top && tk != top) continue;  // smaller pairs were checked already
        RVector mj = spin_projections(tj), mk = spin_projections(tk);
        CMatrix asum(tj + 1, tk + 1), gsum(tj + 1, tk + 1);
        for (int r = 0; r <= tj; ++r)
          for (int p = 0; p <= tk; ++p) {
            asum(r, p) = circle_sum(grid.alphas, grid.alpha_weights, mj(r) - mk(p));
            gsum(r, p) = circle_sum(grid.gammas, grid.gamma_weights, mj(r) - mk(p));
          }
        for (int r = 0; r <= tj; ++r)
          for (int p = 0; p <= tk; ++p) {
            const Complex as = asum(r, p);
            for (int s = 0; s <= tj; ++s)
              for (int q = 0; q <= tk; ++q) {
                const Complex gs = gsum(s, q);
                const bool diagonal = tj == tk && r == p && s == q;
                const double expected = diagonal ? 1.0 / (tj + 1) : 0.0;
                if (std::abs(as * gs) < 1e-14 && !diagonal) continue;
                double bs = 0.0;
                for (int b = 0; b < nb; ++b)
                  bs += grid.beta_weights(b) * dtab[tj][b](r, s) * dtab[tk][b](p, q);
                worst = nan_max(worst, std::abs(as * bs * gs - expected));
              }
          }
      }
    if (!(worst <= tolerance)) {
      grid.certification_residual = worst;
      break;
    }
    grid.certified_two_j = top;
    accepted_residual = nan_max(accepted_residual, worst);
    grid.certification_residual = accepted_residual;
  }
  return grid;
}

QuadratureGrid haar_grid_for(int two_j, double tolerance) {
  require_state_spin(two_j);
  const int needed = 2 * two_j;
  double last = 0.0;
  for (int order = 1; order <= 64; ++order) {
    QuadratureGrid g = haar_grid(order, tolerance);
    if (g.certified_two_j >= needed) return g;
    last = g.certification_residual;
  }
  throw GridOrderInsufficient("no grid up to order 64 certifies J = " + std::to_string(needed / 2),
                              last);
}

std::vector<CMatrix> wigner_table(int two_j, const QuadratureGrid& grid) {
  require_wigner_spin(two_j);
  std::vector<CMatrix> table(grid.nodes.size());
  const int count = grid.size();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < count; ++i) table[i] = wigner_D(two_j, grid.nodes[i]);
  return table;
}

RVector su2_tomogram(const DensityState& rho, int two_j, const SU2Element& g) {
  require_state_spin(two_j);
  if (rho.dim() != two_j + 1) throw DimensionMismatch("state dimension differs from 2j+1");
  CMatrix D = wigner_D(two_j, g);
  return (D.adjoint() * rho.matrix() * D).diagonal().real();
}

RMatrix su2_tomogram_grid(const DensityState& rho, int two_j, const QuadratureGrid& grid) {
  require_state_spin(two_j);
  if (rho.dim() != two_j + 1) throw DimensionMismatch("state dimension differs from 2j+1");
  return kernels::frame_diagonals_parallel(rho.matrix(), wigner_table(two_j, grid)).real();
}

CMatrix su2_reconstruct(const RMatrix& W, int two_j, const QuadratureGrid& grid) {
  require_state_spin(two_j);
  const int n = two_j + 1;
  if (W.rows() != grid.size() || W.cols() != n)
    throw DimensionMismatch("tomogram samples do not match the grid and spin");
  if (grid.certified_two_j < 2 * two_j)
    throw GridOrderInsufficient("grid of order " + std::to_string(grid.order) +
                                    " certifies 2J <= " + std::to_string(grid.certified_two_j) +
                                    ", reconstruction needs 2J = " + std::to_string(2 * two_j),
                                grid.certification_residual);

  // Columns (J, M): D^J_{M0}(g) = exp(-i M alpha) d^J_{M0}(beta), J integer in 0..2j.
  std::vector<int> offset(two_j + 2, 0);
  for (int J = 0; J <= two_j; ++J) offset[J + 1] = offset[J] + 2 * J + 1;
  const int cols = offset[two_j + 1];
  CMatrix B(grid.size(), cols);
  const int count = grid.size();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < count; ++i) {
    const SU2Element& g = grid.nodes[i];
    for (int J = 0; J <= two_j; ++J) {
      RMatrix d = wigner_small_d(2 * J, g.beta);
      for (int k = 0; k <= 2 * J; ++k) {
        const double M = J - k;
        B(i, offset[J] + k) = std::polar(d(k, J), -M * g.alpha);
      }
    }
  }
  CMatrix I = kernels::weighted_cross_parallel(grid.weights, W.cast<Complex>(), B);

  const RVector m = spin_projections(two_j);
  CMatrix rho = CMatrix::Zero(n, n);
  for (int k1 = 0; k1 < n; ++k1)
    for (int k2 = 0; k2 < n; ++k2) {
      const int tm1 = two_j - 2 * k1, tm2 = two_j - 2 * k2;
      const int tM = tm1 - tm2;  // the first symbol vanishes otherwise
      Complex acc = 0.0;
      for (int J = 0; J <= two_j; ++J) {
        if (std::abs(tM) > 2 * J) continue;
        const double a = three_j_exact(two_j, two_j, 2 * J, tm1, -tm2, -tM).to_double();
        if (a == 0.0) continue;
        const int kM = J - tM / 2;
        const double dimJ = 2 * J + 1;
        for (int k = 0; k < n; ++k) {
          const int tm = two_j - 2 * k;
          const double b = three_j_exact(two_j, two_j, 2 * J, tm, -tm, 0).to_double();
          if (b == 0.0) continue;
          const int sign_exp = (2 * two_j - tM - tm - tm2) / 2;
          const double sign = (sign_exp % 2 == 0) ? 1.0 : -1.0;
          acc += sign * dimJ * a * b * dimJ * I(k, offset[J] + kM);
        }
      }
      rho(k1, k2) = acc;
    }
  return rho;
}

CVector su2_phase_function_grid(const DensityState& rho, int two_j, const QuadratureGrid& grid) {
  require_state_spin(two_j);
  if (rho.dim() != two_j + 1) throw DimensionMismatch("state dimension differs from 2j+1");
  std::vector<CMatrix> table = wigner_table(two_j, grid);
  const int count = grid.size();
  CVector phi(count);
  std::vector<std::string> errors(count);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < count; ++i) {
    try {
      SpectralFrame f = spectral_frame(table[i]);
      CVector w = (f.V.adjoint() * rho.matrix() * f.V).diagonal();
      Complex s = 0.0;
      for (Eigen::Index m = 0; m < w.size(); ++m) s += std::polar(1.0, f.phases(m)) * w(m).real();
      phi(i) = s;
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (int i = 0; i < count; ++i)
    if (!errors[i].empty()) throw EigenFailure("grid node " + std::to_string(i) + ": " + errors[i]);
  return phi;
}

CMatrix su2_reconstruct_generic(const CVector& phi, int two_j, const QuadratureGrid& grid) {
  require_state_spin(two_j);
  if (phi.size() != grid.size()) throw DimensionMismatch("phase function does not match the grid");
  CVector c = phi.conjugate().cwiseProduct(grid.weights.cast<Complex>()) * static_cast<double>(two_j + 1);
  return kernels::weighted_sum_parallel(c, wigner_table(two_j, grid));
}

HomogeneityReport homogeneity_check(const DensityState& rho, int two_j, double k, double xi,
                                    const SU2Element& coset) {
  require_state_spin(two_j);
  if (rho.dim() != two_j + 1) throw DimensionMismatch("state dimension differs from 2j+1");
  if (k == 0.0) throw Error("homogeneity scale must be nonzero");
  const CMatrix D = wigner_D(two_j, coset);
  const RVector m = spin_projections(two_j);
  const RVector W = su2_tomogram(rho, two_j, coset);
  const CMatrix Jz = m.cast<Complex>().asDiagonal();

  // Spectral data of X = D (s xi J_z) D^+ computed by an independent eigensolve.
  auto measure = [&](double scale) {
    CMatrix X = D * (Jz * (scale * xi)) * D.adjoint();
    Eigen::SelfAdjointEigenSolver<CMatrix> es((X + X.adjoint()) * 0.5);
    return es;
  };
  auto expectation_exp = [&](double scale) {
    auto es = measure(scale);
    CVector e(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < e.size(); ++i) e(i) = std::polar(1.0, es.eigenvalues()(i));
    CMatrix U = es.eigenvectors() * e.asDiagonal() * es.eigenvectors().adjoint();
    return (rho.matrix() * U).trace();
  };
  auto atom_weights = [&](double scale) {
    auto es = measure(scale);
    RVector p = RVector::Zero(m.size());
    const double window = 1e-8 * std::max(1.0, std::abs(scale * xi) * two_j);
    for (Eigen::Index a = 0; a < m.size(); ++a)
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (std::abs(es.eigenvalues()(i) - scale * xi * m(a)) <= window) {
          CVector v = es.eigenvectors().col(i);
          p(a) += v.dot(rho.matrix() * v).real();
        }
    return p;
  };

  HomogeneityReport r;
  Complex sum = 0.0;
  for (Eigen::Index a = 0; a < m.size(); ++a) sum += std::polar(1.0, k * xi * m(a)) * W(a);
  r.phase_residual = std::abs(sum - expectation_exp(k));
  r.weight_residual = (atom_weights(1.0) - atom_weights(k)).cwiseAbs().maxCoeff<Eigen::PropagateNaN>();
  if (k < 0) r.conjugate_residual = std::abs(expectation_exp(k) - std::conj(expectation_exp(-k)));
  return r;
}

}  // namespace gtomo

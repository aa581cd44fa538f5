#include "gtomo/kernels.hpp"

namespace gtomo::kernels {

namespace {

void require_length(const FiniteGroup& G, const CVector& v) {
  if (v.size() != G.order()) throw DimensionMismatch("vector length differs from group order");
}

void require_frames(const CMatrix& A, const std::vector<CMatrix>& V) {
  for (const CMatrix& v : V)
    if (v.rows() != A.rows() || v.cols() != A.cols())
      throw DimensionMismatch("frame size differs from operator size");
}

}  // namespace

CVector convolve_serial(const FiniteGroup& G, const CVector& f, const CVector& h) {
  require_length(G, f);
  require_length(G, h);
  const int K = G.order();
  CVector out(K);
  for (int k = 0; k < K; ++k) {
    Complex s = 0.0;
    for (int j = 0; j < K; ++j) s += f(j) * h(G.left_quotient(j, k));
    out(k) = s;
  }
  return out;
}

CVector convolve_parallel(const FiniteGroup& G, const CVector& f, const CVector& h) {
  require_length(G, f);
  require_length(G, h);
  const int K = G.order();
  CVector out(K);
#pragma omp parallel for schedule(static) if (K > 64)
  for (int k = 0; k < K; ++k) {
    Complex s = 0.0;
    for (int j = 0; j < K; ++j) s += f(j) * h(G.left_quotient(j, k));
    out(k) = s;
  }
  return out;
}

CMatrix naimark_serial(const FiniteGroup& G, const CVector& phi) {
  require_length(G, phi);
  const int K = G.order();
  CMatrix N(K, K);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) N(i, j) = phi(G.left_quotient(i, j));
  return N;
}

CMatrix naimark_parallel(const FiniteGroup& G, const CVector& phi) {
  require_length(G, phi);
  const int K = G.order();
  CMatrix N(K, K);
#pragma omp parallel for schedule(static) if (K > 64)
  for (int j = 0; j < K; ++j)
    for (int i = 0; i < K; ++i) N(i, j) = phi(G.left_quotient(i, j));
  return N;
}

CMatrix weighted_sum_serial(const CVector& c, const std::vector<CMatrix>& M) {
  if (static_cast<std::size_t>(c.size()) != M.size() || M.empty())
    throw DimensionMismatch("coefficient count differs from matrix count");
  const Eigen::Index rows = M[0].rows(), cols = M[0].cols();
  const int count = static_cast<int>(M.size());
  CMatrix out(rows, cols);
  for (Eigen::Index s = 0; s < cols; ++s)
    for (Eigen::Index r = 0; r < rows; ++r) {
      Complex acc = 0.0;
      for (int j = 0; j < count; ++j) acc += c(j) * M[j](r, s);
      out(r, s) = acc;
    }
  return out;
}

CMatrix weighted_sum_parallel(const CVector& c, const std::vector<CMatrix>& M) {
  if (static_cast<std::size_t>(c.size()) != M.size() || M.empty())
    throw DimensionMismatch("coefficient count differs from matrix count");
  const Eigen::Index rows = M[0].rows(), cols = M[0].cols();
  const Eigen::Index entries = rows * cols;
  const int count = static_cast<int>(M.size());
  CMatrix out(rows, cols);
#pragma omp parallel for schedule(static) if (entries * count > 4096)
  for (Eigen::Index e = 0; e < entries; ++e) {
    const Eigen::Index r = e % rows, s = e / rows;
    Complex acc = 0.0;
    for (int j = 0; j < count; ++j) acc += c(j) * M[j](r, s);
    out(r, s) = acc;
  }
  return out;
}

CMatrix frame_diagonals_serial(const CMatrix& A, const std::vector<CMatrix>& V) {
  require_frames(A, V);
  const int K = static_cast<int>(V.size());
  CMatrix out(K, A.rows());
  for (int j = 0; j < K; ++j) out.row(j) = (V[j].adjoint() * A * V[j]).diagonal().transpose();
  return out;
}

CMatrix frame_diagonals_parallel(const CMatrix& A, const std::vector<CMatrix>& V) {
  require_frames(A, V);
  const int K = static_cast<int>(V.size());
  CMatrix out(K, A.rows());
#pragma omp parallel for schedule(static) if (K > 32)
  for (int j = 0; j < K; ++j) out.row(j) = (V[j].adjoint() * A * V[j]).diagonal().transpose();
  return out;
}

CMatrix weighted_cross_serial(const RVector& w, const CMatrix& F, const CMatrix& B) {
  if (F.rows() != w.size() || B.rows() != w.size())
    throw DimensionMismatch("sample count differs from weight count");
  CMatrix out(F.cols(), B.cols());
  for (Eigen::Index a = 0; a < F.cols(); ++a)
    for (Eigen::Index b = 0; b < B.cols(); ++b) {
      Complex acc = 0.0;
      for (Eigen::Index i = 0; i < w.size(); ++i) acc += w(i) * F(i, a) * B(i, b);
      out(a, b) = acc;
    }
  return out;
}

CMatrix weighted_cross_parallel(const RVector& w, const CMatrix& F, const CMatrix& B) {
  if (F.rows() != w.size() || B.rows() != w.size())
    throw DimensionMismatch("sample count differs from weight count");
  const Eigen::Index P = F.cols(), Q = B.cols();
  CMatrix out(P, Q);
#pragma omp parallel for schedule(static) collapse(2)
  for (Eigen::Index a = 0; a < P; ++a)
    for (Eigen::Index b = 0; b < Q; ++b) {
      Complex acc = 0.0;
      for (Eigen::Index i = 0; i < w.size(); ++i) acc += w(i) * F(i, a) * B(i, b);
      out(a, b) = acc;
    }
  return out;
}

}  // namespace gtomo::kernels

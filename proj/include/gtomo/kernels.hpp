#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an
// OpenMP version; the parallel version splits over output entries and keeps
// the serial summation order, so both return bitwise-identical results.

#include <vector>

#include "gtomo/finite_group.hpp"

namespace gtomo::kernels {

/// out(k) = sum_j f(j) h(L[j,k]).
CVector convolve_serial(const FiniteGroup& G, const CVector& f, const CVector& h);
CVector convolve_parallel(const FiniteGroup& G, const CVector& f, const CVector& h);

/// N(i,j) = phi(L[i,j]).
CMatrix naimark_serial(const FiniteGroup& G, const CVector& phi);
CMatrix naimark_parallel(const FiniteGroup& G, const CVector& phi);

/// sum_j c(j) M_j.
CMatrix weighted_sum_serial(const CVector& c, const std::vector<CMatrix>& M);
CMatrix weighted_sum_parallel(const CVector& c, const std::vector<CMatrix>& M);

/// Row j holds the diagonal of V_j^+ A V_j.
CMatrix frame_diagonals_serial(const CMatrix& A, const std::vector<CMatrix>& V);
CMatrix frame_diagonals_parallel(const CMatrix& A, const std::vector<CMatrix>& V);

/// out(a,b) = sum_i w(i) F(i,a) B(i,b): quadrature of products of sampled functions.
CMatrix weighted_cross_serial(const RVector& w, const CMatrix& F, const CMatrix& B);
CMatrix weighted_cross_parallel(const RVector& w, const CMatrix& F, const CMatrix& B);

}  // namespace gtomo::kernels

// Serial reference kernels against their OpenMP versions.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <vector>

#include <CLI11.hpp>

#include "gtomo/kernels.hpp"

using namespace gtomo;

namespace {

CVector random_vector(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  CVector v(n);
  for (Eigen::Index k = 0; k < n; ++k) v(k) = Complex(d(rng), d(rng));
  return v;
}

CMatrix random_matrix(Eigen::Index r, Eigen::Index c, std::mt19937_64& rng) {
  CMatrix m(r, c);
  for (Eigen::Index k = 0; k < c; ++k) m.col(k) = random_vector(r, rng);
  return m;
}

bool identical(const CMatrix& a, const CMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(), sizeof(Complex) * a.size()) == 0;
}

/// Median wall time in milliseconds.
double time_ms(const std::function<CMatrix()>& f, int reps, CMatrix& result) {
  std::vector<double> t;
  for (int r = 0; r < reps; ++r) {
    auto start = std::chrono::steady_clock::now();
    result = f();
    t.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  std::nth_element(t.begin(), t.begin() + reps / 2, t.end());
  return t[reps / 2];
}

struct Case {
  const char* kernel;
  long size;
  std::function<CMatrix()> serial, parallel;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial and OpenMP kernel timings"};
  int reps = 5;
  int scale = 1;
  std::uint64_t seed = 1;
  app.add_option("--reps", reps, "Repetitions per measurement")->check(CLI::PositiveNumber);
  app.add_option("--scale", scale, "Problem size multiplier")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Random seed");
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(seed);
  std::vector<Case> cases;

  for (int n : {512 * scale, 2048 * scale}) {
    GroupPtr G = cyclic_group(n);
    CVector f = random_vector(n, rng), h = random_vector(n, rng);
    cases.push_back({"convolve", n, [G, f, h] { return CMatrix(kernels::convolve_serial(*G, f, h)); },
                     [G, f, h] { return CMatrix(kernels::convolve_parallel(*G, f, h)); }});
    cases.push_back({"naimark", n, [G, f] { return kernels::naimark_serial(*G, f); },
                     [G, f] { return kernels::naimark_parallel(*G, f); }});
  }

  {
    const int count = 50000 * scale;
    std::vector<CMatrix> M;
    for (int j = 0; j < count; ++j) M.push_back(random_matrix(9, 9, rng));
    CVector c = random_vector(count, rng);
    cases.push_back({"weighted_sum", count, [M, c] { return kernels::weighted_sum_serial(c, M); },
                     [M, c] { return kernels::weighted_sum_parallel(c, M); }});
  }

  {
    const int count = 50000 * scale;
    CMatrix A = random_matrix(5, 5, rng);
    std::vector<CMatrix> V;
    for (int j = 0; j < count; ++j) V.push_back(random_matrix(5, 5, rng));
    cases.push_back({"frame_diagonals", count, [A, V] { return kernels::frame_diagonals_serial(A, V); },
                     [A, V] { return kernels::frame_diagonals_parallel(A, V); }});
  }

  {
    const int nodes = 200000 * scale;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    RVector w(nodes);
    for (int i = 0; i < nodes; ++i) w(i) = u(rng);
    CMatrix F = random_matrix(nodes, 9, rng), B = random_matrix(nodes, 9, rng);
    cases.push_back({"weighted_cross", nodes, [w, F, B] { return kernels::weighted_cross_serial(w, F, B); },
                     [w, F, B] { return kernels::weighted_cross_parallel(w, F, B); }});
  }

  std::printf("threads %d, reps %d\n", omp_get_max_threads(), reps);
  std::printf("%-16s %10s %12s %12s %8s %10s\n", "kernel", "size", "serial_ms", "parallel_ms", "speedup", "identical");
  bool all_identical = true;
  for (const Case& c : cases) {
    CMatrix a, b;
    const double ts = time_ms(c.serial, reps, a);
    const double tp = time_ms(c.parallel, reps, b);
    const bool same = identical(a, b);
    all_identical = all_identical && same;
    std::printf("%-16s %10ld %12.3f %12.3f %8.2f %10s\n", c.kernel, c.size, ts, tp, ts / tp, same ? "yes" : "no");
  }
  return all_identical ? 0 : 1;
}

// Benchmark: serial reference vs. OpenMP kernels for the two hot paths —
// Gram-matrix assembly (independent rows) and echelon rank (row updates
// below the pivot).  Correctness is cross-checked on every run: the
// parallel assembly must reproduce the serial matrix bit for bit and both
// elimination paths must agree on the rank.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "dmw/matrix.hpp"
#include "dmw/rep.hpp"

#ifdef DMW_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

bool same_matrix(const dmw::IntMatrix& a, const dmw::IntMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < a.cols; ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

int run(long n, long k, long p, int repeats) {
  using clock = std::chrono::steady_clock;
  std::printf("Gram kernel benchmark: TL_%ld apex %ld, rank over %s, best of "
              "%d\n",
              n, k, dmw::FieldSpec{p}.name().c_str(), repeats);
#ifdef DMW_HAVE_OPENMP
  std::printf("  threads: %d\n", omp_get_max_threads());
#else
  std::printf("  threads: 1 (built without OpenMP)\n");
#endif

  double assemble_serial = -1, assemble_parallel = -1;
  dmw::IntMatrix gs, gp;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = clock::now();
    gs = dmw::gram_matrix(dmw::Family::TL, n, k, /*parallel=*/false);
    double el = ms_since(t0);
    if (assemble_serial < 0 || el < assemble_serial) assemble_serial = el;
  }
  for (int r = 0; r < repeats; ++r) {
    auto t0 = clock::now();
    gp = dmw::gram_matrix(dmw::Family::TL, n, k, /*parallel=*/true);
    double el = ms_since(t0);
    if (assemble_parallel < 0 || el < assemble_parallel) assemble_parallel = el;
  }
  if (!same_matrix(gs, gp)) {
    std::printf("FAIL: parallel assembly differs from the serial reference\n");
    return 1;
  }
  std::printf("  assembly   side %zu   serial %8.1f ms   parallel %8.1f ms   "
              "speedup %.2fx\n",
              gs.rows, assemble_serial, assemble_parallel,
              assemble_serial / assemble_parallel);

  double rank_serial = -1, rank_parallel = -1;
  size_t rs = 0, rp = 0;
  dmw::FieldSpec fs{p};
  for (int r = 0; r < repeats; ++r) {
    auto t0 = clock::now();
    rs = dmw::rank_int(gs, fs, /*parallel=*/false);
    double el = ms_since(t0);
    if (rank_serial < 0 || el < rank_serial) rank_serial = el;
  }
  for (int r = 0; r < repeats; ++r) {
    auto t0 = clock::now();
    rp = dmw::rank_int(gs, fs, /*parallel=*/true);
    double el = ms_since(t0);
    if (rank_parallel < 0 || el < rank_parallel) rank_parallel = el;
  }
  if (rs != rp) {
    std::printf("FAIL: parallel rank %zu differs from serial rank %zu\n", rp,
                rs);
    return 1;
  }
  std::printf("  rank %-4zu             serial %8.1f ms   parallel %8.1f ms   "
              "speedup %.2fx\n",
              rs, rank_serial, rank_parallel, rank_serial / rank_parallel);
  std::printf("  cross-check: parallel kernels match the serial reference\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  long n = 14, k = 2, p = 2;
  int repeats = 3;
  if (argc > 1) n = std::atol(argv[1]);
  if (argc > 2) k = std::atol(argv[2]);
  if (argc > 3) p = std::atol(argv[3]);
  if (argc > 4) repeats = std::atoi(argv[4]);
  if (n < 2 || k < 0 || k > n || ((n - k) & 1L) || repeats < 1) {
    std::printf("usage: %s [n] [k] [char] [repeats]   (n - k must be even)\n",
                argv[0]);
    return 2;
  }
  return run(n, k, p, repeats);
}

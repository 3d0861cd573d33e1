// Compares the serial reference against the OpenMP kernels on the two hot
// paths: factorization enumeration and crystal construction.
#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "asc/coefficients.hpp"

using namespace asc;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto t0 = clock_type::now();
  f();
  auto t1 = clock_type::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_enumeration() {
  // long element of S_6 inside S~_7: plenty of subsets per level
  AffinePermutation w0 = AffinePermutation::from_reduced_word(
      {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1}, 7);
  Composition alpha{2, 2, 2, 2, 2, 2, 2, 1};
  long long n_serial = 0, n_parallel = 0;
  double ts = time_ms(
      [&] { n_serial = count_factorizations_serial(w0, alpha); });
  double tp = time_ms([&] { n_parallel = count_factorizations(w0, alpha); });
  std::cout << "enumerate W_{w0(S6),(2^7,1)}: count=" << n_serial
            << "  serial " << ts << " ms,  parallel " << tp << " ms ("
            << (tp > 0 ? ts / tp : 0) << "x)\n";
  if (n_serial != n_parallel) {
    std::cout << "MISMATCH between serial and parallel counts\n";
    std::exit(1);
  }
}

void bench_crystal() {
  AffinePermutation w0 = AffinePermutation::from_reduced_word(
      {1, 2, 1, 3, 2, 1, 4, 3, 2, 1}, 6);
  double t = time_ms([&] {
    CrystalGraph g = build_crystal(w0, 5);
    std::cout << "B(w0(S5)) with 5 factors: " << g.vertices.size()
              << " vertices, " << g.edges.size() << " edges;  ";
  });
  std::cout << "built in " << t << " ms\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not enabled; parallel paths run serially\n";
#endif
  bench_enumeration();
  bench_crystal();
  return 0;
}

// Benchmark comparing the serial reference kernels against the OpenMP
// variants on the two elimination-heavy operations: matrix product and
// row reduction, over both field kinds.
#include <chrono>
#include <cstdint>
#include <cstdio>

#include "centstab/matrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace centstab;

namespace {

struct Rng {
  std::uint64_t state = 0x2545f4914f6cdd1dULL;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

Matrix random_matrix(Rng& rng, int n, const Field& f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rng.range(0, 2) != 0) m.at(i, j) = Scalar::from_int(f, rng.range(-20, 20));
  return m;
}

template <typename F>
double time_of(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void bench_field(const Field& f, int size) {
  Rng rng;
  Matrix a = random_matrix(rng, size, f);
  Matrix b = random_matrix(rng, size, f);

  Matrix prod_serial(0, 0, f), prod_parallel(0, 0, f);
  const double mul_s = time_of([&] { prod_serial = mul_serial(a, b); });
  const double mul_p = time_of([&] { prod_parallel = mul_parallel(a, b); });
  const bool mul_ok = prod_serial == prod_parallel;

  Echelon ech_serial{{}, {}, 0}, ech_parallel{{}, {}, 0};
  const double ech_s = time_of([&] { ech_serial = echelon_serial(a); });
  const double ech_p = time_of([&] { ech_parallel = echelon_parallel(a); });
  const bool ech_ok =
      ech_serial.rref == ech_parallel.rref && ech_serial.rank == ech_parallel.rank;

  std::printf("%-6s n=%-4d  mul %8.3fs / %8.3fs  (x%.2f, %s)   rref %8.3fs / %8.3fs  (x%.2f, %s)\n",
              f.spec().c_str(), size, mul_s, mul_p, mul_s / mul_p,
              mul_ok ? "match" : "MISMATCH", ech_s, ech_p, ech_s / ech_p,
              ech_ok ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int max_size = argc > 1 ? std::atoi(argv[1]) : 192;
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run the serial path\n");
#endif
  std::printf("timings: serial / parallel (speedup)\n");
  for (int size = 48; size <= max_size; size *= 2) {
    bench_field(Field::rationals(), size);
    bench_field(Field::prime(10007), size);
  }
  return 0;
}

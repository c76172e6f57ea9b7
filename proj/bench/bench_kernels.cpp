// Compares the serial reference kernels against the OpenMP ones: the
// nullspace elimination behind the vanishing solver and the witness
// verification sweep.  Results must agree exactly; only the timing
// differs.

#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "conika/constructions.hpp"
#include "conika/nullspace.hpp"
#include "conika/vanishing.hpp"

using namespace conika;

namespace {

double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

GfMatrix random_matrix(const Fq& F, std::size_t rows, std::size_t cols,
                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GfMatrix M(rows, cols);
  for (auto& v : M.a) v = (Fq::Elt)(rng() % F.q());
  return M;
}

void bench_nullspace(const Fq& F, std::size_t rows, std::size_t cols) {
  GfMatrix M = random_matrix(F, rows, cols, 42);

  double t0 = now();
  auto xs = nullspace_first_vector_serial(F, M);
  double serial = now() - t0;

  t0 = now();
  auto xp = nullspace_first_vector(F, M, Exec::parallel);
  double parallel = now() - t0;

  std::printf("nullspace  q=%-4u %4zux%-4zu  serial %8.3fs  omp %8.3fs  "
              "speedup %.2fx  %s\n",
              F.q(), rows, cols, serial, parallel, serial / parallel,
              xs == xp ? "match" : "MISMATCH");
}

void bench_verify(const Fq& F, std::uint32_t n) {
  WitnessedSet W = build_parabolic_kakeya(F, n);

  VerifyOptions so;
  so.exec = Exec::serial;
  double t0 = now();
  auto rs = verify_conical_kakeya(W, so);
  double serial = now() - t0;

  VerifyOptions po;
  po.exec = Exec::parallel;
  t0 = now();
  auto rp = verify_conical_kakeya(W, po);
  double parallel = now() - t0;

  std::printf("verify     q=%-4u n=%u |S|=%-6zu serial %8.3fs  omp %8.3fs  "
              "speedup %.2fx  %s\n",
              F.q(), n, W.points.size(), serial, parallel, serial / parallel,
              rs.accepted == rp.accepted ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  for (std::uint32_t q : {13u, 31u, 127u}) {
    Fq F = make_field(q, 1);
    bench_nullspace(F, 600, 1200);
  }
  {
    Fq F9 = make_field(3, 2);
    bench_nullspace(F9, 600, 1200);
  }

  for (std::uint32_t q : {13u, 19u, 31u}) {
    Fq F = make_field(q, 1);
    bench_verify(F, 3);
  }
  return 0;
}

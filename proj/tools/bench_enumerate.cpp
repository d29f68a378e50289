// Times the enumeration kernels against each other on one (n, k_max) instance:
// the bignum reference, the packed serial kernel, and the packed kernel with
// OpenMP workers. Results must agree row for row or the run fails.

#include <nvg/enumeration.hpp>
#include <nvg/serialize.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

namespace {

double seconds(const std::function<nvg::GrowthSeries()>& run, nvg::GrowthSeries& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = run();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"benchmark the growth-series enumeration kernels"};
  int n = 5;
  int k_max = 12;
  int threads = 4;
  long long budget = 2000000000LL;
  app.add_option("--n", n, "group parameter (default 5)");
  app.add_option("--k-max", k_max, "largest k (default 12)");
  app.add_option("--threads", threads, "workers for the parallel run (default 4)");
  app.add_option("--budget", budget, "canonicalization budget per run");
  CLI11_PARSE(app, argc, argv);

  nvg::GrowthSeries ref, serial, parallel;
  double t_ref = seconds(
      [&] { return nvg::enumerate_growth_reference(n, k_max, budget); }, ref);
  double t_serial =
      seconds([&] { return nvg::enumerate_growth(n, k_max, {budget, 1}); }, serial);
  double t_parallel = seconds(
      [&] { return nvg::enumerate_growth(n, k_max, {budget, threads}); }, parallel);

  for (int k = 0; k <= k_max; ++k) {
    if (ref.rows[k].q != serial.rows[k].q || ref.rows[k].q != parallel.rows[k].q) {
      std::fprintf(stderr, "kernel disagreement at k=%d\n", k);
      return 1;
    }
  }

  std::printf("n=%d k_max=%d  P(k_max)=%s\n", n, k_max, ref.rows[k_max].p.str().c_str());
  std::printf("%-22s %10.3fs\n", "reference (bignum)", t_ref);
  std::printf("%-22s %10.3fs  x%.2f\n", "packed serial", t_serial,
              t_serial > 0 ? t_ref / t_serial : 0.0);
  std::printf("%-22s %10.3fs  x%.2f  (threads=%d)\n", "packed parallel", t_parallel,
              t_parallel > 0 ? t_ref / t_parallel : 0.0, threads);
  return 0;
}

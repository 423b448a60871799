// Serial reference vs. OpenMP kernels: grid evaluation, oracle minimization
// and the two sweeps. Prints wall times and checks that results agree.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "cosserat2d/energy.hpp"
#include "cosserat2d/oracle.hpp"
#include "cosserat2d/sweep.hpp"

using namespace cosserat2d;

namespace {

double seconds(const std::function<void()>& body, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %9.3f ms  parallel %9.3f ms  speedup %5.2fx  %s\n", name,
              1e3 * serial, 1e3 * parallel, serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
  const Deformation f(Mat2(1.3, 0.9, -0.6, 1.7));
  const Weights w(2.0, 0.4);
  const AngleFunction e = [&](Angle a) { return shear_stretch_energy(Rotation(a), f, w); };
  bool all_same = true;

  {
    const std::size_t n = 1'000'000;
    const bool same = evaluate_grid(e, n, Execution::Serial) == evaluate_grid(e, n, Execution::Parallel);
    report("evaluate_grid n=1e6", seconds([&] { evaluate_grid(e, n, Execution::Serial); }, 5),
           seconds([&] { evaluate_grid(e, n, Execution::Parallel); }, 5), same);
    all_same = all_same && same;
  }
  {
    const auto run = [&](Execution x) { return grid_minimize(e, kDefaultGridN, kDefaultRefineTol, x); };
    const GridResult a = run(Execution::Serial);
    const GridResult b = run(Execution::Parallel);
    bool same = a.minima.size() == b.minima.size();
    for (std::size_t i = 0; same && i < a.minima.size(); ++i) {
      same = a.minima[i].angle == b.minima[i].angle && a.minima[i].value == b.minima[i].value;
    }
    report("grid_minimize n=20000", seconds([&] { run(Execution::Serial); }, 50),
           seconds([&] { run(Execution::Parallel); }, 50), same);
    all_same = all_same && same;
  }
  {
    const Range r{0.01, 100.0, 1e-5};
    const auto a = bifurcation_table(r, w, Execution::Serial);
    const auto b = bifurcation_table(r, w, Execution::Parallel);
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].beta_plus == b[i].beta_plus;
    report("bifurcation_table 1e7 rows", seconds([&] { bifurcation_table(r, w, Execution::Serial); }, 3),
           seconds([&] { bifurcation_table(r, w, Execution::Parallel); }, 3), same);
    all_same = all_same && same;
  }
  {
    const Range r{-50.0, 50.0, 1e-4};
    const auto a = shear_sweep(r, Execution::Serial);
    const auto b = shear_sweep(r, Execution::Parallel);
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) {
      same = a[i].alpha_plus == b[i].alpha_plus && a[i].w1 == b[i].w1 && a[i].w3 == b[i].w3;
    }
    report("shear_sweep 1e6 rows", seconds([&] { shear_sweep(r, Execution::Serial); }, 3),
           seconds([&] { shear_sweep(r, Execution::Parallel); }, 3), same);
    all_same = all_same && same;
  }
  return all_same ? 0 : 1;
}

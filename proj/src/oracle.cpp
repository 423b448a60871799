#include "cosserat2d/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>

namespace cosserat2d {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNearMinimalRelTol = 1e-7;
constexpr double kGlobalRelTol = 1e-9;
constexpr double kPlateauFraction = 0.1;
constexpr double kRootTol = 1e-10;
constexpr double kPolishStep = 1e-5;

// Golden section stalls where value differences drown in rounding, about
// sqrt(eps) from the minimizer. The zero of the symmetric difference
// f(x + d) - f(x - d) is located far more tightly, so bisect on it inside
// [lo, hi] when it brackets m. Keeps m otherwise.
GridMinimum polish(const std::function<double(double)>& g, GridMinimum m, double lo,
                   double hi) {
  const double center = 0.5 * (lo + hi);
  const double x = center + Angle::normalize(m.angle.radians() - center);
  const auto diff = [&](double t) { return g(t + kPolishStep) - g(t - kPolishStep); };
  double a = kInf;
  double b = kInf;
  for (double w = 1e-8; x - w >= lo && x + w <= hi; w *= 4.0) {
    const double da = diff(x - w);
    const double db = diff(x + w);
    if (!std::isfinite(da) || !std::isfinite(db)) return m;
    if (da < 0.0 && db > 0.0) {
      a = x - w;
      b = x + w;
      break;
    }
  }
  if (!std::isfinite(a)) return m;
  for (int k = 0; k < 80 && b - a > 1e-14; ++k) {
    const double mid = 0.5 * (a + b);
    const double dm = diff(mid);
    if (!std::isfinite(dm)) return m;
    (dm < 0.0 ? a : b) = mid;
  }
  const double root = 0.5 * (a + b);
  const double v = g(root);
  const double noise = 1e-12 * std::max(1.0, std::abs(m.value));
  if (!(v <= m.value + noise)) return m;
  return {Angle(root), std::min(v, m.value)};
}

void check_grid_n(std::size_t grid_n) {
  if (grid_n < kMinGridN) {
    std::ostringstream msg;
    msg << "grid_n = " << grid_n << " is below " << kMinGridN;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
}

[[noreturn]] void throw_non_finite(double x, double value) {
  std::ostringstream msg;
  msg << "energy(" << x << ") = " << value;
  throw Error(ErrorKind::NonFiniteEnergy, msg.str(), Angle::normalize(x));
}

template <typename T, typename F>
std::vector<T> evaluate_kernel(const F& f, std::size_t grid_n, Execution exec) {
  std::vector<T> out(grid_n);
  const auto n = static_cast<std::ptrdiff_t>(grid_n);
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      out[i] = f(Angle(grid_angle(static_cast<std::size_t>(i), grid_n)));
    }
    return out;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = f(Angle(grid_angle(static_cast<std::size_t>(i), grid_n)));
    } catch (...) {
#pragma omp critical(cosserat2d_grid_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

// Shared driver. `values` holds +inf where the energy is undefined; `g`
// evaluates the energy at an unwrapped angle with the same convention.
GridResult minimize_sampled(const std::vector<double>& values,
                            const std::function<double(double)>& g, double refine_tol) {
  const std::size_t n = values.size();
  const double h = 2.0 * std::numbers::pi / static_cast<double>(n);

  const double best = *std::min_element(values.begin(), values.end());
  if (!std::isfinite(best)) {
    throw Error(ErrorKind::InvalidArgument, "energy is undefined on the whole grid");
  }
  const double threshold = best + kNearMinimalRelTol * std::max(1.0, std::abs(best));

  std::size_t near_count = 0;
  for (double v : values) near_count += (v <= threshold);

  GridResult result;
  result.grid_n = n;
  result.angle_tol = h;
  result.plateau = static_cast<double>(near_count) > kPlateauFraction * static_cast<double>(n);

  const auto prev = [n](std::size_t i) { return i == 0 ? n - 1 : i - 1; };
  const auto next = [n](std::size_t i) { return i + 1 == n ? 0 : i + 1; };

  if (result.plateau) {
    // One representative (best cell) per circular run of near-minimal cells.
    result.value_tol = threshold - best;
    std::size_t start = 0;
    if (near_count < n) {
      while (values[start] <= threshold) ++start;  // start on a far cell
    }
    std::size_t i = start;
    std::size_t visited = 0;
    while (visited < n) {
      if (values[i] <= threshold) {
        std::size_t arg = i;
        while (visited < n && values[i] <= threshold) {
          if (values[i] < values[arg]) arg = i;
          i = next(i);
          ++visited;
        }
        result.minima.push_back({Angle(grid_angle(arg, n)), values[arg]});
      } else {
        i = next(i);
        ++visited;
      }
    }
  } else {
    std::vector<GridMinimum> refined;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = values[i];
      // Every discrete local minimum is refined. A stiff well's best cell can
      // sit well above the near-minimal band at the default resolution.
      if (!std::isfinite(v) || v > values[prev(i)] || v > values[next(i)]) continue;
      const double x = grid_angle(i, n);
      GridMinimum m = golden_section(g, x - h, x + h, refine_tol);
      if (!(m.value <= v)) m = {Angle(x), v};
      m = polish(g, m, x - h, x + h);
      refined.push_back(m);
    }
    double refined_best = kInf;
    for (const auto& m : refined) refined_best = std::min(refined_best, m.value);
    result.value_tol = kGlobalRelTol * std::max(1.0, std::abs(refined_best));

    std::sort(refined.begin(), refined.end(),
              [](const GridMinimum& a, const GridMinimum& b) { return a.value < b.value; });
    for (const auto& m : refined) {
      if (m.value > refined_best + result.value_tol) break;
      const bool separate = std::all_of(
          result.minima.begin(), result.minima.end(), [&](const GridMinimum& kept) {
            return angular_distance(kept.angle, m.angle) > 2.0 * result.angle_tol;
          });
      if (separate) result.minima.push_back(m);
    }
  }

  std::sort(result.minima.begin(), result.minima.end(),
            [](const GridMinimum& a, const GridMinimum& b) {
              return a.angle.radians() < b.angle.radians();
            });
  return result;
}

}  // namespace

std::vector<Angle> GridResult::angles() const {
  std::vector<Angle> out;
  out.reserve(minima.size());
  for (const auto& m : minima) out.push_back(m.angle);
  return out;
}

double GridResult::best_value() const {
  double best = kInf;
  for (const auto& m : minima) best = std::min(best, m.value);
  return best;
}

double grid_angle(std::size_t i, std::size_t n) noexcept {
  return -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(i) /
                                 static_cast<double>(n);
}

std::vector<double> evaluate_grid(const AngleFunction& f, std::size_t grid_n,
                                  Execution exec) {
  return evaluate_kernel<double>(f, grid_n, exec);
}

std::vector<std::optional<double>> evaluate_grid(const PartialAngleFunction& f,
                                                 std::size_t grid_n, Execution exec) {
  return evaluate_kernel<std::optional<double>>(f, grid_n, exec);
}

GridMinimum golden_section(const std::function<double(double)>& f, double a, double b,
                           double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  double best_x = fc <= fd ? c : d;
  double best_f = std::min(fc, fd);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc < best_f) best_f = fc, best_x = c;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd < best_f) best_f = fd, best_x = d;
    }
  }
  return {Angle(best_x), best_f};
}

GridResult grid_minimize(const AngleFunction& energy, std::size_t grid_n, double refine_tol,
                         Execution exec) {
  check_grid_n(grid_n);
  const std::vector<double> values = evaluate_grid(energy, grid_n, exec);
  for (std::size_t i = 0; i < grid_n; ++i) {
    if (!std::isfinite(values[i])) throw_non_finite(grid_angle(i, grid_n), values[i]);
  }
  const auto g = [&energy](double x) {
    const double v = energy(Angle(x));
    if (!std::isfinite(v)) throw_non_finite(x, v);
    return v;
  };
  return minimize_sampled(values, g, refine_tol);
}

GridResult grid_minimize_partial(const PartialAngleFunction& energy, std::size_t grid_n,
                                 double refine_tol, Execution exec) {
  check_grid_n(grid_n);
  const auto sampled = evaluate_grid(energy, grid_n, exec);
  std::vector<double> values(grid_n);
  for (std::size_t i = 0; i < grid_n; ++i) {
    if (!sampled[i]) {
      values[i] = kInf;
    } else if (!std::isfinite(*sampled[i])) {
      throw_non_finite(grid_angle(i, grid_n), *sampled[i]);
    } else {
      values[i] = *sampled[i];
    }
  }
  const auto g = [&energy](double x) {
    const auto v = energy(Angle(x));
    if (!v) return kInf;
    if (!std::isfinite(*v)) throw_non_finite(x, *v);
    return *v;
  };
  return minimize_sampled(values, g, refine_tol);
}

std::vector<Angle> sign_change_scan(const AngleFunction& f, std::size_t grid_n) {
  check_grid_n(grid_n);
  const std::vector<double> values = evaluate_grid(f, grid_n);
  for (std::size_t i = 0; i < grid_n; ++i) {
    if (!std::isfinite(values[i])) throw_non_finite(grid_angle(i, grid_n), values[i]);
  }
  const double h = 2.0 * std::numbers::pi / static_cast<double>(grid_n);
  std::vector<Angle> roots;
  for (std::size_t i = 0; i < grid_n; ++i) {
    const double fa = values[i];
    const double fb = values[(i + 1) % grid_n];
    double a = grid_angle(i, grid_n);
    if (fa == 0.0) {
      roots.emplace_back(a);
      continue;
    }
    if (fb == 0.0 || std::signbit(fa) == std::signbit(fb)) continue;
    double b = a + h;
    const bool a_negative = fa < 0.0;
    while (b - a > kRootTol) {
      const double mid = 0.5 * (a + b);
      const double fm = f(Angle(mid));
      if (!std::isfinite(fm)) throw_non_finite(mid, fm);
      if (fm == 0.0) {
        a = b = mid;
        break;
      }
      if ((fm < 0.0) == a_negative) {
        a = mid;
      } else {
        b = mid;
      }
    }
    roots.emplace_back(0.5 * (a + b));
  }
  std::sort(roots.begin(), roots.end(),
            [](Angle x, Angle y) { return x.radians() < y.radians(); });
  return roots;
}

double set_distance(std::span<const Angle> a, std::span<const Angle> b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return kInf;
  const auto directed = [](std::span<const Angle> from, std::span<const Angle> to) {
    double worst = 0.0;
    for (Angle x : from) {
      double nearest = kInf;
      for (Angle y : to) nearest = std::min(nearest, angular_distance(x, y));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace cosserat2d

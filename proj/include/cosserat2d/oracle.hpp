#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cosserat2d/mat2.hpp"

namespace cosserat2d {

/// Brute-force minimization over the rotation angle.
///
/// The oracle knows nothing about the closed forms: it samples the energy
/// on a uniform periodic grid, refines every discrete local minimum by
/// golden section, keeps the refined minima within a relative 1e-9 of the
/// best one and merges those that land within two grid steps. Cells within
/// a relative 1e-7 of the best sample count as near-minimal; when more than
/// 10% of the grid is near-minimal the result is flagged as a plateau and
/// one representative per near-minimal run is reported unrefined.

enum class Execution { Serial, Parallel };

using AngleFunction = std::function<double(Angle)>;
/// nullopt marks angles outside the energy's domain.
using PartialAngleFunction = std::function<std::optional<double>(Angle)>;

struct GridMinimum {
  Angle angle;
  double value;
};

struct GridResult {
  std::vector<GridMinimum> minima;  ///< sorted by angle
  std::size_t grid_n = 0;
  double value_tol = 0.0;  ///< refined minima within this of the best are global
  double angle_tol = 0.0;  ///< minima are separated by more than 2 angle_tol
  bool plateau = false;    ///< more than 10% of cells near-minimal; no refinement

  std::vector<Angle> angles() const;
  double best_value() const;
};

inline constexpr std::size_t kDefaultGridN = 20000;
inline constexpr double kDefaultRefineTol = 1e-10;
inline constexpr std::size_t kMinGridN = 360;

/// Grid node i is at -pi + 2 pi i / n.
double grid_angle(std::size_t i, std::size_t n) noexcept;

/// Samples f on the grid. The parallel kernel is OpenMP; the serial one is
/// the reference it is tested against. Exceptions thrown by f propagate.
std::vector<double> evaluate_grid(const AngleFunction& f, std::size_t grid_n,
                                  Execution exec = Execution::Parallel);
std::vector<std::optional<double>> evaluate_grid(const PartialAngleFunction& f,
                                                 std::size_t grid_n,
                                                 Execution exec = Execution::Parallel);

/// Throws NonFiniteEnergy (with the angle) on NaN/Inf, InvalidArgument if
/// grid_n < 360.
GridResult grid_minimize(const AngleFunction& energy, std::size_t grid_n = kDefaultGridN,
                         double refine_tol = kDefaultRefineTol,
                         Execution exec = Execution::Parallel);

/// Minimizes over the subset of angles where the energy is defined.
GridResult grid_minimize_partial(const PartialAngleFunction& energy,
                                 std::size_t grid_n = kDefaultGridN,
                                 double refine_tol = kDefaultRefineTol,
                                 Execution exec = Execution::Parallel);

/// Golden-section search on [a, b] to bracket width tol. Returns the best
/// point seen. Values of +inf are treated as outside the domain.
GridMinimum golden_section(const std::function<double(double)>& f, double a, double b,
                           double tol);

/// All sign changes of a periodic f on the grid, bisected to 1e-10.
std::vector<Angle> sign_change_scan(const AngleFunction& f,
                                    std::size_t grid_n = kDefaultGridN);

/// Hausdorff distance between two angle sets on the circle.
double set_distance(std::span<const Angle> a, std::span<const Angle> b);

}  // namespace cosserat2d

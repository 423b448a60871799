#pragma once

#include <optional>
#include <vector>

#include "cosserat2d/energy.hpp"
#include "cosserat2d/oracle.hpp"

namespace cosserat2d {

/// Closed sampling range start, start + step, ..., <= end.
struct Range {
  double start;
  double end;
  double step;

  /// Throws InvalidArgument unless start < end and step > 0.
  void validate() const;
  std::vector<double> values() const;
};

struct BifurcationRow {
  double tr_u;
  double beta_plus;
  double beta_minus;
};

/// beta+- = +-arccos(rho / tr U) for tr U >= rho, 0 otherwise. With
/// classical weights the whole table is zero.
std::vector<BifurcationRow> bifurcation_table(const Range& tr_u, const Weights& w,
                                              Execution exec = Execution::Parallel);

struct ShearRow {
  double gamma;
  double alpha_p;
  double alpha_plus;
  double alpha_minus;
  double w1;
  double w2;
  std::optional<double> w3;
};

/// Optimal angles of W_{1,0}(.;F_gamma) and the critical levels, per gamma.
std::vector<ShearRow> shear_sweep(const Range& gamma, Execution exec = Execution::Parallel);

}  // namespace cosserat2d

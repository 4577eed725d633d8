#pragma once

#include <string>
#include <vector>

#include "airyw/params.hpp"

namespace airyw {

class PainleveTable;

// Finite-difference residual certification. Each check evaluates the PDE with
// centered differences at step h and h/2 and reports a Richardson-fitted
// convergence order (expected ~2). The module consumes only distribution
// values; it holds no knowledge of the underlying formulas beyond the two
// PDEs themselves.

struct ResidualEntry {
  std::vector<double> coords;  // (r, b_1..b_m) or (t, r)
  double residual_h = 0.0;
  double residual_h2 = 0.0;  // at step h/2
  double order = 0.0;        // log2(|residual_h| / |residual_h2|)
};

struct ResidualReport {
  std::string grid_spec;
  double h = 0.0;
  double max_residual = 0.0;     // at step h
  double residual_scale = 0.0;   // max |F| (or |phi|) over the probe set
  double convergence_order = 0.0;
  double order_fit_residual = 0.0;  // spread of per-point orders around the fit
  bool conjecture = false;          // m >= 2 interaction form
  std::vector<ResidualEntry> entries;

  std::string to_json() const;
  std::string to_csv() const;
};

// Residual of
//   m F_r + sum_j (F_{b_j b_j}/2 + (r - b_j^2) F_{b_j})
//       + sum_{j<k} (F_{b_k} - F_{b_j})/(b_k - b_j)   [m >= 2]
// for the deformed distribution (a = inf). m = 1 omits the interaction sum.
// b_points entries are m-vectors; stencils must stay inside b_j > 0 and keep
// the b's ordered, else GridError.
ResidualReport bv_residual(int m, const std::vector<double>& r_grid,
                           const std::vector<std::vector<double>>& b_points,
                           double h);
ResidualReport bv_residual(int m, const std::vector<double>& r_grid,
                           const std::vector<std::vector<double>>& b_points,
                           double h, const PainleveTable& table);

// Residual of phi_t + phi phi_r + phi_rrr / 12 for
// phi(t,r) = d^2/dr^2 log det of the time-rescaled kernel, with the
// third derivative taken by a 5-point stencil on a log-determinant table
// computed at frozen discretization.
ResidualReport kdv_residual(const std::vector<double>& t_grid,
                            const std::vector<double>& r_grid,
                            const WandererParams& params, double h);

// |F(params, r, t) - F(t^{1/3} params, t^{-1/3} r, 1)|, the change of
// variables underlying the time-rescaled kernel.
double kdv_scaling_gap(const WandererParams& params, double r, double t);

}  // namespace airyw

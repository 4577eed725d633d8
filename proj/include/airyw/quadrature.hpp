#pragma once

#include <cstddef>
#include <vector>

namespace airyw {

// Gauss-Legendre nodes and weights on [-1,1], computed by Newton iteration
// on the Legendre recurrence. Accurate to machine precision for n up to a
// few thousand.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Truncated discretization of L^2([0,infty)): Gauss-Legendre on [0, x_max].
struct QuadratureGrid {
  double x_max = 0.0;
  std::vector<double> nodes;    // strictly increasing, inside (0, x_max)
  std::vector<double> weights;  // positive, sum to x_max
  int level = 0;                // refinement index (level k has n0 * 2^k nodes)

  int size() const { return static_cast<int>(nodes.size()); }
};

// Gauss-Legendre nodes/weights mapped to [0, x_max]. Throws InvalidConfig on
// x_max <= 0 or n < 2.
QuadratureGrid build_grid(double x_max, int n);

// Integrates f sampled at the grid nodes: sum w_i f(x_i).
double integrate(const QuadratureGrid& grid, const std::vector<double>& f_at_nodes);

}  // namespace airyw

#include "airyw/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "airyw/errors.hpp"

namespace airyw {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw InvalidConfig("gauss_legendre: n must be positive");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

QuadratureGrid build_grid(double x_max, int n) {
  if (x_max <= 0.0) throw InvalidConfig("build_grid: x_max must be positive");
  if (n < 2) throw InvalidConfig("build_grid: need at least 2 nodes");
  std::vector<double> gl_nodes, gl_weights;
  gauss_legendre(n, gl_nodes, gl_weights);
  QuadratureGrid grid;
  grid.x_max = x_max;
  grid.nodes.resize(n);
  grid.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    grid.nodes[i] = 0.5 * x_max * (gl_nodes[i] + 1.0);
    grid.weights[i] = 0.5 * x_max * gl_weights[i];
  }
  return grid;
}

double integrate(const QuadratureGrid& grid, const std::vector<double>& f_at_nodes) {
  if (f_at_nodes.size() != grid.nodes.size())
    throw GridMismatch("integrate: sample count does not match grid");
  double sum = 0.0;
  for (std::size_t i = 0; i < f_at_nodes.size(); ++i)
    sum += grid.weights[i] * f_at_nodes[i];
  return sum;
}

}  // namespace airyw

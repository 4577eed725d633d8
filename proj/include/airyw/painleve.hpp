#pragma once

#include <string>
#include <vector>

namespace airyw {

// Tabulated Hastings-McLeod data on a uniform s-grid:
//   q'' = 2q^3 + s q,  q(s) -> Ai(s) as s -> +infinity,
//   v = Int_s^inf q^2, E = exp(-1/2 Int_s^inf q), F = exp(-1/2 Int_s^inf v).
// Interpolation is piecewise cubic Hermite; each column carries an exact
// derivative (q' stored, v' = -q^2, E' = qE/2, F' = vF/2), so interpolation
// error is O(h^4).
class PainleveTable {
 public:
  double s_left() const { return s_left_; }
  double s_right() const { return s_right_; }
  int size() const { return static_cast<int>(q_.size()); }
  double step() const { return h_; }

  double q(double s) const;
  double q_prime(double s) const;
  double v(double s) const;
  double E(double s) const;
  double F(double s) const;

  const std::vector<double>& q_nodes() const { return q_; }
  const std::vector<double>& q_prime_nodes() const { return qp_; }
  const std::vector<double>& v_nodes() const { return v_; }
  const std::vector<double>& E_nodes() const { return E_; }
  const std::vector<double>& F_nodes() const { return F_; }
  double s_node(int i) const { return s_left_ + h_ * i; }

  // Residual of the collocation system the solver converged on (max norm).
  double collocation_residual() const { return collocation_residual_; }

  void save(const std::string& path) const;
  static PainleveTable load(const std::string& path);

  friend PainleveTable hm_solve(double s_L, double s_R, int n);

 private:
  void check_range(double s) const;
  int cell(double s) const;

  double s_left_ = 0.0, s_right_ = 0.0, h_ = 0.0;
  double collocation_residual_ = 0.0;
  std::vector<double> q_, qp_, v_, E_, F_;
};

// Solves the Hastings-McLeod boundary value problem by damped Newton on a
// Numerov discretization, with right boundary q(s_R) = Ai(s_R) and a Robin
// closure at the left matching the q ~ sqrt(-s/2) branch. Initialized from
// the connecting profile max(Ai(s), sqrt(-s/2) 1_{s<0}). Throws
// NewtonDiverged with the final residual on failure.
PainleveTable hm_solve(double s_L, double s_R, int n);

// Lax-pair values f(x,w), g(x,w): the solution of
//   d/dw (f,g)^T = [[q^2, -wq-q'], [-wq+q', w^2-x-q^2]] (f,g)^T
// with f(x,0) = g(x,0) = F(x), equivalently the unique solution bounded as
// w -> infinity with f -> 1, g -> 0. Evaluated by the large-w asymptotic
// series and, below the matching point, adaptive backward Runge-Kutta, which
// keeps the exponentially growing mode of the system damped. (Forward
// integration from w=0 is exponentially unstable in w; the initial condition
// at w=0 is asserted by tests instead of being used constructively.)
struct LaxPairValue {
  double x = 0.0;
  double w = 0.0;
  double f = 0.0;
  double g = 0.0;
};

LaxPairValue lax_fg(double x, double w, const PainleveTable& table);

// Exact x-derivatives (d/dx)^j f and (d/dx)^j g for j = 0..order, by
// repeated application of d/dx f = q g, d/dx g = q f - w g and the Painleve
// equation for q. No finite differences.
struct LaxDerivatives {
  std::vector<double> f;  // f[j] = d^j f / dx^j
  std::vector<double> g;
};

LaxDerivatives lax_derivatives(double x, double w, const PainleveTable& table,
                               int order);

// Shared default table (built once, cached in memory and optionally on disk
// under AIRYW_CACHE_DIR). Thread-safe.
const PainleveTable& default_painleve_table();

}  // namespace airyw

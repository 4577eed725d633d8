#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "airyw/params.hpp"
#include "airyw/rng.hpp"

namespace airyw {

// ---------------------------------------------------------------------------
// Empirical distributions and Kolmogorov-Smirnov comparisons.

struct EmpiricalCDF {
  std::vector<double> samples;  // sorted

  explicit EmpiricalCDF(std::vector<double> s);
  std::size_t n() const { return samples.size(); }
  double operator()(double x) const;  // right-continuous ECDF

  double ks_distance(const std::function<double(double)>& cdf) const;
  static double ks_two_sample(const EmpiricalCDF& a, const EmpiricalCDF& b);
  // Asymptotic critical values: P(D > crit) ~ alpha.
  static double ks_critical(std::size_t n, double alpha);
  static double ks_critical_two_sample(std::size_t n1, std::size_t n2, double alpha);
};

// ---------------------------------------------------------------------------
// Reflected Brownian systems.

struct PathEnsemble {
  std::vector<double> times;               // increasing
  std::vector<std::vector<double>> paths;  // paths[k][i], ordered in k
};

// Skorokhod reflection of f upward off z on a common grid:
// (R_z f)(t) = f(t) + max(0, max_{s<=t}(z(s) - f(s))).
std::vector<double> skorokhod_reflect(const std::vector<double>& f,
                                      const std::vector<double>& z);

// Recursive Skorokhod construction of m Brownian motions with drifts -2 b_k
// and diffusivity 2, Z_1 reflected off the origin and Z_k off Z_{k-1}, all
// started at 0. Returns the post-burn-in window [T_burn, T_burn + horizon].
PathEnsemble rbm_stationary_sample(int m, const std::vector<double>& b,
                                   double T_burn, double dt, double horizon,
                                   std::uint64_t seed);

// ---------------------------------------------------------------------------
// Non-intersecting Brownian bridges via Hermitian matrix bridges.

struct NibbOptions {
  int time_steps = 200;      // uniform grid on [-1, 1]
  int refine_levels = 6;     // dyadic refinement rounds near the argmax
  unsigned max_threads = 0;  // 0 = hardware
};

// One sample of sqrt(2) N^{1/6} (max_t lambda_max(t) - sqrt(2N)) for the
// bridge ensemble whose top m endpoints scale as sqrt(2N)(1 - b_i N^{-1/3}).
// Requires all a_i infinite (outliers start at the origin).
double nibb_max_sample(int N, const WandererParams& params, int time_steps,
                       std::uint64_t seed);

// n_samples independent samples, parallel over disjoint per-sample streams;
// the result is independent of thread count.
std::vector<double> nibb_max_samples(int N, const WandererParams& params,
                                     int n_samples, std::uint64_t seed,
                                     const NibbOptions& opts = {});

// ---------------------------------------------------------------------------
// Last passage percolation with boundary sources.

struct LPPGrid {
  std::vector<double> alpha_hat, beta_hat;
  std::vector<std::vector<double>> weights;  // weights[i-1][j-1], i+j <= N+1
  std::vector<std::vector<double>> passage;  // point-to-line table M(i,j)
};

// Exponential weights with rates alpha_i + beta_j on the staircase
// i, j >= 1, i + j <= N+1; passage table M(i,j) = w_ij + max over up/right.
LPPGrid lpp_sample(int N, const std::vector<double>& alpha_hat,
                   const std::vector<double>& beta_hat, std::uint64_t seed);

// (L^line(1,N), ..., L^line(1,1)) for the anti-diagonal k + l = N + 1.
std::vector<double> lpp_point_to_line(int N, const std::vector<double>& alpha_hat,
                                      const std::vector<double>& beta_hat,
                                      std::uint64_t seed);

// ---------------------------------------------------------------------------
// PushTASEP (discrete time, left geometric jumps) and TASEP.

// One right-to-left update with Geom[q] left jumps; positions strictly
// decreasing. The drawn jump variables are appended to *xi_out when given
// (one per particle, in particle order).
std::vector<long long> pushtasep_evolve(const std::vector<long long>& state,
                                        double q, Rng& rng,
                                        std::vector<long long>* xi_out = nullptr);

// Continuous-time TASEP: right jumps at rate 1 under exclusion, run until
// time t. Positions strictly decreasing, X(1) rightmost.
std::vector<long long> tasep_simulate(const std::vector<long long>& initial,
                                      double t, std::uint64_t seed);

// Transition probability P(X_t = x_target | X_0) by the determinantal Green
// function, N <= 3. With push_q nonempty the one-step symbol is multiplied by
// the PushTASEP factors q_k w/(w - (1-q_k)) (initial data produced by
// discrete PushTASEP steps).
double schutz_probability(const std::vector<long long>& X0,
                          const std::vector<long long>& x_target, double t,
                          const std::vector<double>& push_q = {});

}  // namespace airyw

#include "airyw/mc.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

#include "airyw/contour.hpp"
#include "airyw/errors.hpp"
#include "airyw/parallel.hpp"

namespace airyw {

// ---------------------------------------------------------------------------
// Empirical CDF / KS.

EmpiricalCDF::EmpiricalCDF(std::vector<double> s) : samples(std::move(s)) {
  std::sort(samples.begin(), samples.end());
}

double EmpiricalCDF::operator()(double x) const {
  return static_cast<double>(std::upper_bound(samples.begin(), samples.end(), x) -
                             samples.begin()) /
         static_cast<double>(samples.size());
}

double EmpiricalCDF::ks_distance(const std::function<double(double)>& cdf) const {
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double F = cdf(samples[i]);
    d = std::max(d, std::abs(F - static_cast<double>(i) / n));
    d = std::max(d, std::abs(F - static_cast<double>(i + 1) / n));
  }
  return d;
}

double EmpiricalCDF::ks_two_sample(const EmpiricalCDF& a, const EmpiricalCDF& b) {
  double d = 0.0;
  std::size_t i = 0, j = 0;
  const double na = static_cast<double>(a.n()), nb = static_cast<double>(b.n());
  while (i < a.n() && j < b.n()) {
    const double x = std::min(a.samples[i], b.samples[j]);
    while (i < a.n() && a.samples[i] <= x) ++i;
    while (j < b.n() && b.samples[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double EmpiricalCDF::ks_critical(std::size_t n, double alpha) {
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

double EmpiricalCDF::ks_critical_two_sample(std::size_t n1, std::size_t n2,
                                            double alpha) {
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) *
         std::sqrt(static_cast<double>(n1 + n2) /
                   (static_cast<double>(n1) * static_cast<double>(n2)));
}

// ---------------------------------------------------------------------------
// Skorokhod reflection and reflected Brownian systems.

std::vector<double> skorokhod_reflect(const std::vector<double>& f,
                                      const std::vector<double>& z) {
  if (f.size() != z.size())
    throw GridMismatch("skorokhod_reflect: paths on different grids");
  std::vector<double> out(f.size());
  double running = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    running = std::max(running, z[i] - f[i]);
    out[i] = f[i] + running;
  }
  return out;
}

PathEnsemble rbm_stationary_sample(int m, const std::vector<double>& b,
                                   double T_burn, double dt, double horizon,
                                   std::uint64_t seed) {
  if (m < 1 || static_cast<int>(b.size()) != m)
    throw ConfigError("rbm_stationary_sample: need m positive drifts");
  double bmin = kInf;
  for (double x : b) {
    if (!(x > 0.0)) throw ConfigError("rbm_stationary_sample: drifts must be positive");
    bmin = std::min(bmin, x);
  }
  if (T_burn < 50.0 / bmin)
    throw ConfigError("rbm_stationary_sample: burn-in below 50/min(b)");
  if (!(dt > 0.0) || !(horizon >= 0.0))
    throw ConfigError("rbm_stationary_sample: bad dt/horizon");

  const std::size_t steps = static_cast<std::size_t>(std::ceil((T_burn + horizon) / dt));
  Rng rng(seed);
  std::vector<double> lower(steps + 1, 0.0);  // the wall, then Z_{k-1}
  PathEnsemble out;
  std::vector<std::vector<double>> full(m);
  const double sd = std::sqrt(2.0 * dt);
  for (int k = 0; k < m; ++k) {
    std::vector<double> w(steps + 1);
    w[0] = 0.0;
    for (std::size_t i = 1; i <= steps; ++i)
      w[i] = w[i - 1] - 2.0 * b[k] * dt + sd * rng.normal();
    full[k] = skorokhod_reflect(w, lower);
    lower = full[k];
  }
  const std::size_t first = static_cast<std::size_t>(std::floor(T_burn / dt));
  out.times.reserve(steps + 1 - first);
  for (std::size_t i = first; i <= steps; ++i) out.times.push_back(i * dt);
  out.paths.resize(m);
  for (int k = 0; k < m; ++k)
    out.paths[k].assign(full[k].begin() + first, full[k].end());
  return out;
}

// ---------------------------------------------------------------------------
// Hermitian bridge sampler.

namespace {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Adds a Hermitian Gaussian increment with per-entry variance `var`
// (E|dH_ij|^2 = var off-diagonal, Var(dH_ii) = var).
void add_hermitian_noise(Matrix& h, double var, Rng& rng) {
  const int n = static_cast<int>(h.rows());
  const double d_off = std::sqrt(0.5 * var);
  const double d_diag = std::sqrt(var);
  for (int i = 0; i < n; ++i) {
    h(i, i) += d_diag * rng.normal();
    for (int j = i + 1; j < n; ++j) {
      const std::complex<double> z(d_off * rng.normal(), d_off * rng.normal());
      h(i, j) += z;
      h(j, i) += std::conj(z);
    }
  }
}

// Same increment from a pre-drawn flat buffer of n^2 standard normals.
void add_hermitian_from(Matrix& h, const double* buf, double var) {
  const int n = static_cast<int>(h.rows());
  const double d_off = std::sqrt(0.5 * var);
  const double d_diag = std::sqrt(var);
  for (int i = 0; i < n; ++i) h(i, i) += d_diag * buf[i];
  const double* p = buf + n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::complex<double> z(d_off * p[0], d_off * p[1]);
      p += 2;
      h(i, j) += z;
      h(j, i) += std::conj(z);
    }
}

// Workspace-reusing Lanczos for the largest eigenvalue, with full
// reorthogonalization, warm-started from `v` (updated to the top Ritz
// vector). `scale` is a magnitude estimate for the convergence test.
struct LanczosWorkspace {
  Matrix basis;  // n x kmax
  Vector w;
  std::vector<double> alpha, beta;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small;

  double top(const Matrix& h, Vector& v, double scale, double tol = 1e-10) {
    const int n = static_cast<int>(h.rows());
    const int kmax = std::min(n, 48);
    if (basis.rows() != n) basis.resize(n, kmax);
    alpha.clear();
    beta.clear();
    double nrm = v.norm();
    if (!(nrm > 0.0)) {
      v = Vector::Ones(n);
      nrm = v.norm();
    }
    basis.col(0) = v / nrm;
    double prev_ritz = -kInf;
    for (int k = 0; k < kmax; ++k) {
      w.noalias() = h * basis.col(k);
      const double a = basis.col(k).dot(w).real();
      alpha.push_back(a);
      w -= a * basis.col(k);
      if (k > 0) w -= beta.back() * basis.col(k - 1);
      // reorthogonalize against the whole basis
      auto B = basis.leftCols(k + 1);
      w -= B * (B.adjoint() * w);
      const double bnorm = w.norm();
      const bool exhausted = bnorm < 1e-13 * std::max(scale, 1.0) || k == kmax - 1;
      if ((k >= 3 && k % 2 == 1) || exhausted) {
        const int kk = static_cast<int>(alpha.size());
        Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(kk, kk);
        for (int i = 0; i < kk; ++i) {
          tri(i, i) = alpha[i];
          if (i + 1 < kk) tri(i, i + 1) = tri(i + 1, i) = beta[i];
        }
        small.compute(tri);
        const double ritz = small.eigenvalues()(kk - 1);
        if (std::abs(ritz - prev_ritz) < tol * std::max(scale, 1.0) || exhausted) {
          v.noalias() = basis.leftCols(kk) * small.eigenvectors().col(kk - 1);
          return ritz;
        }
        prev_ritz = ritz;
      }
      beta.push_back(bnorm);
      basis.col(k + 1) = w / bnorm;
    }
    return prev_ritz;  // unreachable
  }
};

struct BridgePoint {
  double t;
  Matrix h;
  double lambda;
  Vector ritz;
};

}  // namespace

namespace {

double nibb_sample_impl(int N, const Eigen::VectorXd& endpoint, int time_steps,
                        int refine_levels, Rng& rng) {
  const int S = time_steps;
  const double dt = 2.0 / (S - 1);
  const double sqrt2N = std::sqrt(2.0 * N);
  const double scale = sqrt2N + endpoint.cwiseAbs().maxCoeff() + 1.0;

  // W is a Hermitian Brownian motion from time -1; the bridge to the target
  // diagonal is H(t) = W(t) - c(t) W(1) + c(t) diag(endpoint), c(t)=(t+1)/2.
  // Two passes over the same increment stream keep memory at O(1) matrices:
  // the first accumulates W(1), the second replays the increments.
  Rng replay = rng;
  Matrix w_final = Matrix::Zero(N, N);
  for (int j = 1; j < S; ++j) add_hermitian_noise(w_final, dt, rng);

  LanczosWorkspace lanczos;
  Vector v = Vector::Ones(N).eval();
  v /= v.norm();
  Matrix w_cur = Matrix::Zero(N, N);
  Matrix h(N, N), h_prev(N, N);
  std::vector<double> lambda(S);
  std::vector<Vector> ritz(S);
  int best = 0;
  // Ring of bridge matrices around the running argmax for refinement.
  Matrix best_prev, best_cur, best_next;
  bool want_next = false;
  for (int j = 0; j < S; ++j) {
    if (j > 0) add_hermitian_noise(w_cur, dt, replay);
    const double c = 0.5 * j * dt;  // (t_j + 1)/2
    h = w_cur - c * w_final;
    for (int i = 0; i < N; ++i) h(i, i) += c * endpoint(i);
    lambda[j] = lanczos.top(h, v, scale);
    ritz[j] = v;
    if (want_next) {
      best_next = h;
      want_next = false;
    }
    if (j == 0 || lambda[j] > lambda[best]) {
      best = j;
      best_prev = (j > 0) ? h_prev : h;
      best_cur = h;
      want_next = true;
    }
    std::swap(h_prev, h);
  }

  // Dyadic refinement of the bridge around the argmax: a midpoint is
  // Gaussian around the average of its endpoint matrices, with conditional
  // entry variance delta/4 (the global bridge conditioning is already in
  // the endpoints).
  std::vector<BridgePoint> local;
  const double t_best = -1.0 + best * dt;
  if (best > 0)
    local.push_back({t_best - dt, best_prev, lambda[best - 1], ritz[best - 1]});
  local.push_back({t_best, best_cur, lambda[best], ritz[best]});
  if (best + 1 < S)
    local.push_back({t_best + dt, best_next, lambda[best + 1], ritz[best + 1]});
  for (int lev = 0; lev < refine_levels; ++lev) {
    int ib = 0;
    for (std::size_t i = 1; i < local.size(); ++i)
      if (local[i].lambda > local[ib].lambda) ib = static_cast<int>(i);
    std::vector<BridgePoint> next;
    for (std::size_t i = 0; i < local.size(); ++i) {
      next.push_back(local[i]);
      if (i + 1 >= local.size()) break;
      const bool adjacent =
          static_cast<int>(i) == ib - 1 || static_cast<int>(i) == ib;
      if (!adjacent) continue;
      BridgePoint mid;
      mid.t = 0.5 * (local[i].t + local[i + 1].t);
      mid.h = 0.5 * (local[i].h + local[i + 1].h);
      add_hermitian_noise(mid.h, 0.25 * (local[i + 1].t - local[i].t), rng);
      Vector vv = local[i].lambda >= local[i + 1].lambda ? local[i].ritz
                                                         : local[i + 1].ritz;
      mid.lambda = lanczos.top(mid.h, vv, scale);
      mid.ritz = vv;
      next.push_back(std::move(mid));
    }
    local = std::move(next);
  }
  double lam_best = lambda[best];
  for (const auto& p : local) lam_best = std::max(lam_best, p.lambda);
  return std::sqrt(2.0) * std::pow(static_cast<double>(N), 1.0 / 6.0) *
         (lam_best - sqrt2N);
}

Eigen::VectorXd nibb_endpoint(int N, const WandererParams& params) {
  params.validate();
  if (!params.all_a_infinite())
    throw ConfigError("nibb_max_sample: finite a outliers are not supported");
  if (N < 16) throw ConfigError("nibb_max_sample: need N >= 16");
  const std::vector<double> b = params.finite_b();
  const double sqrt2N = std::sqrt(2.0 * N);
  Eigen::VectorXd endpoint = Eigen::VectorXd::Zero(N);
  for (std::size_t i = 0; i < b.size() && static_cast<int>(i) < N; ++i)
    endpoint(static_cast<int>(i)) =
        sqrt2N * (1.0 - b[i] / std::cbrt(static_cast<double>(N)));
  return endpoint;
}

}  // namespace

double nibb_max_sample(int N, const WandererParams& params, int time_steps,
                       std::uint64_t seed) {
  if (time_steps < 8) throw ConfigError("nibb_max_sample: need time_steps >= 8");
  const Eigen::VectorXd endpoint = nibb_endpoint(N, params);
  Rng rng(seed);
  return nibb_sample_impl(N, endpoint, time_steps, 6, rng);
}

std::vector<double> nibb_max_samples(int N, const WandererParams& params,
                                     int n_samples, std::uint64_t seed,
                                     const NibbOptions& opts) {
  if (opts.time_steps < 8) throw ConfigError("nibb_max_samples: need time_steps >= 8");
  const Eigen::VectorXd endpoint = nibb_endpoint(N, params);
  std::vector<double> out(n_samples);
  parallel_for(
      static_cast<std::size_t>(n_samples),
      [&](std::size_t i) {
        Rng rng(seed, i + 1);  // counter-based per-sample stream
        out[i] = nibb_sample_impl(N, endpoint, opts.time_steps, opts.refine_levels, rng);
      },
      opts.max_threads);
  return out;
}

// ---------------------------------------------------------------------------
// LPP.

LPPGrid lpp_sample(int N, const std::vector<double>& alpha_hat,
                   const std::vector<double>& beta_hat, std::uint64_t seed) {
  if (N < 1 || static_cast<int>(alpha_hat.size()) < N ||
      static_cast<int>(beta_hat.size()) < N)
    throw ConfigError("lpp_sample: need N rates in each direction");
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N - i; ++j)
      if (!(alpha_hat[i] + beta_hat[j] > 0.0))
        throw ConfigError("lpp_sample: need alpha_i + beta_j > 0");
  LPPGrid g;
  g.alpha_hat.assign(alpha_hat.begin(), alpha_hat.begin() + N);
  g.beta_hat.assign(beta_hat.begin(), beta_hat.begin() + N);
  Rng rng(seed);
  g.weights.assign(N, {});
  for (int i = 1; i <= N; ++i) {
    g.weights[i - 1].resize(N + 1 - i);
    for (int j = 1; j <= N + 1 - i; ++j)
      g.weights[i - 1][j - 1] = rng.exponential(alpha_hat[i - 1] + beta_hat[j - 1]);
  }
  // Backward point-to-line table: M(i,j) = w_ij + max(M(i+1,j), M(i,j+1)).
  g.passage.assign(N, {});
  for (int i = N; i >= 1; --i) {
    g.passage[i - 1].resize(N + 1 - i);
    for (int j = N + 1 - i; j >= 1; --j) {
      double down = -kInf, right = -kInf;
      if (i + 1 + j <= N + 1) down = g.passage[i][j - 1];
      if (i + j + 1 <= N + 1) right = g.passage[i - 1][j];
      const double cont = std::max(down, right);
      g.passage[i - 1][j - 1] =
          g.weights[i - 1][j - 1] + (std::isinf(cont) ? 0.0 : cont);
    }
  }
  return g;
}

std::vector<double> lpp_point_to_line(int N, const std::vector<double>& alpha_hat,
                                      const std::vector<double>& beta_hat,
                                      std::uint64_t seed) {
  const LPPGrid g = lpp_sample(N, alpha_hat, beta_hat, seed);
  std::vector<double> out(N);
  for (int j = N; j >= 1; --j) out[N - j] = g.passage[0][j - 1];
  return out;
}

// ---------------------------------------------------------------------------
// PushTASEP / TASEP.

std::vector<long long> pushtasep_evolve(const std::vector<long long>& state,
                                        double q, Rng& rng,
                                        std::vector<long long>* xi_out) {
  if (!(q > 0.0 && q < 1.0)) throw StateInvalid("pushtasep_evolve: q must be in (0,1)");
  for (std::size_t i = 1; i < state.size(); ++i)
    if (state[i] >= state[i - 1])
      throw StateInvalid("pushtasep_evolve: positions must be strictly decreasing");
  std::vector<long long> next(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    const long long xi = rng.geometric(q);
    if (xi_out) xi_out->push_back(xi);
    const long long cap = i == 0 ? state[0] : std::min(next[i - 1] - 1, state[i]);
    next[i] = cap - xi;
  }
  return next;
}

std::vector<long long> tasep_simulate(const std::vector<long long>& initial,
                                      double t, std::uint64_t seed) {
  for (std::size_t i = 1; i < initial.size(); ++i)
    if (initial[i] >= initial[i - 1])
      throw StateInvalid("tasep_simulate: positions must be strictly decreasing");
  if (!(t >= 0.0)) throw ConfigError("tasep_simulate: negative time");
  std::vector<long long> x = initial;
  const int n = static_cast<int>(x.size());
  Rng rng(seed);
  double clock = 0.0;
  for (;;) {
    clock += rng.exponential(static_cast<double>(n));
    if (clock > t) break;
    const int i = std::min(n - 1, static_cast<int>(rng.uniform() * n));
    const bool free = i == 0 || x[i - 1] > x[i] + 1;
    if (free) x[i] += 1;
  }
  return x;
}

namespace {

// F_n(t, x) of the Green function, by trapezoid quadrature on a circle of
// radius R around the origin (spectrally accurate for closed contours).
struct GreenEvaluator {
  double t;
  std::vector<double> push_q;
  double radius = 1.5;
  int nodes = 512;

  double eval(int n, long long x) const {
    std::complex<double> sum(0.0, 0.0);
    for (int j = 0; j < nodes; ++j) {
      const double th = 2.0 * M_PI * j / nodes;
      const std::complex<double> w = radius * std::complex<double>(std::cos(th), std::sin(th));
      std::complex<double> val = std::exp(t * (w - 1.0));
      for (double q : push_q) val *= q * w / (w - (1.0 - q));
      val *= std::pow(1.0 - w, -static_cast<double>(n));
      val *= std::pow(w, -static_cast<double>(x - n + 1));
      sum += val * w;
    }
    double out = (sum / static_cast<double>(nodes)).real();
    if (n % 2 != 0) out = -out;
    return out;
  }
};

}  // namespace

double schutz_probability(const std::vector<long long>& X0,
                          const std::vector<long long>& x_target, double t,
                          const std::vector<double>& push_q) {
  const int n = static_cast<int>(X0.size());
  if (n < 1 || n > 3)
    throw ConfigError("schutz_probability: determinant route limited to N <= 3");
  if (static_cast<int>(x_target.size()) != n)
    throw ConfigError("schutz_probability: size mismatch");
  for (double q : push_q)
    if (!(q > 0.0 && q < 1.0)) throw ConfigError("schutz_probability: bad push q");

  GreenEvaluator ev{t, push_q};
  double prev = 0.0;
  for (int nodes = 256; nodes <= 8192; nodes *= 2) {
    ev.nodes = nodes;
    Eigen::MatrixXd m(n, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        m(i - 1, j - 1) = ev.eval(i - j, x_target[n - i] - X0[n - j]);
    const double det = m.determinant();
    if (nodes > 256 && std::abs(det - prev) < 1e-12 * (1.0 + std::abs(det)))
      return det;
    prev = det;
  }
  throw NonConvergent("schutz_probability: contour refinement did not settle");
}

}  // namespace airyw

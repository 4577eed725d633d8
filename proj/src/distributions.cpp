#include "airyw/distributions.hpp"

#include <Eigen/Dense>
#include <chrono>
#include <cmath>

#include "airyw/errors.hpp"
#include "airyw/fredholm.hpp"

namespace airyw {

namespace {

constexpr double kPow223 = 1.5874010519681994;  // 2^{2/3}
constexpr double kPow213 = 1.2599210498948732;  // 2^{1/3}
constexpr double kCoincidentGap = 1e-4;

double vandermonde(const std::vector<double>& b) {
  double prod = 1.0;
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t k = j + 1; k < b.size(); ++k) prod *= b[k] - b[j];
  return prod;
}

double min_gap(const std::vector<double>& b) {
  double g = kInf;
  for (std::size_t j = 0; j + 1 < b.size(); ++j) g = std::min(g, b[j + 1] - b[j]);
  return g;
}

// Finite-rank route: F = det(I - B) * det(delta_jk - M_jk) with
// M_jk = [prod_{i<j}(b_i - D) (I-B)^{-1} psi_{b_1..b_k}](0), where B is the
// m=0 kernel at the same r and psi_{b_1..b_k} has denominator roots b_1..b_k.
double finite_rank_once(const std::vector<double>& b, double r,
                        const QuadratureGrid& grid) {
  const int m = static_cast<int>(b.size());
  const int n = grid.size();

  PsiSpec kspec;
  kspec.cubic_coeff = 1.0;
  kspec.shift = 2.0 * r;
  PsiEvaluator kpsi(kspec, 0.0, 2.0 * grid.x_max, 1e-12);

  Eigen::MatrixXd mat(n, n);
  std::vector<double> sqw(n);
  for (int i = 0; i < n; ++i) sqw[i] = std::sqrt(grid.weights[i]);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double val = kpsi(grid.nodes[i] + grid.nodes[j]);
      mat(i, j) = sqw[i] * val * sqw[j];
      mat(j, i) = mat(i, j);
    }
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) - mat;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const double f1 = lu.determinant();
  if (m == 0) return f1;

  // Resolvent applied to each psi_{b_1..b_k}, with derivatives up to m-1 at 0.
  Eigen::MatrixXd deriv_at_zero(m, m);  // (l, k-1) -> u_k^{(l)}(0)
  for (int k = 1; k <= m; ++k) {
    PsiSpec rhs;
    rhs.cubic_coeff = 1.0;
    rhs.shift = 2.0 * r;
    rhs.denom_roots.assign(b.begin(), b.begin() + k);
    PsiEvaluator rpsi(rhs, 0.0, grid.x_max, 1e-12);
    Eigen::VectorXd rv(n);
    for (int i = 0; i < n; ++i) rv(i) = sqw[i] * rpsi(grid.nodes[i]);
    Eigen::VectorXd u = lu.solve(rv);
    for (int l = 0; l < m; ++l) {
      double val = rpsi(0.0, l);
      for (int i = 0; i < n; ++i)
        val += grid.weights[i] * kpsi(grid.nodes[i], l) * (u(i) / sqw[i]);
      deriv_at_zero(l, k - 1) = val;
    }
  }

  // Coefficients of prod_{i=1}^{j-1} (b_i - D) over powers of D.
  Eigen::MatrixXd small = Eigen::MatrixXd::Identity(m, m);
  std::vector<double> poly = {1.0};
  for (int j = 1; j <= m; ++j) {
    for (int k = 1; k <= m; ++k) {
      double mjk = 0.0;
      for (std::size_t l = 0; l < poly.size(); ++l)
        mjk += poly[l] * deriv_at_zero(static_cast<int>(l), k - 1);
      small(j - 1, k - 1) -= mjk;
    }
    // poly <- poly * (b_j - D)
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t l = 0; l < poly.size(); ++l) {
      next[l] += b[j - 1] * poly[l];
      next[l + 1] -= poly[l];
    }
    poly = std::move(next);
  }
  return f1 * small.determinant();
}

EvalReport finite_rank_route(const WandererParams& params, double r) {
  if (!params.all_a_infinite())
    throw MethodUnavailable("finite_rank route requires all a_i = +inf");
  const std::vector<double> b = params.finite_b();
  WandererParams kernel_params = params;  // same grid/truncation as det route
  const QuadratureGrid grid = wanderer_grid(kernel_params, r, 128);
  const QuadratureGrid fine = build_grid(grid.x_max, 2 * grid.size());
  EvalReport rep;
  const double coarse = finite_rank_once(b, r, grid);
  rep.value = finite_rank_once(b, r, fine);
  rep.error_estimate = std::abs(rep.value - coarse);
  return rep;
}

EvalReport pii_route(const WandererParams& params, double r, bool use_derivatives,
                     const PainleveTable& table) {
  if (!params.all_a_infinite())
    throw MethodUnavailable("pii routes require all a_i = +inf");
  const std::vector<double> b = params.finite_b();
  const int m = static_cast<int>(b.size());
  const double x = kPow223 * r;
  const double f1 = table.E(x) * table.F(x);
  EvalReport rep;
  rep.error_estimate = 5e-9;  // table + integrator tolerance budget
  if (m == 0) {
    rep.value = f1;
    return rep;
  }
  Eigen::MatrixXd mat(m, m);
  if (use_derivatives) {
    // det[(b_j + D_r)^{k-1}(f - g)], D_r = 2^{2/3} d/dx.
    for (int j = 0; j < m; ++j) {
      const LaxDerivatives ld = lax_derivatives(x, kPow213 * b[j], table, m - 1);
      for (int k = 1; k <= m; ++k) {
        double entry = 0.0;
        double binom = 1.0;
        for (int i = 0; i <= k - 1; ++i) {
          const double dfi = std::pow(kPow223, i) * (ld.f[i] - ld.g[i]);
          entry += binom * std::pow(b[j], k - 1 - i) * dfi;
          binom = binom * (k - 1 - i) / (i + 1);
        }
        mat(j, k - 1) = entry;
      }
    }
  } else {
    // det[b_j^{k-1} (f + (-1)^k g)].
    for (int j = 0; j < m; ++j) {
      const LaxPairValue lv = lax_fg(x, kPow213 * b[j], table);
      for (int k = 1; k <= m; ++k)
        mat(j, k - 1) = std::pow(b[j], k - 1) * (lv.f + (k % 2 == 0 ? lv.g : -lv.g));
    }
  }
  rep.value = f1 * mat.determinant() / vandermonde(b);
  return rep;
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::det: return "det";
    case Method::finite_rank: return "finite_rank";
    case Method::pii1: return "pii1";
    case Method::pii2: return "pii2";
  }
  return "?";
}

Method method_from_name(const std::string& name) {
  if (name == "det") return Method::det;
  if (name == "finite_rank") return Method::finite_rank;
  if (name == "pii1") return Method::pii1;
  if (name == "pii2") return Method::pii2;
  throw InvalidConfig("unknown method: " + name);
}

EvalReport F_wanderers(const WandererParams& params, double r, Method method,
                       const PainleveTable& table) {
  params.validate();
  const auto t0 = std::chrono::steady_clock::now();
  EvalReport rep;
  Method effective = method;
  if ((method == Method::pii1 || method == Method::pii2) &&
      min_gap(params.finite_b()) < kCoincidentGap) {
    effective = Method::det;  // l'Hopital regime: the kernel route is exact there
  }
  switch (effective) {
    case Method::det: {
      const DetResult d = F_det(params, r, 1.0);
      rep.value = d.value;
      rep.error_estimate = d.refinement;
      break;
    }
    case Method::finite_rank:
      rep = finite_rank_route(params, r);
      break;
    case Method::pii1:
      rep = pii_route(params, r, true, table);
      break;
    case Method::pii2:
      rep = pii_route(params, r, false, table);
      break;
  }
  rep.r = r;
  rep.method = method;
  rep.wall_time_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

EvalReport F_wanderers(const WandererParams& params, double r, Method method) {
  return F_wanderers(params, r, method, default_painleve_table());
}

double spiked_tw(int beta, double x, const std::vector<double>& w,
                 const PainleveTable& table) {
  if (beta == 2) {
    const int m = static_cast<int>(w.size());
    if (m < 1 || m > 4) throw DomainError("spiked_tw beta=2: need 1..4 spikes");
    std::vector<double> ws = w;
    std::sort(ws.begin(), ws.end());
    if (min_gap(ws) < kCoincidentGap)
      throw DomainError("spiked_tw beta=2: coincident spikes");
    const double f2 = table.F(x) * table.F(x);
    Eigen::MatrixXd mat(m, m);
    for (int j = 0; j < m; ++j) {
      const LaxDerivatives ld = lax_derivatives(x, ws[j], table, m - 1);
      for (int k = 1; k <= m; ++k) {
        double entry = 0.0;
        double binom = 1.0;
        for (int i = 0; i <= k - 1; ++i) {
          entry += binom * std::pow(ws[j], k - 1 - i) * ld.f[i];
          binom = binom * (k - 1 - i) / (i + 1);
        }
        mat(j, k - 1) = entry;
      }
    }
    return f2 * mat.determinant() / vandermonde(ws);
  }
  if (beta == 4) {
    if (w.size() != 1) throw DomainError("spiked_tw beta=4: rank one only");
    const double xt = kPow223 * x;
    const double wt = kPow213 * w[0];
    const LaxPairValue lv = lax_fg(xt, wt, table);
    const double E = table.E(xt), F = table.F(xt);
    return 0.5 * ((lv.f + lv.g) / E + (lv.f - lv.g) * E) * F;
  }
  throw InvalidConfig("spiked_tw: beta must be 2 or 4");
}

double spiked_tw(int beta, double x, const std::vector<double>& w) {
  return spiked_tw(beta, x, w, default_painleve_table());
}

}  // namespace airyw

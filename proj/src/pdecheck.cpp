#include "airyw/pdecheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "airyw/distributions.hpp"
#include "airyw/errors.hpp"
#include "airyw/fredholm.hpp"

namespace airyw {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void finalize(ResidualReport& rep) {
  rep.max_residual = 0.0;
  std::vector<double> orders;
  for (auto& e : rep.entries) {
    rep.max_residual = std::max(rep.max_residual, std::abs(e.residual_h));
    const double denom = std::abs(e.residual_h2);
    e.order = denom > 0.0 ? std::log2(std::abs(e.residual_h) / denom) : 0.0;
    if (denom > 1e-11 * std::max(rep.residual_scale, 1e-30)) orders.push_back(e.order);
  }
  if (orders.empty()) {
    rep.convergence_order = 2.0;  // residuals at noise floor; nothing to fit
    rep.order_fit_residual = 0.0;
    return;
  }
  std::sort(orders.begin(), orders.end());
  rep.convergence_order = orders[orders.size() / 2];
  double spread = 0.0;
  for (double o : orders) spread = std::max(spread, std::abs(o - rep.convergence_order));
  rep.order_fit_residual = spread;
}

}  // namespace

std::string ResidualReport::to_json() const {
  std::ostringstream os;
  os << "{\"grid_spec\":\"" << grid_spec << "\",\"h\":" << fmt(h)
     << ",\"max_residual\":" << fmt(max_residual)
     << ",\"residual_scale\":" << fmt(residual_scale)
     << ",\"convergence_order\":" << fmt(convergence_order)
     << ",\"order_fit_residual\":" << fmt(order_fit_residual)
     << ",\"conjecture\":" << (conjecture ? "true" : "false") << ",\"entries\":[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    os << (i ? "," : "") << "{\"coords\":[";
    for (std::size_t j = 0; j < e.coords.size(); ++j)
      os << (j ? "," : "") << fmt(e.coords[j]);
    os << "],\"residual_h\":" << fmt(e.residual_h)
       << ",\"residual_h2\":" << fmt(e.residual_h2) << ",\"order\":" << fmt(e.order)
       << "}";
  }
  os << "]}";
  return os.str();
}

std::string ResidualReport::to_csv() const {
  std::ostringstream os;
  os << "coords,residual_h,residual_h2,order\n";
  for (const auto& e : entries) {
    for (std::size_t j = 0; j < e.coords.size(); ++j) os << (j ? " " : "") << fmt(e.coords[j]);
    os << "," << fmt(e.residual_h) << "," << fmt(e.residual_h2) << "," << fmt(e.order)
       << "\n";
  }
  return os.str();
}

namespace {

// PDE residual at one (r, b) point with steps (h_r, h_b) = (h/2, h).
double bv_residual_point(int m, double r, const std::vector<double>& b, double h,
                         const PainleveTable& table, double* scale) {
  const double h_r = 0.5 * h;
  WandererParams p;
  p.m = m;
  p.a.assign(m, kInf);
  p.b = b;
  auto F = [&](const WandererParams& q, double rr) {
    const double val = F_wanderers(q, rr, Method::pii2, table).value;
    if (scale) *scale = std::max(*scale, std::abs(val));
    return val;
  };
  for (int j = 0; j < m; ++j) {
    if (b[j] - h <= 0.0) throw GridError("bv_residual: stencil leaves b > 0");
    for (int k = 0; k < m; ++k)
      if (k != j && std::abs(b[k] - b[j]) <= h)
        throw GridError("bv_residual: stencil collides with a neighboring b");
  }

  const double F0 = F(p, r);
  double res = m * (F(p, r + h_r) - F(p, r - h_r)) / (2.0 * h_r);
  std::vector<double> dFdb(m);
  for (int j = 0; j < m; ++j) {
    WandererParams pp = p, pm = p;
    pp.b[j] += h;
    pm.b[j] -= h;
    // keep the vectors sorted for validation; values only permute
    std::sort(pp.b.begin(), pp.b.end());
    std::sort(pm.b.begin(), pm.b.end());
    const double Fp = F(pp, r), Fm = F(pm, r);
    dFdb[j] = (Fp - Fm) / (2.0 * h);
    res += 0.5 * (Fp - 2.0 * F0 + Fm) / (h * h) + (r - b[j] * b[j]) * dFdb[j];
  }
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) res += (dFdb[k] - dFdb[j]) / (b[k] - b[j]);
  return res;
}

}  // namespace

ResidualReport bv_residual(int m, const std::vector<double>& r_grid,
                           const std::vector<std::vector<double>>& b_points,
                           double h, const PainleveTable& table) {
  if (m < 1 || m > 3) throw InvalidConfig("bv_residual: m must be 1, 2 or 3");
  ResidualReport rep;
  rep.h = h;
  rep.conjecture = m >= 2;
  rep.grid_spec = "bv m=" + std::to_string(m) + " points=" +
                  std::to_string(r_grid.size() * b_points.size());
  for (const auto& b : b_points) {
    if (static_cast<int>(b.size()) != m)
      throw InvalidConfig("bv_residual: b point dimension mismatch");
    for (double r : r_grid) {
      ResidualEntry e;
      e.coords.push_back(r);
      for (double bb : b) e.coords.push_back(bb);
      e.residual_h = bv_residual_point(m, r, b, h, table, &rep.residual_scale);
      e.residual_h2 = bv_residual_point(m, r, b, 0.5 * h, table, nullptr);
      rep.entries.push_back(std::move(e));
    }
  }
  finalize(rep);
  return rep;
}

ResidualReport bv_residual(int m, const std::vector<double>& r_grid,
                           const std::vector<std::vector<double>>& b_points,
                           double h) {
  return bv_residual(m, r_grid, b_points, h, default_painleve_table());
}

namespace {

// KdV residual at one (t, r) with r-step h and t-step h_t = h.
double kdv_residual_point(const WandererParams& params, double t, double r, double h,
                          double* scale) {
  const double h_t = h;
  // One frozen evaluator per t value; each is smooth in r.
  auto logdet_row = [&](double tt, int half_width) {
    FrozenFDet fd(params, r - (half_width + 1) * h, r + (half_width + 1) * h, tt, 160);
    std::vector<double> phi(2 * half_width + 1);
    std::vector<double> L(2 * half_width + 3);
    for (int j = 0; j < static_cast<int>(L.size()); ++j)
      L[j] = fd.log_det(r + (j - half_width - 1) * h);
    for (int j = 0; j < static_cast<int>(phi.size()); ++j)
      phi[j] = (L[j] - 2.0 * L[j + 1] + L[j + 2]) / (h * h);
    return phi;
  };
  const std::vector<double> phi0 = logdet_row(t, 2);       // r-offsets -2..2
  const std::vector<double> phip = logdet_row(t + h_t, 0);  // center only
  const std::vector<double> phim = logdet_row(t - h_t, 0);
  const double phi_c = phi0[2];
  const double phi_t = (phip[0] - phim[0]) / (2.0 * h_t);
  const double phi_r = (phi0[3] - phi0[1]) / (2.0 * h);
  const double phi_rrr =
      (-phi0[0] + 2.0 * phi0[1] - 2.0 * phi0[3] + phi0[4]) / (2.0 * h * h * h);
  if (scale)
    for (double p : phi0) *scale = std::max(*scale, std::abs(p));
  return phi_t + phi_c * phi_r + phi_rrr / 12.0;
}

}  // namespace

ResidualReport kdv_residual(const std::vector<double>& t_grid,
                            const std::vector<double>& r_grid,
                            const WandererParams& params, double h) {
  params.validate();
  for (double t : t_grid)
    if (t < 0.5 - 1e-12 || t > 2.0 + 1e-12)
      throw InvalidConfig("kdv_residual: t must lie in [0.5, 2]");
  ResidualReport rep;
  rep.h = h;
  rep.grid_spec = "kdv m=" + std::to_string(params.m) + " points=" +
                  std::to_string(t_grid.size() * r_grid.size());
  for (double t : t_grid)
    for (double r : r_grid) {
      ResidualEntry e;
      e.coords = {t, r};
      e.residual_h = kdv_residual_point(params, t, r, h, &rep.residual_scale);
      e.residual_h2 = kdv_residual_point(params, t, r, 0.5 * h, nullptr);
      rep.entries.push_back(std::move(e));
    }
  finalize(rep);
  return rep;
}

double kdv_scaling_gap(const WandererParams& params, double r, double t) {
  const double c = std::cbrt(t);
  WandererParams scaled = params;
  for (auto& x : scaled.a) x *= c;
  for (auto& x : scaled.b) x *= c;
  const DetResult lhs = F_det(params, r, t);
  const DetResult rhs = F_det(scaled, r / c, 1.0);
  return std::abs(lhs.value - rhs.value);
}

}  // namespace airyw

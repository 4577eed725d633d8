#include "airyw/painleve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>

#include "airyw/contour.hpp"
#include "airyw/errors.hpp"
#include "airyw/quadrature.hpp"

namespace airyw {

namespace {

// Hastings-McLeod left branch sqrt(-s/2)(1 + s^{-3}/8 - 73 s^{-6}/128) and
// its derivative, used for the Robin closure and the initial profile.
double hm_left_value(double s) {
  const double base = std::sqrt(-0.5 * s);
  const double s3 = s * s * s;
  return base * (1.0 + 0.125 / s3 - (73.0 / 128.0) / (s3 * s3));
}

double hm_left_slope(double s) {
  const double base = std::sqrt(-0.5 * s);
  const double dbase = -0.25 * std::sqrt(-2.0 / s);
  const double s3 = s * s * s;
  const double s4 = s3 * s;
  const double s7 = s3 * s4;
  const double corr = 1.0 + 0.125 / s3 - (73.0 / 128.0) / (s3 * s3);
  const double dcorr = -0.375 / s4 + 6.0 * (73.0 / 128.0) / s7;
  return dbase * corr + base * dcorr;
}

// Banded Newton step for the Numerov system: rows 1..N-2 tridiagonal, row 0
// couples (0,1,2), row N-1 is diagonal. Solves in place, no pivoting (the
// interior is dominated by the 1/h^2 stencil).
void solve_newton_step(std::vector<double>& a00, std::vector<double>& sub,
                       std::vector<double>& diag, std::vector<double>& sup,
                       std::vector<double>& rhs) {
  const int n = static_cast<int>(rhs.size());
  // Eliminate q_0 from row 1 using row 0 (entries a00[0..2]).
  const double factor = sub[1] / a00[0];
  diag[1] -= factor * a00[1];
  sup[1] -= factor * a00[2];
  rhs[1] -= factor * rhs[0];
  sub[1] = 0.0;
  // Thomas sweep over rows 1..n-1.
  for (int i = 2; i < n; ++i) {
    const double m = sub[i] / diag[i - 1];
    diag[i] -= m * sup[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  rhs[n - 1] /= diag[n - 1];
  for (int i = n - 2; i >= 1; --i) rhs[i] = (rhs[i] - sup[i] * rhs[i + 1]) / diag[i];
  rhs[0] = (rhs[0] - a00[1] * rhs[1] - a00[2] * rhs[2]) / a00[0];
}

struct NumerovProblem {
  double s_L, s_R, h;
  int n;
  double ai_R, slope_L;

  double s_at(int i) const { return s_L + h * i; }
  static double f(double q, double s) { return 2.0 * q * q * q + s * q; }
  static double fq(double q, double s) { return 6.0 * q * q + s; }

  void residual(const std::vector<double>& q, std::vector<double>& r) const {
    r.resize(n);
    r[0] = (-3.0 * q[0] + 4.0 * q[1] - q[2]) / (2.0 * h) - slope_L;
    const double ih2 = 1.0 / (h * h);
    for (int i = 1; i < n - 1; ++i) {
      const double fi = f(q[i], s_at(i));
      const double fm = f(q[i - 1], s_at(i - 1));
      const double fp = f(q[i + 1], s_at(i + 1));
      r[i] = (q[i - 1] - 2.0 * q[i] + q[i + 1]) * ih2 - (fm + 10.0 * fi + fp) / 12.0;
    }
    r[n - 1] = q[n - 1] - ai_R;
  }

  double newton(std::vector<double>& q, int max_iter, double tol) const {
    std::vector<double> r, dq, a00(3), sub(n), diag(n), sup(n);
    residual(q, r);
    double rn = 0.0;
    for (double x : r) rn = std::max(rn, std::abs(x));
    for (int iter = 0; iter < max_iter; ++iter) {
      if (rn < tol) break;
      a00[0] = -1.5 / h;
      a00[1] = 2.0 / h;
      a00[2] = -0.5 / h;
      const double ih2 = 1.0 / (h * h);
      for (int i = 1; i < n - 1; ++i) {
        sub[i] = ih2 - fq(q[i - 1], s_at(i - 1)) / 12.0;
        diag[i] = -2.0 * ih2 - 10.0 * fq(q[i], s_at(i)) / 12.0;
        sup[i] = ih2 - fq(q[i + 1], s_at(i + 1)) / 12.0;
      }
      diag[n - 1] = 1.0;
      sub[n - 1] = 0.0;
      dq = r;
      solve_newton_step(a00, sub, diag, sup, dq);
      double lambda = 1.0;
      std::vector<double> trial(n), rt;
      for (int back = 0; back < 50; ++back) {
        for (int i = 0; i < n; ++i) trial[i] = q[i] - lambda * dq[i];
        residual(trial, rt);
        double rtn = 0.0;
        for (double x : rt) rtn = std::max(rtn, std::abs(x));
        if (rtn <= (1.0 - 0.25 * lambda) * rn || rtn < tol) {
          q = trial;
          r = rt;
          rn = rtn;
          break;
        }
        lambda *= 0.5;
        if (lambda < 1e-6) return rn;  // stalled; caller decides
      }
    }
    return rn;
  }
};

// Corrected-trapezoid cumulative integral from the right: values y with
// derivatives yp on a uniform grid; out[i] = Int_{s_i}^{s_R} y.
void cumulative_from_right(const std::vector<double>& y, const std::vector<double>& yp,
                           double h, std::vector<double>& out) {
  const int n = static_cast<int>(y.size());
  out.assign(n, 0.0);
  for (int i = n - 2; i >= 0; --i) {
    const double piece =
        0.5 * h * (y[i] + y[i + 1]) + h * h / 12.0 * (yp[i] - yp[i + 1]);
    out[i] = out[i + 1] + piece;
  }
}

double airy_tail_integral(double s0, bool v_integrand) {
  // Int_{s0}^inf Ai(x) dx, or Int_{s0}^inf (Ai'(x)^2 - x Ai(x)^2) dx when
  // v_integrand is set (the latter equals Int_{s0}^inf v with q ~ Ai).
  std::vector<double> xs, ws;
  gauss_legendre(64, xs, ws);
  const double len = 16.0;
  double sum = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double x = s0 + 0.5 * len * (xs[i] + 1.0);
    const double w = 0.5 * len * ws[i];
    if (v_integrand) {
      const double ai = airy_ai(x, 0), aip = airy_ai(x, 1);
      sum += w * (aip * aip - x * ai * ai);
    } else {
      sum += w * airy_ai(x, 0);
    }
  }
  return sum;
}

}  // namespace

int PainleveTable::cell(double s) const {
  int i = static_cast<int>(std::floor((s - s_left_) / h_));
  return std::clamp(i, 0, size() - 2);
}

void PainleveTable::check_range(double s) const {
  if (s < s_left_ - 1e-12 || s > s_right_ + 1e-12)
    throw OutOfTableRange("PainleveTable: s = " + std::to_string(s) +
                          " outside [" + std::to_string(s_left_) + ", " +
                          std::to_string(s_right_) + "]");
}

namespace {
inline double hermite(double t, double h, double y0, double d0, double y1, double d1) {
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * d0 +
         (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * h * d1;
}
}  // namespace

double PainleveTable::q(double s) const {
  check_range(s);
  const int i = cell(s);
  const double t = (s - s_node(i)) / h_;
  return hermite(t, h_, q_[i], qp_[i], q_[i + 1], qp_[i + 1]);
}

double PainleveTable::q_prime(double s) const {
  check_range(s);
  const int i = cell(s);
  const double t = (s - s_node(i)) / h_;
  auto qpp = [this](int j) {
    return 2.0 * q_[j] * q_[j] * q_[j] + s_node(j) * q_[j];
  };
  return hermite(t, h_, qp_[i], qpp(i), qp_[i + 1], qpp(i + 1));
}

double PainleveTable::v(double s) const {
  check_range(s);
  const int i = cell(s);
  const double t = (s - s_node(i)) / h_;
  return hermite(t, h_, v_[i], -q_[i] * q_[i], v_[i + 1], -q_[i + 1] * q_[i + 1]);
}

double PainleveTable::E(double s) const {
  check_range(s);
  const int i = cell(s);
  const double t = (s - s_node(i)) / h_;
  return hermite(t, h_, E_[i], 0.5 * q_[i] * E_[i], E_[i + 1], 0.5 * q_[i + 1] * E_[i + 1]);
}

double PainleveTable::F(double s) const {
  check_range(s);
  const int i = cell(s);
  const double t = (s - s_node(i)) / h_;
  return hermite(t, h_, F_[i], 0.5 * v_[i] * F_[i], F_[i + 1], 0.5 * v_[i + 1] * F_[i + 1]);
}

PainleveTable hm_solve(double s_L, double s_R, int n) {
  if (s_L > -8.0) throw InvalidConfig("hm_solve: need s_L <= -8");
  if (s_R < 6.0) throw InvalidConfig("hm_solve: need s_R >= 6");
  if (n < 200) throw InvalidConfig("hm_solve: need n >= 200");

  const double ai_R = airy_ai(s_R, 0);
  const double slope_L = hm_left_slope(s_L);

  auto initial_profile = [&](double s) {
    const double ai = airy_ai(s, 0);
    return s < 0.0 ? std::max(ai, hm_left_value(s)) : std::max(ai, 0.0);
  };

  // Grid continuation: coarse solve, then double toward the target count.
  int n_coarse = 2251;
  while (n_coarse > n) n_coarse = (n_coarse + 1) / 2;
  std::vector<int> ladder;
  for (int k = n_coarse; k < n; k = 2 * (k - 1) + 1) ladder.push_back(k);
  ladder.push_back(n);

  std::vector<double> q;
  double h_prev = 0.0, rn = 0.0;
  std::vector<double> q_prev;
  for (std::size_t stage = 0; stage < ladder.size(); ++stage) {
    const int nk = ladder[stage];
    NumerovProblem prob{s_L, s_R, (s_R - s_L) / (nk - 1), nk, ai_R, slope_L};
    std::vector<double> qk(nk);
    if (stage == 0) {
      for (int i = 0; i < nk; ++i) qk[i] = initial_profile(prob.s_at(i));
    } else {
      for (int i = 0; i < nk; ++i) {
        const double s = prob.s_at(i);
        const double u = (s - s_L) / h_prev;
        const int j = std::clamp(static_cast<int>(u), 0, static_cast<int>(q_prev.size()) - 2);
        const double t = u - j;
        qk[i] = (1.0 - t) * q_prev[j] + t * q_prev[j + 1];
      }
    }
    const double tol = std::max(1e-11, 8e-16 / (prob.h * prob.h));
    rn = prob.newton(qk, 60, tol);
    if (rn > 1e-6)
      throw NewtonDiverged("hm_solve: Newton stalled on stage " + std::to_string(stage), rn);
    q_prev = qk;
    h_prev = prob.h;
    q = std::move(qk);
  }

  PainleveTable table;
  table.s_left_ = s_L;
  table.s_right_ = s_R;
  table.h_ = (s_R - s_L) / (n - 1);
  table.collocation_residual_ = rn;
  table.q_ = std::move(q);

  // q' by 4th-order differences; boundary values come from the closures.
  const double h = table.h_;
  auto& qv = table.q_;
  table.qp_.assign(n, 0.0);
  for (int i = 2; i < n - 2; ++i)
    table.qp_[i] = (qv[i - 2] - 8.0 * qv[i - 1] + 8.0 * qv[i + 1] - qv[i + 2]) / (12.0 * h);
  table.qp_[0] = slope_L;
  table.qp_[1] = (-3.0 * qv[0] - 10.0 * qv[1] + 18.0 * qv[2] - 6.0 * qv[3] + qv[4]) / (12.0 * h);
  table.qp_[n - 2] =
      -(-3.0 * qv[n - 1] - 10.0 * qv[n - 2] + 18.0 * qv[n - 3] - 6.0 * qv[n - 4] + qv[n - 5]) /
      (12.0 * h);
  table.qp_[n - 1] = airy_ai(s_R, 1);

  // v, E, F by corrected-trapezoid cumulatives plus Airy tails beyond s_R.
  std::vector<double> q2(n), q2p(n);
  for (int i = 0; i < n; ++i) {
    q2[i] = qv[i] * qv[i];
    q2p[i] = 2.0 * qv[i] * table.qp_[i];
  }
  std::vector<double> int_q2, int_q;
  cumulative_from_right(q2, q2p, h, int_q2);
  cumulative_from_right(qv, table.qp_, h, int_q);
  const double tail_q2 = [&] {
    const double ai = airy_ai(s_R, 0), aip = airy_ai(s_R, 1);
    return aip * aip - s_R * ai * ai;
  }();
  const double tail_q = airy_tail_integral(s_R, false);
  table.v_.assign(n, 0.0);
  table.E_.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    table.v_[i] = int_q2[i] + tail_q2;
    table.E_[i] = std::exp(-0.5 * (int_q[i] + tail_q));
  }
  std::vector<double> vp(n);
  for (int i = 0; i < n; ++i) vp[i] = -q2[i];
  std::vector<double> int_v;
  cumulative_from_right(table.v_, vp, h, int_v);
  const double tail_v = airy_tail_integral(s_R, true);
  table.F_.assign(n, 0.0);
  for (int i = 0; i < n; ++i) table.F_[i] = std::exp(-0.5 * (int_v[i] + tail_v));
  return table;
}

// ---------------------------------------------------------------------------
// Lax pair evaluation.

namespace {

constexpr double kLaxMatchW = 12.0;

// Large-w series f ~ 1 + sum f_k w^-k, g ~ sum g_k w^-k with coefficients
// driven by q, q', v at the given x. The series is asymptotic; it is summed
// to its globally smallest term (individual coefficients can dip through
// sign changes, so the cutoff must not stop at the first local increase).
void lax_series(double x, double q, double qp, double v, double w, double& f,
                double& g) {
  (void)x;
  const int kmax = 30;
  std::vector<double> fk(kmax + 1, 0.0), gk(kmax + 1, 0.0);
  fk[0] = 1.0;
  gk[1] = q;
  for (int k = 1; k < kmax; ++k) {
    fk[k] = (q / k) *
            (-(v / (q * q)) * gk[k] + (k - 1) * (qp * fk[k - 1] / (q * q) - gk[k - 1]));
    gk[k + 1] = q * fk[k] - (qp / q) * gk[k] + ((k - 1) / q) * fk[k - 1];
  }
  fk[kmax] = (q / kmax) * (-(v / (q * q)) * gk[kmax] +
                           (kmax - 1) * (qp * fk[kmax - 1] / (q * q) - gk[kmax - 1]));
  int cut = kmax;
  double best = kInf;
  double wpow = 1.0;
  for (int k = 1; k <= kmax; ++k) {
    wpow /= w;
    const double mag = std::max(std::abs(fk[k]), std::abs(gk[k])) * wpow;
    if (mag < best) {
      best = mag;
      cut = k;
    }
    if (mag > 1e3 * best) break;  // safely past the optimal index
  }
  f = 0.0;
  g = 0.0;
  wpow = std::pow(1.0 / w, cut);
  for (int k = cut; k >= 1; --k) {  // small terms first
    f += fk[k] * wpow;
    g += gk[k] * wpow;
    wpow *= w;
  }
  f += 1.0;
}

struct LaxSystem {
  double q, qp, x;
  void deriv(double w, const double y[2], double dy[2]) const {
    dy[0] = q * q * y[0] + (-w * q - qp) * y[1];
    dy[1] = (-w * q + qp) * y[0] + (w * w - x - q * q) * y[1];
  }
};

// Dormand-Prince 5(4), integrating from w0 to w1 (either direction).
void dopri5(const LaxSystem& sys, double w0, double w1, double y[2], double rtol,
            double atol) {
  static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                      a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                      a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                      e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  const double dir = w1 >= w0 ? 1.0 : -1.0;
  double w = w0;
  double h = dir * std::min(0.05, std::abs(w1 - w0));
  double k1[2], k2[2], k3[2], k4[2], k5[2], k6[2], k7[2], yt[2], y5[2];
  sys.deriv(w, y, k1);
  int steps = 0;
  while (dir * (w1 - w) > 1e-14) {
    if (++steps > 2000000) throw NonConvergent("lax_fg: integrator step limit");
    if (dir * (w + h - w1) > 0.0) h = w1 - w;
    for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * a21 * k1[i];
    sys.deriv(w + c2 * h, yt, k2);
    for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    sys.deriv(w + c3 * h, yt, k3);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    sys.deriv(w + c4 * h, yt, k4);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    sys.deriv(w + c5 * h, yt, k5);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                          a65 * k5[i]);
    sys.deriv(w + h, yt, k6);
    for (int i = 0; i < 2; ++i)
      y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    sys.deriv(w + h, y5, k7);
    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                             e6 * k6[i] + e7 * k7[i]);
      const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err = std::max(err, std::abs(ei) / sc);
    }
    if (err <= 1.0) {
      w += h;
      y[0] = y5[0];
      y[1] = y5[1];
      k1[0] = k7[0];
      k1[1] = k7[1];
    }
    const double fac = std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
    h *= fac;
  }
}

}  // namespace

LaxPairValue lax_fg(double x, double w, const PainleveTable& table) {
  if (w < 0.0) throw InvalidConfig("lax_fg: w must be non-negative");
  const double q = table.q(x);
  const double qp = table.q_prime(x);
  const double v = table.v(x);
  LaxPairValue out;
  out.x = x;
  out.w = w;
  if (w >= kLaxMatchW) {
    lax_series(x, q, qp, v, w, out.f, out.g);
    return out;
  }
  double y[2];
  lax_series(x, q, qp, v, kLaxMatchW, y[0], y[1]);
  LaxSystem sys{q, qp, x};
  dopri5(sys, kLaxMatchW, w, y, 1e-12, 1e-14);
  out.f = y[0];
  out.g = y[1];
  return out;
}

LaxDerivatives lax_derivatives(double x, double w, const PainleveTable& table,
                               int order) {
  if (order < 0 || order > 12) throw InvalidConfig("lax_derivatives: order out of range");
  const LaxPairValue base = lax_fg(x, w, table);
  // Derivatives of q from the Painleve equation.
  std::vector<double> qd(order + 2, 0.0);
  qd[0] = table.q(x);
  if (order + 1 >= 1) qd[1] = table.q_prime(x);
  auto binom = [](int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int j = 0; j + 2 <= order + 1; ++j) {
    // q^{(j+2)} = d^j (2 q^3 + x q)
    std::vector<double> q2(j + 1, 0.0), q3(j + 1, 0.0);
    for (int i = 0; i <= j; ++i)
      for (int l = 0; l <= i; ++l) q2[i] += binom(i, l) * qd[l] * qd[i - l];
    for (int i = 0; i <= j; ++i)
      for (int l = 0; l <= i; ++l) q3[i] += binom(i, l) * q2[l] * qd[i - l];
    double xq = x * qd[j] + (j >= 1 ? j * qd[j - 1] : 0.0);
    qd[j + 2] = 2.0 * q3[j] + xq;
  }
  LaxDerivatives out;
  out.f.assign(order + 1, 0.0);
  out.g.assign(order + 1, 0.0);
  out.f[0] = base.f;
  out.g[0] = base.g;
  for (int n = 0; n + 1 <= order; ++n) {
    double fn = 0.0, gn = 0.0;
    for (int i = 0; i <= n; ++i) {
      fn += binom(n, i) * qd[i] * out.g[n - i];
      gn += binom(n, i) * qd[i] * out.f[n - i];
    }
    out.f[n + 1] = fn;
    out.g[n + 1] = gn - w * out.g[n];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cache.

namespace {
constexpr std::uint64_t kCacheMagic = 0x41575049492d7631ULL;  // "AWPII-v1"
}

void PainleveTable::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("PainleveTable::save: cannot open " + path);
  auto put = [&](const void* p, std::size_t n) {
    out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
  };
  const std::uint64_t magic = kCacheMagic;
  const std::int64_t n = size();
  put(&magic, 8);
  put(&s_left_, 8);
  put(&s_right_, 8);
  put(&collocation_residual_, 8);
  put(&n, 8);
  for (const auto* col : {&q_, &qp_, &v_, &E_, &F_})
    put(col->data(), sizeof(double) * col->size());
  if (!out) throw ConfigError("PainleveTable::save: write failed for " + path);
}

PainleveTable PainleveTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("PainleveTable::load: cannot open " + path);
  auto get = [&](void* p, std::size_t n) {
    in.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
  };
  std::uint64_t magic = 0;
  std::int64_t n = 0;
  PainleveTable t;
  get(&magic, 8);
  if (magic != kCacheMagic) throw ConfigError("PainleveTable::load: bad magic in " + path);
  get(&t.s_left_, 8);
  get(&t.s_right_, 8);
  get(&t.collocation_residual_, 8);
  get(&n, 8);
  if (n < 2 || n > (1 << 26)) throw ConfigError("PainleveTable::load: bad size");
  t.h_ = (t.s_right_ - t.s_left_) / (n - 1);
  for (auto* col : {&t.q_, &t.qp_, &t.v_, &t.E_, &t.F_}) {
    col->resize(n);
    get(col->data(), sizeof(double) * n);
  }
  if (!in) throw ConfigError("PainleveTable::load: truncated file " + path);
  return t;
}

const PainleveTable& default_painleve_table() {
  static PainleveTable table;
  static std::once_flag flag;
  std::call_once(flag, [] {
    const char* dir = std::getenv("AIRYW_CACHE_DIR");
    std::string path;
    if (dir && *dir) path = std::string(dir) + "/painleve-default-v1.bin";
    if (!path.empty()) {
      try {
        table = PainleveTable::load(path);
        return;
      } catch (const Error&) {
        // fall through to a fresh build
      }
    }
    table = hm_solve(-10.0, 8.0, 18001);
    if (!path.empty()) {
      try {
        table.save(path);
      } catch (const Error&) {
        // cache directory not writable; keep the in-memory table
      }
    }
  });
  return table;
}

}  // namespace airyw

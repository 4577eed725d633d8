#include "airyw/contour.hpp"

#include <algorithm>
#include <cmath>

#include "airyw/errors.hpp"
#include "airyw/quadrature.hpp"

namespace airyw {

namespace {

constexpr double kTwoPi = 6.283185307179586;

// Real part of the exponent 2 c3 w^3/3 - Z w along the upper ray w = c + s e^{i pi/3}.
double exponent_real(double c3, double Z, double c, double s) {
  // Re((c + s e^{i pi/3})^3) = c^3 + 1.5 c^2 s - 1.5 c s^2 - s^3
  const double re_w3 = c * c * c + 1.5 * c * c * s - 1.5 * c * s * s - s * s * s;
  return (2.0 * c3 / 3.0) * re_w3 - Z * (c + 0.5 * s);
}

}  // namespace

void PsiSpec::normalize_and_validate() {
  auto drop_inf = [](std::vector<double>& v) {
    v.erase(std::remove_if(v.begin(), v.end(),
                           [](double x) { return std::isinf(x); }),
            v.end());
    std::sort(v.begin(), v.end());
  };
  drop_inf(numer_roots);
  drop_inf(denom_roots);
  for (double r : denom_roots)
    if (!(r > 0.0)) throw DomainError("PsiSpec: denominator roots must be finite and positive");
  if (!(cubic_coeff > 0.0)) throw DomainError("PsiSpec: cubic coefficient must be positive");
  if (poly_prefactor.empty()) poly_prefactor = {1.0};
}

double PsiSpec::min_denom_root() const {
  double m = kInf;
  for (double r : denom_roots) m = std::min(m, r);
  return m;
}

PsiEvaluator::PsiEvaluator(PsiSpec spec, double z_min, double z_max, double tol,
                           double crossing_override)
    : spec_(std::move(spec)) {
  spec_.normalize_and_validate();
  const double min_pole = spec_.min_denom_root();
  const double t = spec_.cubic_coeff;
  const double z_ref = std::min(z_min, z_max);
  const double z_far = std::max(z_min, z_max);

  double c;
  if (crossing_override != 0.0) {
    c = crossing_override;
    if (c >= min_pole)
      throw ContourCrossesPole("PsiEvaluator: crossing not left of all poles");
    if (c <= 0.0) throw InvalidConfig("PsiEvaluator: crossing must be positive");
  } else {
    const double saddle = std::sqrt(std::max(z_ref + spec_.shift, 1.0) / (2.0 * t));
    c = std::isinf(min_pole) ? std::max(saddle, 0.5) : std::min(0.5 * min_pole, saddle);
  }
  contour_.crossing = c;

  // Truncation: grow until the integrand magnitude at the endpoint has
  // dropped by 1e-18 relative to the ray start, at the most demanding Z.
  const double Z_worst = z_ref + spec_.shift;
  double T = std::cbrt(3.0 * 41.5 / (2.0 * t)) + c;
  const double start_mag = exponent_real(t, Z_worst, c, 0.0);
  for (int it = 0; it < 200; ++it) {
    if (exponent_real(t, Z_worst, c, T) <= start_mag - 42.0) break;
    T *= 1.4;
  }
  contour_.truncation = T;

  // Node doubling until probe values stabilize.
  const int n_max = 4096;
  int n = 48;
  const double z_mid = 0.5 * (z_ref + z_far);
  const double probes[3] = {z_ref, z_mid, z_far};
  std::vector<std::complex<double>> w_lo, c_lo, w_hi, c_hi;
  build_nodes(n, w_lo, c_lo);
  for (;;) {
    build_nodes(2 * n, w_hi, c_hi);
    double worst = 0.0;
    for (double z : probes) {
      const std::complex<double> a = raw_eval(w_lo, c_lo, z, 0);
      const std::complex<double> b = raw_eval(w_hi, c_hi, z, 0);
      worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(b)));
    }
    if (worst <= tol) {
      calibration_error_ = worst;
      contour_.nodes = 2 * n;
      w_ = std::move(w_hi);
      coeff_ = std::move(c_hi);
      return;
    }
    if (2 * n >= n_max)
      throw NonConvergent("PsiEvaluator: node doubling did not stabilize (residual " +
                          std::to_string(worst) + ")");
    n *= 2;
    w_lo = std::move(w_hi);
    c_lo = std::move(c_hi);
  }
}

void PsiEvaluator::build_nodes(int n, std::vector<std::complex<double>>& w,
                               std::vector<std::complex<double>>& coeff) const {
  std::vector<double> gl_x, gl_w;
  gauss_legendre(n, gl_x, gl_w);
  const double c = contour_.crossing;
  const double T = contour_.truncation;
  const std::complex<double> dir_up(std::cos(contour_.ray_angle),
                                    std::sin(contour_.ray_angle));
  const std::complex<double> dir_dn = std::conj(dir_up);
  w.resize(2 * n);
  coeff.resize(2 * n);
  const double t = spec_.cubic_coeff;
  for (int i = 0; i < n; ++i) {
    const double s = 0.5 * T * (gl_x[i] + 1.0);
    const double gw = 0.5 * T * gl_w[i];
    const std::complex<double> pts[2] = {c + s * dir_up, c + s * dir_dn};
    const std::complex<double> dirs[2] = {dir_up, -dir_dn};
    for (int side = 0; side < 2; ++side) {
      // Lower ray is traversed toward the crossing, hence the -dir factor.
      const std::complex<double> wp = pts[side];
      std::complex<double> rat(1.0, 0.0);
      for (double r : spec_.numer_roots) rat *= (r + wp);
      for (double r : spec_.denom_roots) rat /= (r - wp);
      std::complex<double> poly(0.0, 0.0);
      for (auto it = spec_.poly_prefactor.rbegin(); it != spec_.poly_prefactor.rend(); ++it)
        poly = poly * wp + *it;
      const std::complex<double> expo =
          std::exp((2.0 * t / 3.0) * wp * wp * wp - spec_.shift * wp);
      w[2 * i + side] = wp;
      coeff[2 * i + side] =
          gw * dirs[side] * rat * poly * expo / std::complex<double>(0.0, kTwoPi);
    }
  }
}

std::complex<double> PsiEvaluator::raw_eval(
    const std::vector<std::complex<double>>& w,
    const std::vector<std::complex<double>>& coeff, double z, int d) const {
  std::complex<double> sum(0.0, 0.0);
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> term = coeff[i] * std::exp(-z * w[i]);
    for (int k = 0; k < d; ++k) term *= -w[i];
    sum += term;
  }
  return sum;
}

double PsiEvaluator::operator()(double z, int d) const {
  return raw_eval(w_, coeff_, z, d).real();
}

std::complex<double> PsiEvaluator::eval_complex(double z, int d) const {
  return raw_eval(w_, coeff_, z, d);
}

PsiValue eval_psi(const PsiSpec& spec, double z, double tol, double crossing_override) {
  PsiEvaluator ev(spec, z, z, tol, crossing_override);
  const std::complex<double> v = ev.eval_complex(z);
  PsiValue out;
  out.value = v.real();
  out.imag_part = v.imag();
  out.error_estimate = ev.calibration_error() * (1.0 + std::abs(v));
  return out;
}

namespace {

// DLMF 9.7 coefficients for the oscillatory Airy asymptotics.
void airy_neg_asymptotic(double z, double& ai, double& aip) {
  const double zeta = (2.0 / 3.0) * z * std::sqrt(z);
  double u = 1.0, v = 1.0;
  double s_even_u = 0.0, s_odd_u = 0.0, s_even_v = 0.0, s_odd_v = 0.0;
  double zpow = 1.0;
  double prev = kInf;
  for (int k = 0;; ++k) {
    const double term = u * zpow;
    if (std::abs(term) > prev) break;  // optimal truncation
    prev = std::abs(term);
    const int sign4 = (k / 2) % 2 == 0 ? 1 : -1;  // (-1)^{floor(k/2)}
    if (k % 2 == 0) {
      s_even_u += sign4 * u * zpow;
      s_even_v += sign4 * v * zpow;
    } else {
      s_odd_u += sign4 * u * zpow;
      s_odd_v += sign4 * v * zpow;
    }
    if (k > 60 || std::abs(term) < 1e-19) break;
    const int kk = k + 1;
    u *= (6.0 * kk - 5.0) * (6.0 * kk - 3.0) * (6.0 * kk - 1.0) /
         (216.0 * kk * (2.0 * kk - 1.0));
    v = u * (6.0 * kk + 1.0) / (1.0 - 6.0 * kk);
    zpow /= zeta;
  }
  const double phase = zeta - 0.78539816339744831;  // zeta - pi/4
  const double cp = std::cos(phase), sp = std::sin(phase);
  const double sqp = std::sqrt(M_PI);
  ai = (cp * s_even_u + sp * s_odd_u) / (sqp * std::pow(z, 0.25));
  aip = (sp * s_even_v - cp * s_odd_v) * std::pow(z, 0.25) / sqp;
}

}  // namespace

double airy_ai(double x, int order) {
  if (order != 0 && order != 1) throw InvalidConfig("airy_ai: order must be 0 or 1");
  if (x < -8.0) {
    double ai, aip;
    airy_neg_asymptotic(-x, ai, aip);
    return order == 0 ? ai : aip;
  }
  PsiSpec spec;
  spec.cubic_coeff = 0.5;  // exp(w^3/3 - x w)
  if (order == 1) spec.poly_prefactor = {0.0, -1.0};
  const double crossing = std::max(std::sqrt(std::max(x, 0.0)), 0.5);
  PsiValue v = eval_psi(spec, x, 1e-12, crossing);
  return v.value;
}

}  // namespace airyw

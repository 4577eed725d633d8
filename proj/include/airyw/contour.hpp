#pragma once

#include <complex>
#include <limits>
#include <vector>

namespace airyw {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Contour for integrands of the form P(w) exp(2t w^3/3 - Z w) R(w): two
// straight rays from a real crossing point at angles +-pi/3. The crossing
// must stay to the left of every pole of the rational factor R.
struct ContourSpec {
  double crossing = 0.5;
  double ray_angle = 1.0471975511965976;  // pi/3
  double truncation = 10.0;               // arc length per ray
  int nodes = 64;                         // Gauss-Legendre nodes per ray
};

// Integrand family
//   psi(z) = (1/2 pi i) Int P(w) exp(2 c3 w^3 / 3 - (z + shift) w)
//            prod (rho+w) / prod (rho-w) dw
// with real polynomial prefactor P, positive cubic coefficient c3 and real
// root multisets. Infinite entries in either multiset are dropped (their
// factors disappear).
struct PsiSpec {
  std::vector<double> numer_roots;          // factors (rho + w)
  std::vector<double> denom_roots;          // factors (rho - w), finite > 0
  std::vector<double> poly_prefactor = {1.0};  // coefficients, ascending degree
  double cubic_coeff = 1.0;
  double shift = 0.0;

  // Removes +inf roots and validates the remaining data.
  void normalize_and_validate();
  double min_denom_root() const;  // +inf when no denominator factors
};

struct PsiValue {
  double value = 0.0;
  double error_estimate = 0.0;  // node-doubling disagreement
  double imag_part = 0.0;       // residual imaginary part of the complex sum
};

// Cached quadrature for a fixed PsiSpec. Construction calibrates the
// truncation and node count so that node doubling agrees to `tol` on probe
// arguments spanning [z_min, z_max]; evaluations then reuse the frozen
// contour data, so psi(z) is a smooth (analytic) function of z, which the
// finite-difference consumers rely on. Evaluation is pure and thread-safe.
class PsiEvaluator {
 public:
  PsiEvaluator(PsiSpec spec, double z_min, double z_max, double tol = 1e-11,
               double crossing_override = 0.0);

  // d-th z-derivative: inserts a (-w)^d factor.
  double operator()(double z, int d = 0) const;
  std::complex<double> eval_complex(double z, int d = 0) const;

  double crossing() const { return contour_.crossing; }
  double truncation() const { return contour_.truncation; }
  int nodes_per_ray() const { return contour_.nodes; }
  double calibration_error() const { return calibration_error_; }
  const PsiSpec& spec() const { return spec_; }

 private:
  void build_nodes(int n, std::vector<std::complex<double>>& w,
                   std::vector<std::complex<double>>& coeff) const;
  std::complex<double> raw_eval(const std::vector<std::complex<double>>& w,
                                const std::vector<std::complex<double>>& coeff,
                                double z, int d) const;

  PsiSpec spec_;
  ContourSpec contour_;
  double calibration_error_ = 0.0;
  // Frozen contour data: node positions and weights including the exp factor
  // that does not depend on z.
  std::vector<std::complex<double>> w_;
  std::vector<std::complex<double>> coeff_;
};

// One-shot evaluation (calibrates a contour for this z alone).
PsiValue eval_psi(const PsiSpec& spec, double z, double tol = 1e-11,
                  double crossing_override = 0.0);

// Airy function Ai (order 0) and Ai' (order 1). Contour quadrature with the
// steepest-descent crossing for x >= -8; for more negative arguments the
// oscillatory asymptotic expansion takes over, where the contour loses too
// many digits to cancellation.
double airy_ai(double x, int order = 0);

}  // namespace airyw

#pragma once

#include <memory>

#include "airyw/contour.hpp"
#include "airyw/params.hpp"
#include "airyw/quadrature.hpp"

namespace airyw {

// Hankel integral operator on L^2([0,infty)): K(x,y) = psi(x+y).
struct KernelHandle {
  PsiSpec psi;
  bool symmetric = true;
};

struct DetResult {
  double value = 0.0;
  double refinement = 0.0;  // |det at level n - det at level 2n|
};

// Fredholm determinant det(I - W^{1/2} K W^{1/2}) of the Nystrom matrix,
// evaluated on `grid` and on its doubled refinement. Throws
// TruncationTooSmall when the kernel has not decayed at the last node.
DetResult fredholm_det(const KernelHandle& kernel, const QuadratureGrid& grid);

// d^j/dz^j [(I-K)^{-1} rhs](point): Nystrom solve plus the extension formula,
// with kernel/rhs derivatives taken analytically on the contour (monomial
// prefactors), never by finite differences. Throws NearSingular when
// det(I-K) is below 1e-8.
double resolvent_at(const KernelHandle& kernel, const PsiSpec& rhs,
                    const QuadratureGrid& grid, double point, int deriv_order);

// Classical Tracy-Widom distributions via the Airy-kernel determinants:
//   F1(s) = det(I - B_s), F2(s) = det(I - B_s^2),
//   F4(x) = (det(I - B_s) + det(I + B_s))/2 with s = 2^{2/3} x.
double tw_distribution(int beta, double s);
DetResult tw_distribution_checked(int beta, double s);

// Deformed distribution: Fredholm determinant of the wanderer kernel
//   (1/2 pi i) Int exp(2 t w^3/3 - (x+y+2r) w) prod (a_k+w)/(a_k-w) (b_k+w)/(b_k-w) dw
// on L^2([0,infty)). t=1 is the distribution itself; general t is the
// time-rescaled kernel used by the KdV residual checks.
DetResult F_det(const WandererParams& params, double r, double t = 1.0);
DetResult F_det(const WandererParams& params, double r, double t, int n_nodes);

// Kernel spec and default grid used by F_det, shared with the finite-rank
// route so both discretize identically.
PsiSpec wanderer_kernel_spec(const WandererParams& params, double r, double t);
QuadratureGrid wanderer_grid(const WandererParams& params, double r, int n_nodes);

// Determinant evaluator with frozen discretization: one contour calibration
// and one quadrature grid shared by every evaluation, so r |-> log F is an
// analytic function suitable for high-order finite differencing. The shift
// 2r enters only through the kernel argument, not the contour data.
class FrozenFDet {
 public:
  // r_lo/r_hi bound every r that will be queried; t is fixed per instance.
  FrozenFDet(const WandererParams& params, double r_lo, double r_hi, double t,
             int n_nodes);

  double log_det(double r) const;
  double det(double r) const;
  const QuadratureGrid& grid() const { return grid_; }

 private:
  QuadratureGrid grid_;
  std::shared_ptr<const PsiEvaluator> psi_;  // shift-free evaluator
};

}  // namespace airyw

#pragma once

#include <string>
#include <vector>

#include "airyw/painleve.hpp"
#include "airyw/params.hpp"

namespace airyw {

enum class Method { det, finite_rank, pii1, pii2 };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

struct EvalReport {
  double r = 0.0;
  double value = 0.0;
  Method method = Method::det;
  double error_estimate = 0.0;
  double wall_time_sec = 0.0;
};

// Distribution of the supremum of the Airy process with m wanderers minus a
// parabola, by the requested route:
//   det         Fredholm determinant of the wanderer kernel (any parameters)
//   finite_rank rank-m perturbation of the Airy-type kernel (a_i = inf only)
//   pii1/pii2   Painleve II / Lax-pair determinant formulas (a_i = inf,
//               pairwise-distinct b; near-coincident b reroutes to det)
// The pii routes use F1 = E*F from the Painleve side throughout, so they
// share no numerics with the det route.
EvalReport F_wanderers(const WandererParams& params, double r, Method method);
EvalReport F_wanderers(const WandererParams& params, double r, Method method,
                       const PainleveTable& table);

// Spiked Tracy-Widom distributions used as cross-checks.
//   beta=2: F_2(x; w_1..w_m) with up to 4 pairwise-distinct spikes,
//   beta=4: rank-one case, arguments in the (2^{-2/3} x, 2^{-1/3} w)
//           convention of the beta=4 formula.
double spiked_tw(int beta, double x, const std::vector<double>& w);
double spiked_tw(int beta, double x, const std::vector<double>& w,
                 const PainleveTable& table);

}  // namespace airyw

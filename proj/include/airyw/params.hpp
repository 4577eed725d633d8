#pragma once

#include <vector>

namespace airyw {

// Deformation parameters: m wanderer start/end rates, +inf entries allowed
// (an infinite entry removes the corresponding kernel factor).
struct WandererParams {
  int m = 0;
  std::vector<double> a;  // non-decreasing, entries in (0, +inf]
  std::vector<double> b;  // non-decreasing, entries in (0, +inf]

  void validate() const;          // throws DomainError
  std::vector<double> finite_a() const;
  std::vector<double> finite_b() const;
  bool all_a_infinite() const;
};

}  // namespace airyw

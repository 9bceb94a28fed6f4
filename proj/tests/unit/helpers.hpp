#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bdf3ns/field.hpp"

namespace testing {

using std::numbers::pi;

inline double max_diff(const bdf3ns::ScalarField& a, const bdf3ns::ScalarField& b) {
  const auto pa = bdf3ns::to_physical(a);
  const auto pb = bdf3ns::to_physical(b);
  double worst = 0.0;
  for (std::size_t i = 0; i < pa.physical().size(); ++i)
    worst = std::max(worst, std::abs(pa.physical()[i] - pb.physical()[i]));
  return worst;
}

// Pointwise trapezoid-rule inner product, written out independently of the library.
inline double riemann_inner(const bdf3ns::ScalarField& a, const bdf3ns::ScalarField& b) {
  const auto pa = bdf3ns::to_physical(a);
  const auto pb = bdf3ns::to_physical(b);
  const double h = a.grid().spacing();
  double s = 0.0;
  for (std::size_t i = 0; i < pa.physical().size(); ++i) s += pa.physical()[i] * pb.physical()[i];
  return s * h * h;
}

}  // namespace testing

#include "bartree/rng.hpp"

#include <cmath>
#include <numbers>

namespace bartree {

std::pair<double, double> standard_normal_pair(SplitMix64& rng) {
  const double u1 = rng.next_unit();
  const double u2 = rng.next_unit();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

double standard_normal(SplitMix64& rng) {
  return standard_normal_pair(rng).first;
}

}  // namespace bartree

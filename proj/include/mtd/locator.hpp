#ifndef MTD_LOCATOR_HPP
#define MTD_LOCATOR_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "mtd/angle.hpp"

namespace mtd {

/// Integer edge vector emitted by the locators; never (0,0), y >= 0.
struct GridVector {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const GridVector&, const GridVector&) = default;
};

namespace detail {

inline const double kAtanHalf = std::atan(0.5);

inline bool slope_strictly_inside(const GridVector& p, double lo_rad, double hi_rad) {
  double s = std::atan2(static_cast<double>(p.y), static_cast<double>(p.x));
  return lo_rad < s && s < hi_rad;
}

}  // namespace detail

/// Point for a narrow sector in [0, pi/4]: p = (d, floor(tan(t1)*d + 1)) with
/// d = ceil(1/(t2-t1)). The arithmetic is real-valued, so after rounding the
/// point is re-checked against the sector and nudged if a rounding error ever
/// pushed it out (not expected to trigger at supported sizes).
inline GridVector small_angle_point(const Angle& theta1, const Angle& theta2) {
  if (compare_pi_fraction(theta1, 0) < 0 || !(theta1 < theta2) ||
      compare_pi_fraction(theta2, Rational(1, 4)) > 0)
    throw std::invalid_argument("small_angle_point: need 0 <= t1 < t2 <= pi/4");
  const double t1 = theta1.radians, t2 = theta2.radians;
  // shave a relative epsilon so binary noise like 1/(0.6-0.5) = 10.0000...2
  // does not bump the ceiling; the loop below re-validates the point anyway
  const double q = 1.0 / (t2 - t1);
  auto d0 = static_cast<std::int64_t>(std::ceil(q * (1.0 - 1e-12)));
  for (std::int64_t d = d0; d <= d0 + 2; ++d) {
    auto y = static_cast<std::int64_t>(std::floor(std::tan(t1) * static_cast<double>(d) + 1.0));
    for (std::int64_t dy : {std::int64_t{0}, std::int64_t{1}, std::int64_t{-1}}) {
      GridVector p{d, y + dy};
      if (p.y >= 1 && detail::slope_strictly_inside(p, t1, t2)) return p;
    }
  }
  throw std::logic_error("small_angle_point: no grid point found");
}

inline GridVector small_angle_point(double theta1, double theta2) {
  return small_angle_point(Angle::from_radians(theta1), Angle::from_radians(theta2));
}

/// First-quadrant locator: a grid point whose slope lies strictly inside
/// (theta1, theta2), 0 <= theta1 < theta2 <= pi/2, with
/// max(x, y) <= (pi/2) / (theta2 - theta1).
inline GridVector locate_q1(const Angle& theta1, const Angle& theta2) {
  if (compare_pi_fraction(theta1, 0) < 0 || !(theta1 < theta2) ||
      compare_pi_fraction(theta2, Rational(1, 2)) > 0)
    throw std::invalid_argument("locate_q1: need 0 <= t1 < t2 <= pi/2");

  const Rational quarter(1, 4);
  // sector wider than pi/4
  bool wide;
  if (theta1.exact && theta2.exact)
    wide = theta2.pi_factor - theta1.pi_factor > quarter;
  else
    wide = theta2.radians - theta1.radians > std::numbers::pi / 4;
  if (wide) return {1, 1};

  // equality with arctan(1/2) is impossible for rational multiples of pi,
  // so the double comparison decides these boundaries safely
  if (theta2.radians - theta1.radians > detail::kAtanHalf) {
    if (compare_pi_fraction(theta1, quarter) >= 0) return {1, 2};
    if (theta1.radians >= detail::kAtanHalf) return {1, 1};
    return {2, 1};
  }

  if (compare_pi_fraction(theta2, quarter) <= 0) return small_angle_point(theta1, theta2);
  if (compare_pi_fraction(theta1, quarter) < 0) return {1, 1};
  // theta1 >= pi/4: reflect across the diagonal
  GridVector p = small_angle_point(pi_fraction_minus(Rational(1, 2), theta2),
                                   pi_fraction_minus(Rational(1, 2), theta1));
  return {p.y, p.x};
}

inline GridVector locate_q1(double theta1, double theta2) {
  return locate_q1(Angle::from_radians(theta1), Angle::from_radians(theta2));
}

/// Upper-half-plane locator, 0 <= beta1 < beta2 <= pi: (0,1) when the sector
/// straddles pi/2, otherwise the first-quadrant locator or its x-mirror.
inline GridVector locate_q12(const Angle& beta1, const Angle& beta2) {
  if (compare_pi_fraction(beta1, 0) < 0 || !(beta1 < beta2) ||
      compare_pi_fraction(beta2, Rational(1)) > 0)
    throw std::invalid_argument("locate_q12: need 0 <= b1 < b2 <= pi");
  const Rational half(1, 2);
  if (compare_pi_fraction(beta1, half) < 0 && compare_pi_fraction(beta2, half) > 0) return {0, 1};
  if (compare_pi_fraction(beta2, half) <= 0) return locate_q1(beta1, beta2);
  GridVector p = locate_q1(pi_fraction_minus(Rational(1), beta2), pi_fraction_minus(Rational(1), beta1));
  return {-p.x, p.y};
}

inline GridVector locate_q12(double beta1, double beta2) {
  return locate_q12(Angle::from_radians(beta1), Angle::from_radians(beta2));
}

}  // namespace mtd

#endif

#pragma once

#include <optional>

namespace cvb {

/// Two-sided bracket around a computed quantity: lower <= value <= upper is
/// the claim; the slacks measure how much room each side has (negative slack
/// means the claim failed numerically).
struct Enclosure {
  double lower;
  double value;
  double upper;

  double slack_lower() const { return value - lower; }
  double slack_upper() const { return upper - value; }
  double gap() const { return upper - lower; }
  bool holds(double tol) const { return slack_lower() >= -tol && slack_upper() >= -tol; }
};

/// A measured gap quantity with an upper bound and, where the estimate is
/// two-sided, a lower bound as well.
struct GapReport {
  double gap;
  std::optional<double> lower;
  double upper;

  double slack_upper() const { return upper - gap; }
  std::optional<double> slack_lower() const {
    if (!lower) return std::nullopt;
    return gap - *lower;
  }
  bool holds(double tol) const {
    if (upper - gap < -tol) return false;
    if (lower && gap - *lower < -tol) return false;
    return true;
  }
};

/// lhs <= rhs style comparison of two independently computed sides.
struct BoundPair {
  double lhs;
  double rhs;

  double slack() const { return rhs - lhs; }
  bool holds(double tol) const { return slack() >= -tol; }
};

}  // namespace cvb

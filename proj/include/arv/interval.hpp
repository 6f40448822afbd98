#pragma once

#include <limits>
#include <string>
#include <vector>

namespace arv {

/// A connected subset of the reals, possibly empty, possibly unbounded.
/// Infinite bounds are always open.
class Interval {
 public:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  /// (-inf, +inf)
  Interval() = default;
  /// Normalizes to the empty interval when the bounds describe no point.
  Interval(double lower, bool lower_closed, double upper, bool upper_closed);

  static Interval full() { return Interval(); }
  static Interval empty();
  static Interval point(double x) { return Interval(x, true, x, true); }

  bool is_empty() const noexcept { return empty_; }
  bool is_full() const noexcept { return !empty_ && lower_ == -kInf && upper_ == kInf; }
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  bool lower_closed() const noexcept { return lower_closed_; }
  bool upper_closed() const noexcept { return upper_closed_; }

  bool contains(double x) const noexcept;
  bool subset_of(const Interval& other) const noexcept;
  Interval intersect(const Interval& other) const;
  /// Non-empty pieces of the complement, ordered left to right (0, 1 or 2 pieces).
  std::vector<Interval> complement() const;

  /// A point inside the interval; requires non-empty.
  double sample_point() const;

  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lower_ = -kInf;
  double upper_ = kInf;
  bool lower_closed_ = false;
  bool upper_closed_ = false;
  bool empty_ = false;
};

/// Cartesian product of one interval per variable. Either every component is
/// non-empty, or the vector is the canonical all-empty box.
class IntervalVector {
 public:
  IntervalVector() = default;
  explicit IntervalVector(std::vector<Interval> components);

  static IntervalVector full(std::size_t dimension);
  static IntervalVector empty(std::size_t dimension);

  std::size_t dimension() const noexcept { return components_.size(); }
  bool is_empty() const noexcept;
  bool is_full() const noexcept;
  const std::vector<Interval>& components() const noexcept { return components_; }
  const Interval& operator[](std::size_t i) const { return components_[i]; }

  bool contains(const std::vector<double>& point) const;
  IntervalVector intersect(const IntervalVector& other) const;

  std::string to_string() const;

  friend bool operator==(const IntervalVector&, const IntervalVector&) = default;

 private:
  std::vector<Interval> components_;
};

/// Boxes that together with `box` partition the whole space: every product of
/// per-component pieces of (component, complement pieces) except `box` itself.
/// Requires a non-empty box. Returns no boxes for the full space.
std::vector<IntervalVector> complement_box(const IntervalVector& box);

}  // namespace arv

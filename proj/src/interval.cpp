#include "arv/interval.hpp"

#include <sstream>

#include "arv/error.hpp"

namespace arv {

namespace {

std::string format_bound(double x) {
  if (x == Interval::kInf) return "+inf";
  if (x == -Interval::kInf) return "-inf";
  std::ostringstream out;
  out << x;
  return out.str();
}

}  // namespace

Interval::Interval(double lower, bool lower_closed, double upper, bool upper_closed)
    : lower_(lower), upper_(upper), lower_closed_(lower_closed), upper_closed_(upper_closed) {
  if (lower_ == -kInf) lower_closed_ = false;
  if (upper_ == kInf) upper_closed_ = false;
  if (lower_ > upper_ || (lower_ == upper_ && !(lower_closed_ && upper_closed_))) *this = empty();
}

Interval Interval::empty() {
  Interval i;
  i.empty_ = true;
  i.lower_ = 0.0;
  i.upper_ = 0.0;
  return i;
}

bool Interval::contains(double x) const noexcept {
  if (empty_) return false;
  bool above = lower_closed_ ? x >= lower_ : x > lower_;
  bool below = upper_closed_ ? x <= upper_ : x < upper_;
  return above && below;
}

bool Interval::subset_of(const Interval& other) const noexcept {
  if (empty_) return true;
  if (other.empty_) return false;
  bool lower_ok = other.lower_ < lower_ || (other.lower_ == lower_ && (other.lower_closed_ || !lower_closed_));
  bool upper_ok = other.upper_ > upper_ || (other.upper_ == upper_ && (other.upper_closed_ || !upper_closed_));
  return lower_ok && upper_ok;
}

Interval Interval::intersect(const Interval& other) const {
  if (empty_ || other.empty_) return empty();
  double lo = lower_;
  bool lo_closed = lower_closed_;
  if (other.lower_ > lo || (other.lower_ == lo && !other.lower_closed_)) {
    lo = other.lower_;
    lo_closed = other.lower_closed_;
  }
  double hi = upper_;
  bool hi_closed = upper_closed_;
  if (other.upper_ < hi || (other.upper_ == hi && !other.upper_closed_)) {
    hi = other.upper_;
    hi_closed = other.upper_closed_;
  }
  return Interval(lo, lo_closed, hi, hi_closed);
}

std::vector<Interval> Interval::complement() const {
  if (empty_) return {full()};
  std::vector<Interval> pieces;
  if (lower_ != -kInf) pieces.emplace_back(-kInf, false, lower_, !lower_closed_);
  if (upper_ != kInf) pieces.emplace_back(upper_, !upper_closed_, kInf, false);
  return pieces;
}

double Interval::sample_point() const {
  if (empty_) throw PreconditionError("sample_point of empty interval");
  if (lower_ == -kInf && upper_ == kInf) return 0.0;
  if (lower_ == -kInf) return upper_closed_ ? upper_ : upper_ - 1.0;
  if (upper_ == kInf) return lower_closed_ ? lower_ : lower_ + 1.0;
  if (lower_closed_) return lower_;
  if (upper_closed_) return upper_;
  return lower_ + (upper_ - lower_) / 2.0;
}

std::string Interval::to_string() const {
  if (empty_) return "{}";
  return std::string(lower_closed_ ? "[" : "(") + format_bound(lower_) + "," + format_bound(upper_) +
         (upper_closed_ ? "]" : ")");
}

IntervalVector::IntervalVector(std::vector<Interval> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.is_empty()) {
      *this = empty(components_.size());
      return;
    }
  }
}

IntervalVector IntervalVector::full(std::size_t dimension) {
  return IntervalVector(std::vector<Interval>(dimension, Interval::full()));
}

IntervalVector IntervalVector::empty(std::size_t dimension) {
  IntervalVector v;
  v.components_.assign(dimension, Interval::empty());
  return v;
}

bool IntervalVector::is_empty() const noexcept {
  // A zero-dimensional box is the single point of R^0, hence non-empty.
  return !components_.empty() && components_.front().is_empty();
}

bool IntervalVector::is_full() const noexcept {
  for (const auto& c : components_) {
    if (!c.is_full()) return false;
  }
  return true;
}

bool IntervalVector::contains(const std::vector<double>& point) const {
  if (point.size() != components_.size()) throw PreconditionError("point dimension mismatch");
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (!components_[i].contains(point[i])) return false;
  }
  return true;
}

IntervalVector IntervalVector::intersect(const IntervalVector& other) const {
  if (other.dimension() != dimension()) throw PreconditionError("box dimension mismatch");
  std::vector<Interval> out;
  out.reserve(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    Interval c = components_[i].intersect(other.components_[i]);
    if (c.is_empty()) return empty(dimension());
    out.push_back(c);
  }
  return IntervalVector(std::move(out));
}

std::string IntervalVector::to_string() const {
  if (is_empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += " x ";
    s += components_[i].to_string();
  }
  return s;
}

std::vector<IntervalVector> complement_box(const IntervalVector& box) {
  if (box.is_empty()) throw PreconditionError("complement_box requires a non-empty box");
  const std::size_t n = box.dimension();
  // Per component: the component itself followed by its complement pieces.
  std::vector<std::vector<Interval>> choices(n);
  std::size_t combinations = 1;
  for (std::size_t i = 0; i < n; ++i) {
    choices[i].push_back(box[i]);
    for (auto& piece : box[i].complement()) choices[i].push_back(piece);
    combinations *= choices[i].size();
  }
  std::vector<IntervalVector> result;
  // Index 0 in every component reproduces `box`; skip it.
  for (std::size_t j = 1; j < combinations; ++j) {
    std::vector<Interval> parts;
    parts.reserve(n);
    std::size_t rest = j;
    for (std::size_t i = 0; i < n; ++i) {
      parts.push_back(choices[i][rest % choices[i].size()]);
      rest /= choices[i].size();
    }
    result.emplace_back(std::move(parts));
  }
  return result;
}

}  // namespace arv

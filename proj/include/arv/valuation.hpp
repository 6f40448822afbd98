#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arv {

/// One time sample of a trace: a total map from variable names to reals.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<std::pair<const std::string, double>> values) : values_(values) {}

  void set(std::string name, double value) { values_[std::move(name)] = value; }

  /// Throws UnboundVariable if `name` is not assigned.
  double at(std::string_view name) const;
  bool contains(std::string_view name) const { return values_.find(name) != values_.end(); }

  const std::map<std::string, double, std::less<>>& values() const noexcept { return values_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::map<std::string, double, std::less<>> values_;
};

/// A finite, non-empty sequence of valuations over a fixed variable set.
class Trace {
 public:
  Trace() = default;
  /// Throws PreconditionError when a sample does not bind every variable.
  Trace(std::vector<std::string> variables, std::vector<Valuation> samples);

  /// Builds a trace from rows of values ordered like `variables`.
  static Trace from_rows(std::vector<std::string> variables, const std::vector<std::vector<double>>& rows);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Valuation>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  const Valuation& operator[](std::size_t i) const { return samples_[i]; }

  /// First `n` samples.
  Trace prefix(std::size_t n) const;

  friend bool operator==(const Trace&, const Trace&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Valuation> samples_;
};

}  // namespace arv

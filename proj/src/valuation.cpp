#include "arv/valuation.hpp"

#include <algorithm>

#include "arv/error.hpp"

namespace arv {

double Valuation::at(std::string_view name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw UnboundVariable(std::string(name));
  return it->second;
}

Trace::Trace(std::vector<std::string> variables, std::vector<Valuation> samples)
    : variables_(std::move(variables)), samples_(std::move(samples)) {
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    for (const auto& var : variables_) {
      if (!samples_[i].contains(var)) {
        throw PreconditionError("sample " + std::to_string(i) + " does not bind '" + var + "'");
      }
    }
  }
}

Trace Trace::from_rows(std::vector<std::string> variables, const std::vector<std::vector<double>>& rows) {
  std::vector<Valuation> samples;
  samples.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != variables.size()) throw PreconditionError("row width does not match variable count");
    Valuation v;
    for (std::size_t k = 0; k < row.size(); ++k) v.set(variables[k], row[k]);
    samples.push_back(std::move(v));
  }
  return Trace(std::move(variables), std::move(samples));
}

Trace Trace::prefix(std::size_t n) const {
  Trace t;
  t.variables_ = variables_;
  t.samples_.assign(samples_.begin(), samples_.begin() + static_cast<std::ptrdiff_t>(std::min(n, samples_.size())));
  return t;
}

}  // namespace arv

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "arv/semiring.hpp"

/// Randomized cross-checks of the dynamic programs against brute-force oracles.
namespace arv::suites {

struct SuiteResult {
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::optional<std::string> first_mismatch;

  bool passed() const noexcept { return cases > 0 && mismatches == 0; }
};

/// vpd against the grid oracle on random closed-literal DNF predicates
/// (constants in [-8, 8], grid [-12, 12]); guards are ∧-minimized unless the
/// semiring is multiplicatively idempotent.
SuiteResult vpd_suite(std::uint64_t seed, std::size_t cases, Semiring s);

/// val against path enumeration on random automata (<= 5 locations) and
/// traces (<= 5 samples).
SuiteResult path_suite(std::uint64_t seed, std::size_t cases, Semiring s);

/// val of the translated monotone formula against the trace-distance oracle
/// (one variable, grid {0..4}, traces of length <= 3).
SuiteResult distance_suite(std::uint64_t seed, std::size_t cases, Semiring s);

}  // namespace arv::suites

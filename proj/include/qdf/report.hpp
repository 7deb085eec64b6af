#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdf/gf2n.hpp"

namespace qdf {

struct Offender {
  Element a = 0;
  Element b = 0;
  std::uint32_t count = 0;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Outcome of an exhaustive verification. Failures are data, not exceptions.
struct VerificationReport {
  bool pass = false;
  std::uint32_t lambda_claim = 0;
  // Extremes over every pair (or quotient) that must be covered lambda times;
  // empty when there is nothing to cover.
  std::optional<std::uint32_t> coverage_min;
  std::optional<std::uint32_t> coverage_max;
  std::vector<Offender> offending_pairs;  // first few only
  std::vector<CheckResult> checks;
  std::uint64_t blocks_counted = 0;
  std::vector<std::string> warnings;
  double seconds = 0.0;

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

inline constexpr std::size_t kMaxOffenders = 16;

}  // namespace qdf

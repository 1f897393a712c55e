#pragma once

#include "gjms/params.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gjms {

inline constexpr const char* kToolName = "gjms";
inline constexpr const char* kToolVersion = "0.1.0";

// Slack granted around the reference: tolerance * max(|reference|, 1e-14).
enum class CheckKind { TwoSided, LowerBound, UpperBound };

// One verified quantity. Two-sided: |computed - reference| within the slack.
// Lower/upper bound: computed above/below the reference, minus/plus the slack.
struct CheckRecord {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  CheckKind kind = CheckKind::TwoSided;
  bool pass = false;
};

CheckRecord makeCheck(const std::string& name, double computed, double reference,
                      double tolerance);
CheckRecord makeLowerBoundCheck(const std::string& name, double computed, double reference,
                                double tolerance = 0.0);
CheckRecord makeUpperBoundCheck(const std::string& name, double computed, double reference,
                                double tolerance = 0.0);

// Machine-readable run summary. Serialization is deterministic: fixed key
// order, every floating-point number printed with 17 significant digits, so
// reruns differ only in the timestamp line.
struct Report {
  std::string command;
  std::string timestamp;  // ISO 8601 UTC, set by stampNow()
  ProblemParams params{};
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  std::vector<std::string> artifacts;  // CSV files written alongside

  void stampNow();
  bool allPass() const;
  std::string toJson() const;
  std::string toCsv() const;  // header name,computed,reference,tolerance,pass
};

// %.17g, the shortest fixed-width form that round-trips IEEE doubles.
std::string formatDouble(double x);

}  // namespace gjms

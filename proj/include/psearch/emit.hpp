#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "psearch/analysis.hpp"
#include "psearch/types.hpp"

namespace psearch {

inline constexpr const char* kVersion = "1.0";

enum class Format { json, csv, human };

// "json", "csv" or "human"; throws std::invalid_argument otherwise
Format parse_format(const std::string& name);

struct RunReport {
  SearchSpace space;
  Schedule schedule;
  // raw canonical counts, present when the schedule derives from them
  std::optional<CanonicalSchedule> canonical;
  std::string engine; // "reduced", "statevector" or "both"
  std::optional<RunTrace> reduced;
  std::optional<RunTrace> statevector;
  std::optional<double> max_abs_diff; // engine == "both"
};

struct BoundReport {
  SearchSpace space;
  double bound = 0.0;
  std::optional<long> canonical_queries; // absent when canonical is undefined
  std::optional<double> slack;
};

void emit_run(const RunReport& report, Format format, std::ostream& out);
void emit_sweep(const SweepResult& result, Format format, std::ostream& out);
void emit_verify(const SearchSpace& space, const std::vector<Prediction>& predictions,
                 Format format, std::ostream& out);
void emit_bound(const BoundReport& report, Format format, std::ostream& out);

} // namespace psearch

#pragma once

#include <string>
#include <utility>

#include "cmreg/verify.hpp"

namespace cmreg {

enum class Format { kJson, kCsv, kMarkdown };

// "json", "csv" or "md"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& name);

struct FormatOptions {
  std::string input;  // echoed as "input"
  std::string field;  // "Q" or "GF(p)"
  // Wall time is nondeterministic, so it is only emitted on request.
  bool timings = false;
};

std::string format_report(const Report& report, Format format, const FormatOptions& options);

// Profile, Betti table and cohomology tables over [lo, hi].
std::string format_analysis(const CohomologyProfile& profile, std::pair<int, int> window,
                            Format format, const FormatOptions& options);

}  // namespace cmreg

#pragma once

#include <string>

#include "mxpbf/harness.hpp"
#include "mxpbf/roc.hpp"

namespace mxpbf {

/// Versioned JSON serialization of an experiment report (schema_version 1).
/// Statistic samples serialize as numbers when finite and as the strings
/// "inf" / "-inf" otherwise. With include_timing = false the
/// wall_time_seconds field is omitted, which makes the bytes a pure function
/// of (spec, methods, reps, seed).
std::string report_to_json(const ExperimentReport& report, bool include_timing = true,
                           int indent = 2);

std::string roc_to_json(const RocCurve& curve, int indent = 2);

}  // namespace mxpbf

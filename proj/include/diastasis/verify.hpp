#pragma once

#include <string>
#include <vector>

#include "diastasis/json_io.hpp"

namespace dia {

enum class CheckStatus { pass, fail, refuted_as_expected };

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;  // exact witnesses, deterministic
    double wall_ms;      // excluded from byte-stable JSON unless requested

    bool ok() const { return status != CheckStatus::fail; }
};

struct RunReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    json to_json(bool with_timings = false) const;
};

/// Runs the full verification suite (the criteria the CLI and the acceptance
/// test binary share).  `order` caps the series truncation used by the
/// series-level checks; the shipped thresholds are pinned independently of it
/// where a criterion requires a specific order.
RunReport run_verification_suite(unsigned order = 8);

}  // namespace dia

#pragma once

#include <string>

#include "json.hpp"
#include "qpoly/numeric.hpp"

namespace qpoly {

using Json = nlohmann::ordered_json;

struct ReportOptions {
    bool run_oracle = false;
    // Interval width under which a zero-straddling Krein interval is called
    // numerically zero (certified-nonzero is the only certified direction).
    Rational zero_width = Rational(BigInt(1), BigInt("1000000000000000000000000000000"));
    int max_rounds = 8;
};

struct ReportResult {
    Json report;
    int exit_code = 0;  // 0 Q-poly, 1 not Q-poly, 2 hypothesis/feasibility, 3 internal/precision
};

// Run the pipeline on one array text and build the canonical JSON report.
// All exact quantities are serialized as decimal strings, never floats.
ReportResult make_report(const std::string& array_text, const ReportOptions& opts);

}  // namespace qpoly

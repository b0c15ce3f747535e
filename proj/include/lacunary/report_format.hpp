#pragma once

#include <string>

#include "lacunary/pipeline.hpp"

namespace lacunary {

enum class OutputFormat { text, json };

struct FormatFlags {
  OutputFormat format = OutputFormat::text;
  bool stats = false;
};

/// sign * content, e.g. "6", "-1/2".
std::string unit_string(const FactorReport& report);

/// Text: "unit: ...", "x^n", then one "(factor)^mult" line per factor or
/// "no factors of degree <= d"; with stats, the four timing rows.
/// JSON: {unit, x_power, factors: [{coeffs, mult}], stats}.
std::string format_report(const FactorReport& report, const PhaseStats& stats, const FormatFlags& flags);

}  // namespace lacunary

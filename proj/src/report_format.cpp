#include "lacunary/report_format.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace lacunary {

namespace {

void stats_row(std::ostringstream& out, const char* label, double ms) {
  char line[96];
  std::snprintf(line, sizeof line, "%-22s %12.1f\n", label, ms);
  out << line;
}

}  // namespace

std::string unit_string(const FactorReport& report) {
  Rational u = report.content;
  if (report.sign < 0) u = -u;
  return u.get_str();
}

std::string format_report(const FactorReport& report, const PhaseStats& stats, const FormatFlags& flags) {
  if (flags.format == OutputFormat::json) {
    nlohmann::json j;
    j["unit"] = unit_string(report);
    j["x_power"] = report.x_power.get_str();
    j["degree_bound"] = report.degree_bound;
    auto factors = nlohmann::json::array();
    for (const auto& e : report.factors) {
      auto coeffs = nlohmann::json::array();
      for (const auto& c : e.factor.coeffs()) coeffs.push_back(c.get_str());
      factors.push_back({{"coeffs", coeffs}, {"mult", e.multiplicity}});
    }
    j["factors"] = factors;
    j["stats"] = {{"total_ms", stats.total_ms},
                  {"noncyclotomic_ms", stats.noncyclotomic_ms},
                  {"cyclotomic_ms", stats.cyclotomic_ms},
                  {"gcd_ms", stats.gcd_ms}};
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "unit: " << unit_string(report) << "\n";
  out << "x^" << report.x_power.get_str() << "\n";
  if (report.factors.empty()) out << "no factors of degree <= " << report.degree_bound << "\n";
  for (const auto& e : report.factors)
    out << "(" << to_string(e.factor) << ")^" << e.multiplicity << "\n";
  if (flags.stats) {
    stats_row(out, "Total time (ms)", stats.total_ms);
    stats_row(out, "Non-cyclotomic (ms)", stats.noncyclotomic_ms);
    stats_row(out, "Cyclotomic (ms)", stats.cyclotomic_ms);
    stats_row(out, "Gcd computations (ms)", stats.gcd_ms);
  }
  return out.str();
}

}  // namespace lacunary

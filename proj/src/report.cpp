#include "srlplan/report.hpp"

#include <cstdio>
#include <sstream>

#include "srlplan/units.hpp"

namespace srlplan {

namespace {

std::string num(double v, const char* fmt = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

double pct_body_mass(double moment_norm, const HumanModel& human) {
    return 100.0 * moment_norm / (human.body_mass * kStandardGravity * 1.0);
}

}  // namespace

std::string format_defaults_banner(const std::vector<std::string>& applied_defaults) {
    std::ostringstream out;
    for (const std::string& line : applied_defaults) out << "resolved default: " << line << "\n";
    return out.str();
}

std::string format_summary(const Scenario& scenario, const RunSummary& summary) {
    std::ostringstream out;
    out << "case: " << summary.case_label << "\n";
    out << "compensation: " << (scenario.compensation_enabled ? "on" : "off") << "\n";
    out << "duration_s: " << num(scenario.duration) << "  control_dt_s: "
        << num(scenario.planner.control_dt) << "\n";
    out << "max |M|: " << num(summary.max_norm) << " N*m  ("
        << num(pct_body_mass(summary.max_norm, scenario.human)) << " %BM)\n";
    out << "mean |M|: " << num(summary.mean_norm) << " N*m  ("
        << num(pct_body_mass(summary.mean_norm, scenario.human)) << " %BM)\n";
    out << "(%BM here = 100*|M| / (body_mass * g0 * 1 m), a convention of this tool)\n";
    out << "deviation limit: " << num(rad_to_deg(scenario.planner.deviation_limit))
        << " deg\n";
    for (const auto& limb : summary.deviation.per_limb)
        out << "deviation max limb " << limb.limb_id << ": "
            << num(rad_to_deg(limb.max_abs_deviation)) << " deg\n";
    out << "deviation violated: " << (summary.deviation.violated ? "yes" : "no") << "\n";
    out << "fallback steps: " << summary.fallback_count << "\n";
    return out.str();
}

std::string format_reduction(const std::string& case_label, const ReductionReport& report) {
    std::ostringstream out;
    out << "case: " << case_label << "\n";
    out << "max |M| without compensation: " << num(report.max_without) << " N*m\n";
    out << "max |M| with compensation:    " << num(report.max_with) << " N*m\n";
    out << "mean |M| without compensation: " << num(report.mean_without) << " N*m\n";
    out << "mean |M| with compensation:    " << num(report.mean_with) << " N*m\n";
    out << "max reduction: " << num(report.max_reduction) << " N*m ("
        << num(report.max_reduction_pct) << " %)\n";
    out << "mean reduction: " << num(report.mean_reduction) << " N*m ("
        << num(report.mean_reduction_pct) << " %)\n";
    out << "mean reduction > 0: " << (report.mean_reduction > 0.0 ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace srlplan

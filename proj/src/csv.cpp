#include "srlplan/csv.hpp"

#include <cstdio>
#include <sstream>

#include "srlplan/units.hpp"

namespace srlplan {

namespace {

void put(std::ostream& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    out << buf;
}

}  // namespace

void write_time_series_csv(std::ostream& out, const Scenario& scenario,
                           const TimeSeries& series) {
    out << "t_s";
    for (const LimbModel& limb : scenario.limbs) out << ",theta" << limb.id << "_deg";
    for (const LimbModel& limb : scenario.limbs) out << ",omega" << limb.id << "_degs";
    out << ",Mx_Nm,My_Nm,Mz_Nm,Mnorm_Nm,activated,fallback\n";

    for (const TimeSeriesEntry& entry : series.entries) {
        put(out, entry.time);
        for (const JointState& state : entry.states) {
            out << ',';
            put(out, rad_to_deg(state.angle));
        }
        for (const JointState& state : entry.states) {
            out << ',';
            put(out, rad_to_deg(state.velocity));
        }
        out << ',';
        put(out, entry.moment.moment.x);
        out << ',';
        put(out, entry.moment.moment.y);
        out << ',';
        put(out, entry.moment.moment.z);
        out << ',';
        put(out, entry.moment.norm);
        out << ',' << (entry.activated ? 1 : 0) << ',' << (entry.fallback ? 1 : 0) << '\n';
    }
}

std::string time_series_csv(const Scenario& scenario, const TimeSeries& series) {
    std::ostringstream out;
    write_time_series_csv(out, scenario, series);
    return out.str();
}

}  // namespace srlplan

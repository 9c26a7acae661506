#pragma once

#include <ostream>
#include <string>

#include "srlplan/scenario.hpp"
#include "srlplan/sim_engine.hpp"

namespace srlplan {

// One row per logged control step:
//   t_s, theta<id>_deg.., omega<id>_degs.., Mx_Nm, My_Nm, Mz_Nm, Mnorm_Nm,
//   activated, fallback
// Values are printed with 15 significant digits; booleans as 0/1.
void write_time_series_csv(std::ostream& out, const Scenario& scenario,
                           const TimeSeries& series);

std::string time_series_csv(const Scenario& scenario, const TimeSeries& series);

}  // namespace srlplan

#pragma once

#include "dpdelta/zariski.hpp"

namespace dpd {

struct NotCertified : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PointRow {
    std::string point;
    Rat a_o;
    Rat s_w;
    Rat ratio;
};

struct FlagReport {
    std::string flag;
    Rat a;
    Rat s;
    Rat upper;
    std::vector<PointRow> rows;
    Rat lower;
    bool certified = false;
};

Rat s_flag(const SurfaceConfig& c, const Decomposition& d);
Rat s_flag(const SurfaceConfig& c, const std::string& flag);

PiecewisePoly h_at_point(const Decomposition& d, const PointSpec& p);
PiecewisePoly h_at_point(const SurfaceConfig& c, const std::string& flag, const PointSpec& p);

Rat s_w_point(const SurfaceConfig& c, const Decomposition& d, const PointSpec& p);
Rat s_w_point(const SurfaceConfig& c, const std::string& flag, const PointSpec& p);

FlagReport flag_report(const SurfaceConfig& c, const Decomposition& d, const std::vector<PointSpec>& points);
FlagReport flag_report(const SurfaceConfig& c, const std::string& flag, const std::vector<PointSpec>& points);

// Min of upper bounds; the minimizer must be certified and every lower bound must reach it.
Rat certified_min(const std::vector<FlagReport>& reports);

json flag_report_to_json(const FlagReport& r);

}  // namespace dpd

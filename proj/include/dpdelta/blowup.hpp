#pragma once

#include "dpdelta/config.hpp"

namespace dpd {

struct NotSmooth : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InconsistentIncidence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BlowupResult {
    SurfaceConfig config;
    std::string e_p_name;
    Rat a_e_p;
    Rat pullback_coeff;  // coefficient of E_P in the pullback of -K
};

// Multiplicity of each curve at the point: the listed incidences plus 1 for on_curve.
std::vector<std::pair<std::string, int>> point_multiplicities(const PointSpec& p);

// new_points are attached to the blown-up config (e.g. points on E_P).
BlowupResult blowup(const SurfaceConfig& c, const PointSpec& p, const std::string& e_p_name = "EP",
                    const std::vector<PointSpec>& new_points = {});

// Old-basis class -> new basis: each curve goes to its strict transform plus m E_P.
DivisorClass pullback(const SurfaceConfig& old_config, const PointSpec& p, const DivisorClass& d);

}  // namespace dpd

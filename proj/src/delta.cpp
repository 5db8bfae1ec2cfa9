#include "dpdelta/delta.hpp"

namespace dpd {

Rat s_flag(const SurfaceConfig& c, const Decomposition& d) {
    return integrate(d.p_sq(), 0, d.tau) / c.norm;
}

Rat s_flag(const SurfaceConfig& c, const std::string& flag) { return s_flag(c, parametric_decompose(c, flag)); }

PiecewisePoly h_at_point(const Decomposition& d, const PointSpec& p) {
    PiecewisePoly nr = n_restricted_at_point(d, p);
    std::vector<Poly> pieces;
    for (size_t k = 0; k < d.chambers.size(); ++k) {
        const Poly& pf = d.chambers[k].dot(d.flag);
        pieces.push_back(pf * nr.pieces()[k] + pf * pf * Rat(1, 2));
    }
    return PiecewisePoly(nr.breakpoints(), pieces, true);
}

PiecewisePoly h_at_point(const SurfaceConfig& c, const std::string& flag, const PointSpec& p) {
    return h_at_point(parametric_decompose(c, flag), p);
}

Rat s_w_point(const SurfaceConfig& c, const Decomposition& d, const PointSpec& p) {
    return 2 * integrate(h_at_point(d, p), 0, d.tau) / c.norm;
}

Rat s_w_point(const SurfaceConfig& c, const std::string& flag, const PointSpec& p) {
    return s_w_point(c, parametric_decompose(c, flag), p);
}

FlagReport flag_report(const SurfaceConfig& c, const Decomposition& d, const std::vector<PointSpec>& points) {
    FlagReport r;
    r.flag = d.flag;
    r.a = c.discrepancy_of(d.flag);
    r.s = s_flag(c, d);
    if (r.s <= 0) throw std::logic_error("S(" + d.flag + ") is not positive");
    r.upper = r.a / r.s;
    r.lower = r.upper;
    r.certified = true;
    for (const auto& p : points) {
        PointRow row;
        row.point = p.id;
        row.a_o = 1 - p.different;
        row.s_w = s_w_point(c, d, p);
        if (row.s_w <= 0) throw std::logic_error("S(W;" + p.id + ") is not positive");
        row.ratio = row.a_o / row.s_w;
        if (row.ratio < r.lower) r.lower = row.ratio;
        if (row.ratio < r.upper) r.certified = false;
        r.rows.push_back(row);
    }
    return r;
}

FlagReport flag_report(const SurfaceConfig& c, const std::string& flag, const std::vector<PointSpec>& points) {
    return flag_report(c, parametric_decompose(c, flag), points);
}

Rat certified_min(const std::vector<FlagReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("certified_min: no flag reports");
    const FlagReport* best = &reports.front();
    for (const auto& r : reports)
        if (r.upper < best->upper || (r.upper == best->upper && r.certified && !best->certified)) best = &r;
    if (!best->certified)
        throw NotCertified("minimizing flag " + best->flag + " has lower bound " + to_string(best->lower) +
                           " < " + to_string(best->upper));
    for (const auto& r : reports)
        if (r.lower < best->upper)
            throw NotCertified("flag " + r.flag + " only certifies " + to_string(r.lower) + " < " +
                               to_string(best->upper));
    return best->upper;
}

json flag_report_to_json(const FlagReport& r) {
    json rows = json::array();
    for (const auto& p : r.rows)
        rows.push_back(json{{"point", p.point},
                            {"A_O", to_string(p.a_o)},
                            {"S_W", to_string(p.s_w)},
                            {"ratio", to_string(p.ratio)}});
    return json{{"flag", r.flag},        {"A", to_string(r.a)},         {"S", to_string(r.s)},
                {"upper_delta", to_string(r.upper)}, {"point_rows", rows}, {"lower_delta", to_string(r.lower)},
                {"certified_equal", r.certified}};
}

}  // namespace dpd

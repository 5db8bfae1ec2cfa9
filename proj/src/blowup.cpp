#include "dpdelta/blowup.hpp"

namespace dpd {

std::vector<std::pair<std::string, int>> point_multiplicities(const PointSpec& p) {
    std::vector<std::pair<std::string, int>> m;
    if (!p.on_curve.empty()) m.emplace_back(p.on_curve, 1);
    for (const auto& [g, k] : p.incidences) m.emplace_back(g, k);
    return m;
}

namespace {

Vec multiplicity_vector(const SurfaceConfig& c, const PointSpec& p) {
    Vec m(c.size());
    for (const auto& [g, k] : point_multiplicities(p)) {
        if (!c.has_curve(g)) throw InconsistentIncidence("point " + p.id + " refers to unknown curve " + g);
        m[c.index(g)] += k;
    }
    if (!p.on_curve.empty()) {
        size_t f = c.index(p.on_curve);
        for (const auto& [g, k] : p.incidences)
            if (g == p.on_curve || Rat(k) > c.gram[c.index(g)][f] || k <= 0)
                throw InconsistentIncidence("point " + p.id + ": multiplicity " + std::to_string(k) + " of " + g +
                                            " is incompatible with " + g + "." + p.on_curve);
    }
    return m;
}

}  // namespace

BlowupResult blowup(const SurfaceConfig& c, const PointSpec& p, const std::string& e_p_name,
                    const std::vector<PointSpec>& new_points) {
    if (!c.smooth_surface) throw NotSmooth(c.name + " is not smooth; only ordinary blowups are supported");
    if (c.has_curve(e_p_name)) throw std::invalid_argument("curve " + e_p_name + " already exists in " + c.name);
    const Vec m = multiplicity_vector(c, p);
    const size_t n = c.size();

    BlowupResult r;
    r.e_p_name = e_p_name;
    SurfaceConfig& o = r.config;
    o.name = c.name + "+" + e_p_name;
    o.norm = c.norm;
    o.smooth_surface = true;
    o.gram.assign(n + 1, Vec(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) o.gram[i][j] = c.gram[i][j] - m[i] * m[j];
        o.gram[i][n] = o.gram[n][i] = m[i];
    }
    o.gram[n][n] = -1;
    for (size_t i = 0; i < n; ++i) {
        CurveRecord cv = c.curves[i];
        cv.self_int = o.gram[i][i];
        if (m[i] != 0) cv.kind = CurveKind::other;
        o.curves.push_back(cv);
    }
    // anti_k becomes the pullback of -K, which is orthogonal to E_P, so adjunction does not apply to it.
    o.curves.push_back({e_p_name, -1, CurveKind::other});

    o.anti_k = c.anti_k;
    r.pullback_coeff = dot(c.anti_k, m);
    o.anti_k.push_back(r.pullback_coeff);

    r.a_e_p = 2;
    for (size_t i = 0; i < n; ++i)
        if (m[i] != 0) r.a_e_p += m[i] * (c.discrepancy_of(c.curves[i].name) - 1);
    o.discrepancy = c.discrepancy;
    o.discrepancy.emplace_back(e_p_name, r.a_e_p);
    o.points = new_points;
    return r;
}

DivisorClass pullback(const SurfaceConfig& c, const PointSpec& p, const DivisorClass& d) {
    if (d.coeffs.size() != c.size()) throw DimensionMismatch("divisor length does not match config");
    const Vec m = multiplicity_vector(c, p);
    DivisorClass r{d.coeffs};
    r.coeffs.push_back(dot(d.coeffs, m));
    return r;
}

}  // namespace dpd

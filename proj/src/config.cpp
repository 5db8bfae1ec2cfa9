#include "dpdelta/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace dpd {

std::string to_string(CurveKind k) {
    switch (k) {
        case CurveKind::minus_one: return "minus_one";
        case CurveKind::minus_two: return "minus_two";
        case CurveKind::anticanonical_transform: return "anticanonical_transform";
        case CurveKind::orbifold: return "orbifold";
        case CurveKind::other: return "other";
    }
    return "other";
}

CurveKind parse_curve_kind(const std::string& s) {
    if (s == "minus_one") return CurveKind::minus_one;
    if (s == "minus_two") return CurveKind::minus_two;
    if (s == "anticanonical_transform") return CurveKind::anticanonical_transform;
    if (s == "orbifold") return CurveKind::orbifold;
    if (s == "other") return CurveKind::other;
    throw std::invalid_argument("unknown curve kind '" + s + "'");
}

int PointSpec::incidence(const std::string& curve) const {
    for (const auto& [n, m] : incidences)
        if (n == curve) return m;
    return 0;
}

bool SurfaceConfig::has_curve(const std::string& n) const {
    for (const auto& c : curves)
        if (c.name == n) return true;
    return false;
}

size_t SurfaceConfig::index(const std::string& n) const {
    for (size_t i = 0; i < curves.size(); ++i)
        if (curves[i].name == n) return i;
    throw std::out_of_range("no curve named '" + n + "' in " + name);
}

const PointSpec& SurfaceConfig::point(const std::string& id) const {
    for (const auto& p : points)
        if (p.id == id) return p;
    throw std::out_of_range("no point '" + id + "' in " + name);
}

Rat SurfaceConfig::discrepancy_of(const std::string& curve) const {
    for (const auto& [n, a] : discrepancy)
        if (n == curve) return a;
    return 1;
}

Rat intersect(const SurfaceConfig& c, const DivisorClass& d1, const DivisorClass& d2) {
    if (d1.coeffs.size() != c.size() || d2.coeffs.size() != c.size())
        throw DimensionMismatch("divisor class length does not match curve count");
    return dot(d1.coeffs, mat_vec(c.gram, d2.coeffs));
}

DivisorClass unit_class(const SurfaceConfig& c, const std::string& curve) {
    DivisorClass d{Vec(c.size())};
    d.coeffs[c.index(curve)] = 1;
    return d;
}

DivisorClass anticanonical(const SurfaceConfig& c) { return DivisorClass{c.anti_k}; }

bool ValidationReport::ok() const {
    for (const auto& ch : checks)
        if (!ch.ok) return false;
    return true;
}

bool ValidationReport::failed(const std::string& rule) const {
    for (const auto& ch : checks)
        if (ch.rule == rule && !ch.ok) return true;
    return false;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& ch : checks)
        os << (ch.ok ? "pass " : "FAIL ") << ch.rule << (ch.detail.empty() ? "" : ": " + ch.detail) << "\n";
    return os.str();
}

namespace {

void add(ValidationReport& r, const std::string& rule, const std::vector<std::string>& bad) {
    std::string detail;
    for (size_t i = 0; i < bad.size() && i < 6; ++i) detail += (i ? "; " : "") + bad[i];
    if (bad.size() > 6) detail += "; ...";
    r.checks.push_back({rule, bad.empty(), detail});
}

}  // namespace

ValidationReport validate(const SurfaceConfig& c) {
    ValidationReport r;
    const size_t n = c.size();
    std::vector<std::string> bad;

    std::set<std::string> names;
    for (const auto& cv : c.curves)
        if (!names.insert(cv.name).second) bad.push_back("duplicate curve " + cv.name);
    add(r, "unique names", bad);

    bad.clear();
    bool square = c.gram.size() == n;
    for (const auto& row : c.gram) square = square && row.size() == n;
    if (!square) bad.push_back("gram is not " + std::to_string(n) + "x" + std::to_string(n));
    if (c.anti_k.size() != n) bad.push_back("anti_k has length " + std::to_string(c.anti_k.size()));
    add(r, "dimensions", bad);
    if (!square || c.anti_k.size() != n) return r;

    bad.clear();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (c.gram[i][j] != c.gram[j][i]) bad.push_back(c.curves[i].name + "," + c.curves[j].name);
    add(r, "gram symmetric", bad);

    bad.clear();
    for (size_t i = 0; i < n; ++i)
        if (c.gram[i][i] != c.curves[i].self_int) bad.push_back(c.curves[i].name);
    add(r, "gram diagonal", bad);

    bad.clear();
    for (const auto& cv : c.curves) {
        if (cv.kind == CurveKind::minus_one && cv.self_int != -1) bad.push_back(cv.name);
        if (cv.kind == CurveKind::minus_two && cv.self_int != -2) bad.push_back(cv.name);
    }
    add(r, "kind self-intersection", bad);

    bad.clear();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (c.gram[i][j] < 0) bad.push_back(c.curves[i].name + "." + c.curves[j].name + "=" + to_string(c.gram[i][j]));
    add(r, "distinct curves meet nonnegatively", bad);

    bad.clear();
    if (c.norm <= 0) bad.push_back("norm " + to_string(c.norm));
    Vec gk = mat_vec(c.gram, c.anti_k);
    Rat kk = dot(c.anti_k, gk);
    if (kk != c.norm) bad.push_back("anti_k^2 = " + to_string(kk) + " != " + to_string(c.norm));
    add(r, "anti_k norm", bad);

    bad.clear();
    if (c.smooth_surface) {
        for (size_t i = 0; i < n; ++i) {
            const auto& cv = c.curves[i];
            if (cv.kind != CurveKind::minus_one && cv.kind != CurveKind::minus_two) continue;
            if (gk[i] != cv.self_int + 2)
                bad.push_back(cv.name + ": -K.G = " + to_string(gk[i]));
        }
    }
    add(r, "adjunction", bad);

    bad.clear();
    for (const auto& [nm, a] : c.discrepancy) {
        if (!c.has_curve(nm)) bad.push_back("discrepancy of unknown curve " + nm);
        else if (a <= 0) bad.push_back(nm + " has log discrepancy " + to_string(a));
    }
    add(r, "discrepancies", bad);

    bad.clear();
    std::vector<std::string> inc_bad, diff_bad;
    std::set<std::string> ids;
    for (const auto& p : c.points) {
        if (!ids.insert(p.id).second) bad.push_back("duplicate point id " + p.id);
        if (!p.on_curve.empty() && !c.has_curve(p.on_curve)) {
            bad.push_back(p.id + " on unknown curve " + p.on_curve);
            continue;
        }
        for (const auto& [g, m] : p.incidences) {
            if (!c.has_curve(g)) {
                bad.push_back(p.id + " meets unknown curve " + g);
                continue;
            }
            if (m <= 0) inc_bad.push_back(p.id + ": multiplicity " + std::to_string(m) + " at " + g);
            if (!p.on_curve.empty()) {
                if (g == p.on_curve) inc_bad.push_back(p.id + ": lists its own curve");
                else if (Rat(m) > c.gram[c.index(g)][c.index(p.on_curve)])
                    inc_bad.push_back(p.id + ": (" + g + "." + p.on_curve + ")_P exceeds " + g + "." + p.on_curve);
            }
        }
        if (p.different < 0 || p.different >= 1) diff_bad.push_back(p.id + ": different " + to_string(p.different));
        if (c.smooth_surface && p.different != 0) diff_bad.push_back(p.id + ": nonzero different on a smooth surface");
    }
    add(r, "point references", bad);
    add(r, "point incidences", inc_bad);
    add(r, "point differents", diff_bad);
    return r;
}

json point_to_json(const PointSpec& p) {
    json inc = json::object();
    for (const auto& [g, m] : p.incidences) inc[g] = m;
    return json{{"id", p.id}, {"on_curve", p.on_curve}, {"incidences", inc}, {"different", to_string(p.different)}};
}

json config_to_json(const SurfaceConfig& c) {
    json curves = json::array();
    for (const auto& cv : c.curves)
        curves.push_back(json{{"name", cv.name}, {"self_int", to_string(cv.self_int)}, {"kind", to_string(cv.kind)}});
    json gram = json::array();
    for (const auto& row : c.gram) {
        json jr = json::array();
        for (const auto& x : row) jr.push_back(to_string(x));
        gram.push_back(jr);
    }
    json anti = json::array();
    for (const auto& x : c.anti_k) anti.push_back(to_string(x));
    json disc = json::object();
    for (const auto& [n, a] : c.discrepancy) disc[n] = to_string(a);
    json pts = json::array();
    for (const auto& p : c.points) pts.push_back(point_to_json(p));
    return json{{"name", c.name},   {"norm", to_string(c.norm)}, {"smooth_surface", c.smooth_surface},
                {"curves", curves}, {"gram", gram},              {"anti_k", anti},
                {"discrepancy", disc}, {"points", pts}};
}

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where + ": missing field '" + key + "'");
    return *it;
}

Rat rat_field(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) throw SchemaError(where + ": expected a rational string");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(where + ": " + e.what());
    }
}

std::string str_field(const json& j, const std::string& where) {
    if (!j.is_string()) throw SchemaError(where + ": expected a string");
    return j.get<std::string>();
}

}  // namespace

PointSpec point_from_json(const json& j, const std::string& where) {
    PointSpec p;
    p.id = str_field(field(j, "id", where), where + ".id");
    p.on_curve = str_field(field(j, "on_curve", where), where + ".on_curve");
    const json& inc = field(j, "incidences", where);
    if (!inc.is_object()) throw SchemaError(where + ".incidences: expected an object");
    for (auto it = inc.begin(); it != inc.end(); ++it) {
        if (!it.value().is_number_integer())
            throw SchemaError(where + ".incidences." + it.key() + ": expected an integer");
        p.incidences.emplace_back(it.key(), it.value().get<int>());
    }
    p.different = rat_field(field(j, "different", where), where + ".different");
    return p;
}

SurfaceConfig config_from_json(const json& j, const std::string& src) {
    SurfaceConfig c;
    c.name = str_field(field(j, "name", src), src + ".name");
    c.norm = rat_field(field(j, "norm", src), src + ".norm");
    const json& sm = field(j, "smooth_surface", src);
    if (!sm.is_boolean()) throw SchemaError(src + ".smooth_surface: expected a boolean");
    c.smooth_surface = sm.get<bool>();

    const json& curves = field(j, "curves", src);
    if (!curves.is_array()) throw SchemaError(src + ".curves: expected an array");
    for (size_t i = 0; i < curves.size(); ++i) {
        std::string w = src + ".curves[" + std::to_string(i) + "]";
        CurveRecord cv;
        cv.name = str_field(field(curves[i], "name", w), w + ".name");
        cv.self_int = rat_field(field(curves[i], "self_int", w), w + ".self_int");
        try {
            cv.kind = parse_curve_kind(str_field(field(curves[i], "kind", w), w + ".kind"));
        } catch (const std::invalid_argument& e) {
            throw SchemaError(w + ".kind: " + e.what());
        }
        c.curves.push_back(cv);
    }
    const size_t n = c.curves.size();

    const json& gram = field(j, "gram", src);
    if (!gram.is_array() || gram.size() != n)
        throw SchemaError(src + ".gram: expected " + std::to_string(n) + " rows");
    for (size_t i = 0; i < n; ++i) {
        if (!gram[i].is_array() || gram[i].size() != n)
            throw SchemaError(src + ".gram[" + std::to_string(i) + "]: expected " + std::to_string(n) + " entries");
        Vec row;
        for (size_t k = 0; k < n; ++k)
            row.push_back(rat_field(gram[i][k], src + ".gram[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
        c.gram.push_back(row);
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t k = i + 1; k < n; ++k)
            if (c.gram[i][k] != c.gram[k][i])
                throw SchemaError(src + ".gram[" + std::to_string(i) + "][" + std::to_string(k) +
                                  "]: matrix is not symmetric");

    const json& anti = field(j, "anti_k", src);
    if (!anti.is_array() || anti.size() != n)
        throw SchemaError(src + ".anti_k: expected " + std::to_string(n) + " entries");
    for (size_t i = 0; i < n; ++i) c.anti_k.push_back(rat_field(anti[i], src + ".anti_k[" + std::to_string(i) + "]"));

    const json& disc = field(j, "discrepancy", src);
    if (!disc.is_object()) throw SchemaError(src + ".discrepancy: expected an object");
    for (auto it = disc.begin(); it != disc.end(); ++it)
        c.discrepancy.emplace_back(it.key(), rat_field(it.value(), src + ".discrepancy." + it.key()));

    const json& pts = field(j, "points", src);
    if (!pts.is_array()) throw SchemaError(src + ".points: expected an array");
    for (size_t i = 0; i < pts.size(); ++i)
        c.points.push_back(point_from_json(pts[i], src + ".points[" + std::to_string(i) + "]"));
    return c;
}

SurfaceConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path + ": cannot open");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return config_from_json(j, path);
}

std::string canonical_text(const SurfaceConfig& c) { return config_to_json(c).dump(1) + "\n"; }

void save_config(const SurfaceConfig& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot write");
    out << canonical_text(c);
}

}  // namespace dpd

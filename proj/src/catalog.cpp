#include "dpdelta/catalog.hpp"

#include "dpdelta/blowup.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#ifndef DPDELTA_CATALOG_DIR
#define DPDELTA_CATALOG_DIR "catalog"
#endif

namespace fs = std::filesystem;

namespace dpd {

const SurfaceConfig& CaseRecord::config(const std::string& key) const {
    auto it = configs.find(key);
    if (it == configs.end()) throw CaseRecordError(name + ": no config '" + key + "'");
    return it->second;
}

std::vector<PointSpec> CaseRecord::flag_points(const FlagEntry& f) const {
    const SurfaceConfig& c = config(f.config);
    std::vector<PointSpec> pts;
    for (const auto& id : f.points) {
        try {
            pts.push_back(c.point(id));
        } catch (const std::out_of_range&) {
            throw CaseRecordError(name + ": flag " + f.flag + " lists unknown point " + id);
        }
        if (pts.back().on_curve != f.flag)
            throw CaseRecordError(name + ": point " + id + " is not on flag " + f.flag);
    }
    return pts;
}

std::string default_catalog_dir() {
    if (const char* env = std::getenv("DPDELTA_CATALOG"); env && *env) return env;
    return DPDELTA_CATALOG_DIR;
}

std::vector<std::pair<std::string, std::string>> list_cases(const std::string& catalog_dir) {
    std::vector<std::pair<std::string, std::string>> out;
    if (!fs::is_directory(catalog_dir)) throw CaseRecordError("catalog directory " + catalog_dir + " not found");
    for (const auto& e : fs::directory_iterator(catalog_dir)) {
        if (!e.is_directory()) continue;
        fs::path ex = e.path() / "expected.json";
        std::string name = e.path().filename().string();
        if (fs::exists(ex)) {
            try {
                std::ifstream in(ex);
                json j = json::parse(in);
                if (j.contains("name") && j["name"].is_string()) name = j["name"].get<std::string>();
            } catch (const std::exception&) {
                // reported when the case is loaded
            }
        }
        out.emplace_back(name, e.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Rat rat_at(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_string()) throw SchemaError(where + ": missing rational '" + key + "'");
    try {
        return parse_rat(j[key].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(where + "." + key + ": " + e.what());
    }
}

std::string str_at(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_string()) throw SchemaError(where + ": missing string '" + key + "'");
    return j[key].get<std::string>();
}

PrintedValue printed_from_json(const json& j, const std::string& where) {
    PrintedValue p;
    p.rel = j.contains("rel") ? j["rel"].get<std::string>() : "=";
    if (p.rel != "<=" && p.rel != "=") throw SchemaError(where + ".rel: expected '<=' or '='");
    p.value = rat_at(j, "value", where);
    p.erratum = j.value("erratum", false);
    return p;
}

}  // namespace

CaseRecord case_from_json(const json& j, const std::string& dir) {
    const std::string w = dir + "/expected.json";
    CaseRecord c;
    c.dir = dir;
    c.name = str_at(j, "name", w);
    c.delta = rat_at(j, "delta", w);
    if (!j.contains("configs") || !j["configs"].is_object()) throw SchemaError(w + ": missing 'configs'");
    for (auto it = j["configs"].begin(); it != j["configs"].end(); ++it)
        c.config_files.emplace_back(it.key(), it.value().get<std::string>());
    if (j.contains("derived"))
        for (size_t i = 0; i < j["derived"].size(); ++i) {
            const json& dj = j["derived"][i];
            std::string dw = w + ".derived[" + std::to_string(i) + "]";
            DerivedEntry d{str_at(dj, "id", dw), str_at(dj, "from", dw), str_at(dj, "point", dw),
                           dj.value("e_p_name", std::string("EP")), {}};
            if (dj.contains("points"))
                for (size_t k = 0; k < dj["points"].size(); ++k)
                    d.points.push_back(point_from_json(dj["points"][k], dw + ".points[" + std::to_string(k) + "]"));
            c.derived.push_back(d);
        }
    if (!j.contains("flags") || !j["flags"].is_array()) throw SchemaError(w + ": missing 'flags'");
    for (size_t i = 0; i < j["flags"].size(); ++i) {
        const json& fj = j["flags"][i];
        std::string fw = w + ".flags[" + std::to_string(i) + "]";
        FlagEntry f;
        f.config = str_at(fj, "config", fw);
        f.flag = str_at(fj, "flag", fw);
        f.points = fj.at("points").get<std::vector<std::string>>();
        const json& sj = fj.at("S");
        f.s.exact = rat_at(sj, "exact", fw + ".S");
        if (sj.contains("printed")) f.s.printed = rat_at(sj, "printed", fw + ".S");
        f.s.erratum = sj.value("erratum", false);
        f.s.note = sj.value("note", std::string());
        for (size_t k = 0; k < fj.at("sw").size(); ++k) {
            const json& swj = fj["sw"][k];
            std::string sw = fw + ".sw[" + std::to_string(k) + "]";
            SwExpectation e;
            e.point = str_at(swj, "point", sw);
            e.exact = rat_at(swj, "exact", sw);
            if (swj.contains("printed")) e.printed = printed_from_json(swj["printed"], sw + ".printed");
            if (swj.contains("printed_exact")) {
                e.printed_exact = printed_from_json(swj["printed_exact"], sw + ".printed_exact");
                e.printed_exact->rel = "=";
            }
            f.sw.push_back(e);
        }
        f.group = fj.value("group", std::string());
        f.variant = fj.value("variant", std::string());
        if (fj.contains("chambers"))
            for (const auto& cj : fj["chambers"]) {
                ChamberExpectation ce;
                ce.lo = rat_at(cj, "lo", fw + ".chambers");
                ce.hi = rat_at(cj, "hi", fw + ".chambers");
                ce.support = cj.at("support").get<std::vector<std::string>>();
                for (auto it = cj.at("n_coeffs").begin(); it != cj.at("n_coeffs").end(); ++it)
                    ce.n_coeffs.emplace_back(it.key(), poly_from_json(it.value()));
                ce.p_sq = poly_from_json(cj.at("p_sq"));
                ce.p_dot_flag = poly_from_json(cj.at("p_dot_flag"));
                f.chambers.push_back(ce);
            }
        c.flags.push_back(f);
    }
    if (j.contains("notes"))
        for (const auto& n : j["notes"]) c.notes.push_back(n.get<std::string>());

    for (const auto& [key, file] : c.config_files) c.configs[key] = load_config((fs::path(dir) / file).string());
    for (const auto& d : c.derived) {
        const SurfaceConfig& base = c.config(d.from);
        PointSpec p;
        try {
            p = base.point(d.point);
        } catch (const std::out_of_range&) {
            throw CaseRecordError(c.name + ": derived '" + d.id + "' uses unknown point " + d.point);
        }
        BlowupResult b = blowup(base, p, d.e_p_name, d.points);
        b.config.name = c.name + "-" + d.id;
        c.configs[d.id] = b.config;
    }
    for (const auto& f : c.flags) {
        if (!c.config(f.config).has_curve(f.flag)) throw CaseRecordError(c.name + ": unknown flag curve " + f.flag);
        std::set<std::string> listed(f.points.begin(), f.points.end());
        for (const auto& e : f.sw)
            if (!listed.count(e.point))
                throw CaseRecordError(c.name + ": expectation for point " + e.point + " not listed on flag " + f.flag);
        c.flag_points(f);
    }
    return c;
}

CaseRecord load_case_dir(const std::string& dir) {
    fs::path ex = fs::path(dir) / "expected.json";
    std::ifstream in(ex);
    if (!in) throw SchemaError(ex.string() + ": cannot open");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(ex.string() + ": " + e.what());
    }
    return case_from_json(j, dir);
}

CaseRecord load_case(const std::string& name, const std::string& catalog_dir) {
    for (const auto& [n, dir] : list_cases(catalog_dir))
        if (n == name || fs::path(dir).filename() == name) return load_case_dir(dir);
    throw CaseRecordError("no case named '" + name + "' in " + catalog_dir);
}

std::vector<FlagResult> compute_flags(const CaseRecord& c) {
    std::vector<FlagResult> out;
    for (const auto& f : c.flags) {
        const SurfaceConfig& cfg = c.config(f.config);
        FlagResult r;
        r.entry = &f;
        r.decomposition = parametric_decompose(cfg, f.flag);
        r.report = flag_report(cfg, r.decomposition, c.flag_points(f));
        out.push_back(std::move(r));
    }
    return out;
}

Rat case_delta(const CaseRecord& c) {
    std::vector<FlagReport> reps;
    for (auto& r : compute_flags(c)) reps.push_back(r.report);
    return certified_min(reps);
}

bool CaseReport::pass() const { return !load_failed && count(RowStatus::fail) == 0; }

size_t CaseReport::count(RowStatus s) const {
    return std::count_if(rows.begin(), rows.end(), [&](const ReportRow& r) { return r.status == s; });
}

namespace {

std::string flag_label(const FlagEntry& f) {
    std::string l = f.flag;
    if (!f.variant.empty()) l += " (" + f.variant + ")";
    return l;
}

std::string compare_chambers(const SurfaceConfig& cfg, const Decomposition& d,
                             const std::vector<ChamberExpectation>& want) {
    if (d.chambers.size() != want.size())
        return std::to_string(d.chambers.size()) + " chambers, expected " + std::to_string(want.size());
    for (size_t k = 0; k < want.size(); ++k) {
        const Chamber& got = d.chambers[k];
        const ChamberExpectation& w = want[k];
        std::string at = "chamber " + std::to_string(k) + ": ";
        if (got.lo != w.lo || got.hi != w.hi)
            return at + "[" + to_string(got.lo) + "," + to_string(got.hi) + "] vs [" + to_string(w.lo) + "," +
                   to_string(w.hi) + "]";
        std::set<std::string> gs(got.support.begin(), got.support.end()), ws(w.support.begin(), w.support.end());
        if (gs != ws) return at + "support differs";
        for (const auto& cv : cfg.curves) {
            Poly expected;
            for (const auto& [g, p] : w.n_coeffs)
                if (g == cv.name) expected = p;
            if (got.n_coeff(cv.name) != expected)
                return at + "N coefficient of " + cv.name + " is " + got.n_coeff(cv.name).str() + ", expected " +
                       expected.str();
        }
        if (got.p_sq != w.p_sq) return at + "P^2 = " + got.p_sq.str() + ", expected " + w.p_sq.str();
        if (got.dot(d.flag) != w.p_dot_flag)
            return at + "P.F = " + got.dot(d.flag).str() + ", expected " + w.p_dot_flag.str();
    }
    return "";
}

}  // namespace

CaseReport verify_case(const CaseRecord& c) {
    CaseReport rep;
    rep.name = c.name;
    auto row = [&](std::string what, std::string expected, std::string computed, RowStatus st, std::string note = {}) {
        rep.rows.push_back({std::move(what), std::move(expected), std::move(computed), st, std::move(note)});
    };
    auto ok = [](bool b) { return b ? RowStatus::pass : RowStatus::fail; };

    for (const auto& [key, cfg] : c.configs) {
        ValidationReport v = validate(cfg);
        std::string failed;
        for (const auto& ch : v.checks)
            if (!ch.ok) failed += (failed.empty() ? "" : "; ") + ch.rule + ": " + ch.detail;
        row("validate " + key, "pass", v.ok() ? "pass" : "fail", ok(v.ok()), failed);
    }

    std::vector<FlagReport> reports;
    std::map<std::string, std::pair<Rat, Rat>> group_values;  // group -> (S, upper)
    for (const auto& f : c.flags) {
        const SurfaceConfig& cfg = c.config(f.config);
        const std::string fl = flag_label(f);
        Decomposition d;
        FlagReport r;
        try {
            d = parametric_decompose(cfg, f.flag);
            r = flag_report(cfg, d, c.flag_points(f));
        } catch (const std::exception& e) {
            row("S(" + fl + ")", to_string(f.s.exact), "error", RowStatus::fail, e.what());
            continue;
        }
        reports.push_back(r);
        row("S(" + fl + ")", to_string(f.s.exact), to_string(r.s), ok(r.s == f.s.exact));
        if (f.s.printed) {
            bool eq = r.s == *f.s.printed;
            row("S(" + fl + ") printed", "= " + to_string(*f.s.printed), to_string(r.s),
                f.s.erratum ? RowStatus::noted : ok(eq), f.s.note);
        }
        for (const auto& e : f.sw) {
            Rat got;
            for (const auto& pr : r.rows)
                if (pr.point == e.point) got = pr.s_w;
            std::string what = "S(W;" + e.point + ")" + (f.variant.empty() ? "" : " (" + f.variant + ")");
            row(what, to_string(e.exact), to_string(got), ok(got == e.exact));
            for (const auto* pv : {&e.printed, &e.printed_exact}) {
                if (!*pv) continue;
                const PrintedValue& p = **pv;
                bool holds = p.rel == "<=" ? got <= p.value : got == p.value;
                row(what + " printed", p.rel + " " + to_string(p.value), to_string(got),
                    p.erratum ? RowStatus::noted : ok(holds), p.erratum ? "published value is an erratum" : "");
            }
        }
        if (!f.chambers.empty()) {
            std::string diff = compare_chambers(cfg, d, f.chambers);
            row("chambers(" + fl + ")", std::to_string(f.chambers.size()) + " printed",
                diff.empty() ? "match" : "mismatch", ok(diff.empty()), diff);
        }
        if (!f.group.empty()) {
            auto [it, fresh] = group_values.emplace(f.group, std::make_pair(r.s, r.upper));
            if (!fresh) {
                bool same = it->second.first == r.s && it->second.second == r.upper;
                row("group " + f.group + " variant " + f.variant, to_string(it->second.first), to_string(r.s),
                    ok(same), same ? "" : "sub-case variants disagree");
            }
        }
    }

    try {
        rep.delta = certified_min(reports);
        row("delta", to_string(c.delta), to_string(*rep.delta), ok(*rep.delta == c.delta));
    } catch (const std::exception& e) {
        row("delta", to_string(c.delta), "uncertified", RowStatus::fail, e.what());
    }
    return rep;
}

CaseReport verify_case(const std::string& name, const std::string& catalog_dir) {
    return verify_case(load_case(name, catalog_dir));
}

size_t CatalogSummary::passed() const {
    return std::count_if(cases.begin(), cases.end(), [](const CaseReport& r) { return r.pass(); });
}

size_t CatalogSummary::failed() const { return cases.size() - passed(); }

bool CatalogSummary::any_load_failure() const {
    return std::any_of(cases.begin(), cases.end(), [](const CaseReport& r) { return r.load_failed; });
}

CatalogSummary verify_all(const std::string& catalog_dir) {
    CatalogSummary s;
    for (const auto& [name, dir] : list_cases(catalog_dir)) {
        try {
            s.cases.push_back(verify_case(load_case_dir(dir)));
        } catch (const std::exception& e) {
            CaseReport r;
            r.name = name;
            r.load_failed = true;
            r.rows.push_back({"load", "ok", "error", RowStatus::fail, e.what()});
            s.cases.push_back(r);
        }
    }
    return s;
}

std::string status_str(RowStatus s) {
    switch (s) {
        case RowStatus::pass: return "OK";
        case RowStatus::fail: return "FAIL";
        case RowStatus::noted: return "NOTED";
    }
    return "?";
}

std::string report_text(const CaseReport& r, bool verbose) {
    std::ostringstream os;
    os << r.name << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.count(RowStatus::pass) << " ok, "
       << r.count(RowStatus::fail) << " failed, " << r.count(RowStatus::noted) << " noted)\n";
    for (const auto& row : r.rows) {
        bool validate_row = row.what.rfind("validate", 0) == 0;
        if (!verbose && row.status == RowStatus::pass && validate_row) continue;
        bool relational = row.expected.rfind("<=", 0) == 0 || row.expected.rfind("= ", 0) == 0;
        if (relational) os << "  " << row.what << ": " << row.computed << " " << row.expected;
        else os << "  " << row.what << "=" << row.computed;
        os << " " << status_str(row.status);
        if (row.status != RowStatus::pass && !relational) os << " (expected " << row.expected << ")";
        if (!row.note.empty() && row.status != RowStatus::pass) os << ": " << row.note;
        os << "\n";
    }
    return os.str();
}

json report_json(const CaseReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back(json{{"what", row.what},
                            {"expected", row.expected},
                            {"computed", row.computed},
                            {"status", status_str(row.status)},
                            {"note", row.note}});
    json j{{"case", r.name}, {"pass", r.pass()}, {"rows", rows}};
    if (r.delta) j["delta"] = to_string(*r.delta);
    return j;
}

}  // namespace dpd

#include "dpdelta/blowup.hpp"
#include "dpdelta/catalog.hpp"
#include "dpdelta/oracle.hpp"
#include "dpdelta/threefold.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace dpd;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<Rat> opt_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    try {
        return parse_rat(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<PointSpec> points_on(const SurfaceConfig& c, const std::string& flag, const std::vector<std::string>& ids) {
    std::vector<PointSpec> out;
    if (ids.empty()) {
        for (const auto& p : c.points)
            if (p.on_curve == flag) out.push_back(p);
        return out;
    }
    for (const auto& id : ids) {
        try {
            out.push_back(c.point(id));
        } catch (const std::out_of_range& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

void require_curve(const SurfaceConfig& c, const std::string& flag) {
    if (!c.has_curve(flag)) throw UsageError("no curve '" + flag + "' in " + c.name);
}

std::string pp_text(const PiecewisePoly& pp) { return pp.str(); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact delta-invariant computations for Du Val del Pezzo surfaces of degree 1", "dpdelta"};
    app.require_subcommand(1);
    bool as_json = false;
    std::string catalog;
    app.add_flag("--json", as_json, "JSON output");
    app.add_option("--catalog", catalog, "catalog directory (default: $DPDELTA_CATALOG or the built-in path)");

    std::string config_path, flag, pullback, point, out_path, case_name, singularities, e_p_name = "EP",
                                                                                       config_key;
    std::vector<std::string> point_ids;
    bool all = false, verbose = false;
    int trials = 100;
    std::uint64_t seed = 1;

    auto* dec = app.add_subcommand("decompose", "parametric Zariski decomposition of -K - vF");
    dec->add_option("--config", config_path, "config file")->required();
    dec->add_option("--flag", flag, "flag curve")->required();
    dec->add_option("--pullback", pullback, "replace the flag's anti_k coefficient");

    auto* s_cmd = app.add_subcommand("s", "S-invariant of a flag");
    s_cmd->add_option("--config", config_path, "config file")->required();
    s_cmd->add_option("--flag", flag, "flag curve")->required();

    auto* sw = app.add_subcommand("sw", "S(W;P) and the flag report for points on a flag");
    sw->add_option("--config", config_path, "config file")->required();
    sw->add_option("--flag", flag, "flag curve")->required();
    sw->add_option("--point", point_ids, "point ids (default: every point on the flag)");

    auto* dc = app.add_subcommand("delta-case", "flag reports and certified delta for a catalog case");
    dc->add_option("--case", case_name, "case name")->required();

    auto* ver = app.add_subcommand("verify", "recompute catalog cases against expected values");
    auto* ver_all = ver->add_flag("--all", all, "every case");
    auto* ver_case = ver->add_option("--case", case_name, "one case");
    ver_all->excludes(ver_case);
    ver->add_flag("--verbose,-v", verbose, "print every row");

    auto* tab = app.add_subcommand("table", "classification table of delta values");
    tab->add_option("--singularities", singularities, "e.g. \"A4+A3\", \"A7:red+A1\"");

    auto* bl = app.add_subcommand("blowup", "ordinary blowup of a config at a point");
    bl->add_option("--config", config_path, "config file")->required();
    bl->add_option("--point", point, "point id")->required();
    bl->add_option("--out", out_path, "output config file")->required();
    bl->add_option("--name", e_p_name, "name of the exceptional curve");

    auto* orc = app.add_subcommand("oracle", "compare the sweep against subset enumeration");
    orc->add_option("--case", case_name, "case name")->required();
    orc->add_option("--flag", flag, "flag curve")->required();
    orc->add_option("--config", config_key, "config key within the case (default: every config with this flag)");
    orc->add_option("--trials", trials, "random values of v")->check(CLI::PositiveNumber);
    orc->add_option("--seed", seed, "random seed");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }
    if (catalog.empty()) catalog = default_catalog_dir();

    try {
        if (*dec) {
            SurfaceConfig c = load_config(config_path);
            require_curve(c, flag);
            Decomposition d = parametric_decompose(c, flag, opt_rat(pullback));
            if (as_json) std::cout << decomposition_to_json(d).dump(1) << "\n";
            else std::cout << decomposition_text(d);
            return 0;
        }
        if (*s_cmd) {
            SurfaceConfig c = load_config(config_path);
            require_curve(c, flag);
            Decomposition d = parametric_decompose(c, flag);
            Rat s = s_flag(c, d);
            if (as_json)
                std::cout << json{{"flag", flag}, {"tau", to_string(d.tau)}, {"S", to_string(s)}}.dump(1) << "\n";
            else
                std::cout << "S(" << flag << ") = " << to_string(s) << "\ntau = " << to_string(d.tau) << "\nP^2 = "
                          << pp_text(d.p_sq()) << "\n";
            return 0;
        }
        if (*sw) {
            SurfaceConfig c = load_config(config_path);
            require_curve(c, flag);
            Decomposition d = parametric_decompose(c, flag);
            auto pts = points_on(c, flag, point_ids);
            FlagReport r = flag_report(c, d, pts);
            if (as_json) {
                json j = flag_report_to_json(r);
                json h = json::object();
                for (const auto& p : pts) h[p.id] = h_at_point(d, p).str();
                j["h"] = h;
                std::cout << j.dump(1) << "\n";
            } else {
                std::cout << "flag " << flag << ": A = " << to_string(r.a) << ", S = " << to_string(r.s)
                          << ", A/S = " << to_string(r.upper) << "\n";
                for (size_t k = 0; k < pts.size(); ++k) {
                    const auto& row = r.rows[k];
                    std::cout << "  " << row.point << ": h = " << h_at_point(d, pts[k]).str()
                              << "\n    S(W) = " << to_string(row.s_w) << ", A_O = " << to_string(row.a_o)
                              << ", ratio = " << to_string(row.ratio) << "\n";
                }
                std::cout << "lower = " << to_string(r.lower) << (r.certified ? ", certified" : ", not certified")
                          << "\n";
            }
            return 0;
        }
        if (*dc) {
            CaseRecord cr = load_case(case_name, catalog);
            auto results = compute_flags(cr);
            std::vector<FlagReport> reps;
            for (const auto& r : results) reps.push_back(r.report);
            std::optional<Rat> delta;
            std::string why;
            try {
                delta = certified_min(reps);
            } catch (const NotCertified& e) {
                why = e.what();
            }
            if (as_json) {
                json fl = json::array();
                for (const auto& r : results) {
                    json j = flag_report_to_json(r.report);
                    j["config"] = r.entry->config;
                    if (!r.entry->variant.empty()) j["variant"] = r.entry->variant;
                    fl.push_back(j);
                }
                json j{{"case", cr.name}, {"flags", fl}};
                j["delta"] = delta ? json(to_string(*delta)) : json(nullptr);
                if (!why.empty()) j["error"] = why;
                std::cout << j.dump(1) << "\n";
            } else {
                for (const auto& r : results) {
                    const auto& f = r.report;
                    std::cout << r.entry->config << " " << f.flag << ": S = " << to_string(f.s)
                              << ", A/S = " << to_string(f.upper) << ", lower = " << to_string(f.lower)
                              << (f.certified ? " certified" : "") << "\n";
                }
                if (delta) std::cout << "delta = " << to_string(*delta) << "\n";
                else std::cout << "delta not certified: " << why << "\n";
            }
            return delta ? 0 : 1;
        }
        if (*ver) {
            if (!all && case_name.empty()) throw UsageError("verify needs --all or --case NAME");
            CatalogSummary sum;
            if (all) sum = verify_all(catalog);
            else {
                try {
                    sum.cases.push_back(verify_case(load_case(case_name, catalog)));
                } catch (const CaseRecordError& e) {
                    throw;
                } catch (const std::exception& e) {
                    CaseReport r;
                    r.name = case_name;
                    r.load_failed = true;
                    r.rows.push_back({"load", "ok", "error", RowStatus::fail, e.what()});
                    sum.cases.push_back(r);
                }
            }
            if (as_json) {
                json cs = json::array();
                for (const auto& r : sum.cases) cs.push_back(report_json(r));
                std::cout << json{{"cases", cs}, {"passed", sum.passed()}, {"failed", sum.failed()}}.dump(1)
                          << "\n";
            } else {
                for (const auto& r : sum.cases) std::cout << report_text(r, verbose);
                if (all) std::cout << sum.passed() << "/" << sum.cases.size() << " cases pass\n";
            }
            if (sum.any_load_failure()) return 2;
            return sum.failed() == 0 ? 0 : 1;
        }
        if (*tab) {
            if (!singularities.empty()) {
                Rat d = main_theorem_delta(parse_singularities(singularities));
                if (as_json)
                    std::cout << json{{"singularities", singularities}, {"delta", to_string(d)},
                                      {"verdict", to_string(kstability_verdict(d))}}
                                     .dump(1)
                              << "\n";
                else std::cout << to_string(d) << "\n";
                return 0;
            }
            json rows = json::array();
            for (const auto& row : main_theorem_table()) {
                json combos = json::array();
                for (const auto& s : row.singularities) {
                    Rat d = main_theorem_delta(parse_singularities(s));
                    combos.push_back(json{{"singularities", s}, {"delta", to_string(d)}});
                    if (!as_json) std::cout << s << "\t" << to_string(d) << (d == row.printed ? "" : "  (printed " + to_string(row.printed) + ")") << "\n";
                }
                rows.push_back(json{{"printed", to_string(row.printed)},
                                    {"verdict", to_string(kstability_verdict(row.printed))},
                                    {"combinations", combos}});
            }
            if (as_json) std::cout << json{{"rows", rows}, {"smooth_point", to_string(smooth_point_delta())}}.dump(1) << "\n";
            else std::cout << "smooth points\t>= " << to_string(smooth_point_delta()) << "\n";
            return 0;
        }
        if (*bl) {
            SurfaceConfig c = load_config(config_path);
            PointSpec p;
            try {
                p = c.point(point);
            } catch (const std::out_of_range& e) {
                throw UsageError(e.what());
            }
            BlowupResult r = blowup(c, p, e_p_name);
            save_config(r.config, out_path);
            if (as_json)
                std::cout << json{{"out", out_path}, {"e_p_name", r.e_p_name}, {"A", to_string(r.a_e_p)},
                                  {"pullback_coeff", to_string(r.pullback_coeff)}}
                                 .dump(1)
                          << "\n";
            else
                std::cout << "wrote " << out_path << ": " << r.e_p_name << " with A = " << to_string(r.a_e_p)
                          << ", pullback coefficient " << to_string(r.pullback_coeff) << "\n";
            return 0;
        }
        if (*orc) {
            CaseRecord cr = load_case(case_name, catalog);
            std::vector<std::string> keys;
            for (const auto& f : cr.flags)
                if (f.flag == flag && (config_key.empty() || f.config == config_key) &&
                    std::find(keys.begin(), keys.end(), f.config) == keys.end())
                    keys.push_back(f.config);
            if (keys.empty()) throw UsageError("case " + cr.name + " has no flag " + flag);
            bool ok = true;
            json reps = json::array();
            for (const auto& k : keys) {
                const SurfaceConfig& c = cr.config(k);
                EquivalenceReport r = random_equivalence(c, flag, trials, seed);
                ok = ok && r.ok();
                if (as_json) reps.push_back(equivalence_to_json(c, r));
                else {
                    std::cout << cr.name << " " << k << " " << flag << ": " << r.agreed << "/" << r.trials
                              << " agree (seed " << r.seed << ", tau " << to_string(r.tau) << ")\n";
                    for (const auto& m : r.mismatches)
                        std::cout << "  v = " << to_string(m.v) << ": " << m.detail << "\n";
                }
            }
            if (as_json) std::cout << reps.dump(1) << "\n";
            return ok ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const CaseRecordError& e) {
        std::cerr << "catalog error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

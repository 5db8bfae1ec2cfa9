// One line per acceptance criterion, computed from scratch against the catalog.
#include "dpdelta/blowup.hpp"
#include "dpdelta/catalog.hpp"
#include "dpdelta/oracle.hpp"
#include "dpdelta/threefold.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace dpd;

namespace {

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> failures;
    void fail(const std::string& s) {
        pass = false;
        failures.push_back(s);
    }
};

std::vector<CaseRecord> load_all(const std::string& dir) {
    std::vector<CaseRecord> v;
    for (const auto& [name, d] : list_cases(dir)) v.push_back(load_case_dir(d));
    return v;
}

const CaseRecord& named(const std::vector<CaseRecord>& cs, const std::string& n) {
    for (const auto& c : cs)
        if (c.name == n) return c;
    throw std::out_of_range("no case " + n);
}

using FlagCache = std::map<const FlagEntry*, FlagResult>;

FlagCache compute_everything(const std::vector<CaseRecord>& cases) {
    FlagCache out;
    for (const auto& c : cases)
        for (auto& r : compute_flags(c)) out.emplace(r.entry, std::move(r));
    return out;
}

// The S values as stated for each case.
Outcome criterion1(const std::vector<CaseRecord>& cases, const FlagCache& fc) {
    const std::vector<std::tuple<const char*, const char*, Rat>> stated = {
        {"A1-nodal", "E", Rat(1, 2)},          {"A1-cuspidal", "Ebar", Rat(5, 3)},
        {"A2-nodal", "E1", Rat(5, 9)},         {"A2-nodal", "EP", Rat(7, 6)},
        {"A2-cuspidal", "EP", Rat(4, 3)},      {"A3", "E2", Rat(2, 3)},
        {"A3", "E1", Rat(5, 9)},               {"A4", "EP", Rat(3, 2)},
        {"A4", "E2", Rat(11, 15)},             {"A4", "E1", Rat(3, 5)},
        {"A5", "E3", Rat(5, 6)},               {"A5", "E2", Rat(7, 9)},
        {"A5", "E1", Rat(11, 18)},             {"A6", "E3", Rat(8, 9)},
        {"A6", "E2", Rat(29, 36)},             {"A6", "E1", Rat(13, 21)},
        {"A7-reducible", "E4", Rat(1)},        {"A7-reducible", "E3", Rat(11, 12)},
        {"A7-reducible", "E2", Rat(5, 6)},     {"A7-reducible", "E1", Rat(5, 8)},
        {"A7-irreducible", "E4", Rat(17, 18)}, {"A7-irreducible", "E3", Rat(17, 18)},
        {"A7-irreducible", "E2", Rat(37, 45)}, {"A8", "E4", Rat(1)},
        {"A8", "E3", Rat(1)},                  {"A8", "E2", Rat(5, 6)},
        {"A8", "E1", Rat(17, 27)},             {"D4", "E", Rat(1)},
        {"D4", "E1", Rat(2, 3)},               {"D5", "E", Rat(7, 6)},
        {"D5", "E1", Rat(3, 4)},               {"D6", "E", Rat(4, 3)},
        {"D6", "E1", Rat(5, 6)},               {"D7", "E", Rat(3, 2)},
        {"D7", "E1", Rat(9, 10)},              {"D8", "E", Rat(5, 3)},
        {"D8", "E2", Rat(17, 18)},             {"E6", "E2", Rat(11, 9)},
        {"E7", "E3", Rat(7, 3)},               {"E7", "E", Rat(5, 4)},
        {"E7", "E4", Rat(11, 6)},              {"E8", "E3", Rat(11, 3)},
        {"E8", "E2", Rat(5, 2)},               {"E8", "E", Rat(17, 9)},
        {"E8", "E4", Rat(3)}};
    Outcome o;
    int ok = 0;
    for (const auto& [cs, flag, want] : stated) {
        const CaseRecord& c = named(cases, cs);
        int seen = 0;
        bool good = true;
        for (const auto& f : c.flags) {
            if (f.flag != flag) continue;
            ++seen;
            const Rat& got = fc.at(&f).report.s;
            if (got != want) {
                good = false;
                o.fail(std::string(cs) + " S(" + flag + ") = " + to_string(got) + ", stated " + to_string(want));
            }
        }
        if (seen == 0) {
            good = false;
            o.fail(std::string(cs) + " has no flag " + flag);
        }
        ok += good;
    }
    o.summary = std::to_string(ok) + "/" + std::to_string(stated.size()) + " stated S values reproduced";
    return o;
}

// Every printed S(W;P) value in the catalog: "=" rows exactly, "<=" rows as bounds.
Outcome criterion2(const std::vector<CaseRecord>& cases, const FlagCache& fc) {
    Outcome o;
    int total = 0, ok = 0;
    for (const auto& c : cases)
        for (const auto& f : c.flags) {
            const FlagReport& r = fc.at(&f).report;
            for (const auto& e : f.sw) {
                Rat got;
                for (const auto& row : r.rows)
                    if (row.point == e.point) got = row.s_w;
                for (const auto* pv : {&e.printed, &e.printed_exact}) {
                    if (!*pv) continue;
                    const PrintedValue& p = **pv;
                    ++total;
                    bool holds = p.rel == "<=" ? got <= p.value : got == p.value;
                    if (holds) ++ok;
                    else
                        o.fail(c.name + (f.variant.empty() ? "" : " (" + f.variant + ")") + " S(W;" + e.point +
                               ") = " + to_string(got) + ", printed " + p.rel + " " + to_string(p.value));
                }
            }
        }
    o.summary = std::to_string(ok) + "/" + std::to_string(total) + " printed S(W;P) values hold";
    return o;
}

Outcome criterion3(const std::vector<CaseRecord>& cases, const FlagCache& fc) {
    const std::vector<std::pair<const char*, Rat>> want = {
        {"A1-nodal", 2},         {"A1-cuspidal", Rat(9, 5)}, {"A2-nodal", Rat(12, 7)},
        {"A2-cuspidal", Rat(3, 2)}, {"A3", Rat(3, 2)},       {"A4", Rat(4, 3)},
        {"A5", Rat(6, 5)},       {"A6", Rat(9, 8)},          {"A7-reducible", 1},
        {"A7-irreducible", Rat(18, 17)}, {"A8", 1},          {"D4", 1},
        {"D5", Rat(6, 7)},       {"D6", Rat(3, 4)},          {"D7", Rat(2, 3)},
        {"D8", Rat(3, 5)},       {"E6", Rat(3, 5)},          {"E7", Rat(3, 7)},
        {"E8", Rat(3, 11)}};
    Outcome o;
    int ok = 0;
    for (const auto& [cs, d] : want) {
        const CaseRecord& c = named(cases, cs);
        std::vector<FlagReport> reps;
        for (const auto& f : c.flags) reps.push_back(fc.at(&f).report);
        try {
            Rat got = certified_min(reps);
            if (got == d) ++ok;
            else o.fail(std::string(cs) + " delta = " + to_string(got) + ", expected " + to_string(d));
        } catch (const std::exception& e) {
            o.fail(std::string(cs) + ": " + e.what());
        }
    }
    int rows = 0, rows_ok = 0;
    for (const auto& row : main_theorem_table())
        for (const auto& s : row.singularities) {
            ++rows;
            Rat got = main_theorem_delta(parse_singularities(s));
            if (got == row.printed) ++rows_ok;
            else o.fail(s + " -> " + to_string(got) + ", printed " + to_string(row.printed));
        }
    o.summary = std::to_string(ok) + "/" + std::to_string(want.size()) + " case deltas, " + std::to_string(rows_ok) +
                "/" + std::to_string(rows) + " table combinations";
    return o;
}

Outcome criterion4(const std::vector<CaseRecord>& cases, const FlagCache& fc) {
    Outcome o;
    int flags = 0, ok = 0;
    std::set<std::string> covered;
    for (const auto& c : cases)
        for (const auto& f : c.flags) {
            if (f.chambers.empty()) continue;
            ++flags;
            const Decomposition& d = fc.at(&f).decomposition;
            const SurfaceConfig& cfg = c.config(f.config);
            bool good = d.chambers.size() == f.chambers.size();
            for (size_t k = 0; good && k < f.chambers.size(); ++k) {
                const Chamber& g = d.chambers[k];
                const ChamberExpectation& w = f.chambers[k];
                std::set<std::string> gs(g.support.begin(), g.support.end()), ws(w.support.begin(), w.support.end());
                good = g.lo == w.lo && g.hi == w.hi && gs == ws && g.p_sq == w.p_sq && g.dot(f.flag) == w.p_dot_flag;
                for (const auto& cv : cfg.curves) {
                    Poly want;
                    for (const auto& [n, p] : w.n_coeffs)
                        if (n == cv.name) want = p;
                    good = good && g.n_coeff(cv.name) == want;
                }
            }
            if (good) {
                ++ok;
                covered.insert(c.name);
            } else {
                o.fail(c.name + " flag " + f.flag + ": chambers differ from the printed data");
            }
        }
    for (const char* need : {"A1-nodal", "A1-cuspidal", "A2-nodal", "A4", "A7-reducible", "A7-irreducible", "A8", "D8", "E8"})
        if (!covered.count(need)) o.fail(std::string("no matching designated flag for ") + need);
    if (flags < 10) o.fail("only " + std::to_string(flags) + " designated flags");
    o.summary = std::to_string(ok) + "/" + std::to_string(flags) + " designated flags match across " +
                std::to_string(covered.size()) + " cases";
    return o;
}

Outcome criterion5(const std::vector<CaseRecord>& cases) {
    Outcome o;
    int pairs = 0, ok = 0, ambiguous = 0;
    for (const auto& c : cases) {
        std::map<std::string, std::unique_ptr<SubsetTable>> tables;
        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& f : c.flags) {
            if (!seen.insert({f.config, f.flag}).second) continue;
            ++pairs;
            const SurfaceConfig& cfg = c.config(f.config);
            auto& t = tables[f.config];
            if (!t) t = std::make_unique<SubsetTable>(cfg);
            EquivalenceReport r = random_equivalence(cfg, *t, f.flag, 100, 20240601);
            ambiguous += r.ambiguous;
            if (r.ok()) ++ok;
            else
                o.fail(c.name + " " + f.config + " " + f.flag + ": " + std::to_string(r.agreed) + "/100 agree");
        }
    }
    if (ambiguous) o.fail(std::to_string(ambiguous) + " ambiguous oracle outcomes");
    o.summary = std::to_string(ok) + "/" + std::to_string(pairs) + " (config, flag) pairs agree at 100 seeded v, " +
                std::to_string(ambiguous) + " ambiguous";
    return o;
}

Outcome criterion6(const std::vector<CaseRecord>& cases, const FlagCache& fc) {
    Outcome o;
    int configs = 0, chambers = 0, blowups = 0, quads = 0;
    for (const auto& c : cases)
        for (const auto& [key, cfg] : c.configs) {
            ++configs;
            ValidationReport v = validate(cfg);
            if (!v.ok()) o.fail(c.name + " " + key + " fails validation");
        }
    for (const auto& [entry, res] : fc) {
        const Decomposition& d = res.decomposition;
        const CaseRecord* owner = nullptr;
        for (const auto& c : cases)
            for (const auto& f : c.flags)
                if (&f == entry) owner = &c;
        const SurfaceConfig& cfg = owner->config(entry->config);
        std::string tag = owner->name + " " + entry->config + " " + entry->flag;
        for (const auto& ch : d.chambers) {
            ++chambers;
            Poly pn;
            for (const auto& [g, p] : ch.n_coeffs) pn += p * ch.dot(g);
            if (!pn.is_zero()) o.fail(tag + ": P.N is not identically 0");
            std::vector<size_t> idx;
            for (const auto& g : ch.support) idx.push_back(cfg.index(g));
            if (!idx.empty() && !is_negative_definite(principal_submatrix(cfg.gram, idx)))
                o.fail(tag + ": support not negative definite");
            if (ch.p_sq.derivative()(ch.lo) > 0 || ch.p_sq.derivative()(ch.hi) > 0 || ch.p_sq(ch.hi) < 0)
                o.fail(tag + ": P^2 not monotone");
        }
        if (d.chambers.back().p_sq(d.tau) != 0) o.fail(tag + ": P^2(tau) != 0");
        ++quads;
        if (!quadrature_check(d.p_sq(), 1e-9)) o.fail(tag + ": quadrature disagrees");
        for (const auto& p : owner->flag_points(*entry)) {
            ++quads;
            if (!quadrature_check(h_at_point(d, p), 1e-9)) o.fail(tag + " " + p.id + ": quadrature of h disagrees");
        }
    }
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    for (const auto& c : cases)
        for (const auto& [key, cfg] : c.configs) {
            if (!cfg.smooth_surface) continue;
            for (const auto& p : cfg.points) {
                ++blowups;
                BlowupResult b = blowup(cfg, p, cfg.has_curve("EP") ? "EQ" : "EP");
                if (intersect(b.config, anticanonical(b.config), anticanonical(b.config)) != cfg.norm)
                    o.fail(c.name + " blowup at " + p.id + " changes the norm");
                DivisorClass x{Vec(cfg.size())}, y{Vec(cfg.size())};
                for (size_t i = 0; i < cfg.size(); ++i) {
                    x.coeffs[i] = Rat(num(rng), den(rng));
                    y.coeffs[i] = Rat(num(rng), den(rng));
                    x.coeffs[i].canonicalize();
                    y.coeffs[i].canonicalize();
                }
                if (intersect(b.config, pullback(cfg, p, x), pullback(cfg, p, y)) != intersect(cfg, x, y))
                    o.fail(c.name + " blowup at " + p.id + " does not preserve intersections");
            }
        }
    o.summary = std::to_string(configs) + " configs validated, " + std::to_string(chambers) + " chambers, " +
                std::to_string(blowups) + " blowups, " + std::to_string(quads) + " quadratures";
    return o;
}

Outcome criterion7() {
    Outcome o;
    if (multiplier_family_1_11() != Rat(3, 2)) o.fail("family 1.11 multiplier " + to_string(multiplier_family_1_11()));
    if (multiplier_family_2_1() != Rat(15, 16)) o.fail("family 2.1 multiplier " + to_string(multiplier_family_2_1()));
    if (kstability_verdict(Rat(18, 17)) != Verdict::stable) o.fail("verdict(18/17)");
    if (kstability_verdict(1) != Verdict::semistable) o.fail("verdict(1)");
    o.summary = "multipliers " + to_string(multiplier_family_1_11()) + ", " + to_string(multiplier_family_2_1()) +
                "; verdict(18/17) = " + to_string(kstability_verdict(Rat(18, 17))) +
                ", verdict(1) = " + to_string(kstability_verdict(1));
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : default_catalog_dir();
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CaseRecord> cases;
    FlagCache fc;
    try {
        cases = load_all(dir);
        fc = compute_everything(cases);
    } catch (const std::exception& e) {
        std::cout << "catalog failed to load: " << e.what() << "\n";
        return 2;
    }
    const std::vector<std::pair<std::string, Outcome>> results = {
        {"S-invariant regression", criterion1(cases, fc)},
        {"S(W;P) regression", criterion2(cases, fc)},
        {"delta table", criterion3(cases, fc)},
        {"chamber regression", criterion4(cases, fc)},
        {"oracle equivalence", criterion5(cases)},
        {"property suite", criterion6(cases, fc)},
        {"application constants", criterion7()},
    };
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& [name, o] = results[i];
        std::cout << "[" << (o.pass ? "PASS" : "FAIL") << "] " << i + 1 << " " << name << ": " << o.summary << "\n";
        for (const auto& f : o.failures) std::cout << "       " << f << "\n";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "elapsed " << static_cast<int>(secs * 10) / 10.0 << " s\n";
    return 0;
}

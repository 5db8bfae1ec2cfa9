#include "support.hpp"

#include <doctest.h>

#include <filesystem>

using namespace dpd;
namespace fs = std::filesystem;

namespace {

const ReportRow* find_row(const CaseReport& r, const std::string& what) {
    for (const auto& row : r.rows)
        if (row.what == what) return &row;
    return nullptr;
}

}  // namespace

TEST_CASE("case names and order") {
    auto cases = list_cases(test::kCatalog);
    REQUIRE(cases.size() == 19);
    std::vector<std::string> names;
    for (const auto& [n, d] : cases) names.push_back(n);
    CHECK(std::is_sorted(names.begin(), names.end()));
    for (const char* n : {"A1-nodal", "A1-cuspidal", "A2-nodal", "A2-cuspidal", "A3", "A4", "A5", "A6", "A7-reducible",
                          "A7-irreducible", "A8", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK(load_case("a1_nodal", test::kCatalog).name == "A1-nodal");
    CHECK_THROWS_AS(load_case("B9", test::kCatalog), CaseRecordError);
}

TEST_CASE("verify A1-nodal") {
    CaseReport r = verify_case("A1-nodal", test::kCatalog);
    CHECK(r.pass());
    REQUIRE(find_row(r, "S(E)") != nullptr);
    CHECK(find_row(r, "S(E)")->computed == "1/2");
    CHECK(find_row(r, "delta")->computed == "2");
    CHECK(report_text(r, false).find("S(E)=1/2 OK") != std::string::npos);
    CHECK(report_text(r, false).find("delta=2 OK") != std::string::npos);
}

TEST_CASE("verify A6") {
    CaseReport r = verify_case("A6", test::kCatalog);
    CHECK(r.pass());
    CHECK(find_row(r, "S(E3)")->computed == "8/9");
    CHECK(find_row(r, "S(E2 (a))")->computed == "29/36");
    CHECK(find_row(r, "S(E1)")->computed == "13/21");
    CHECK(*r.delta == Rat(9, 8));
}

TEST_CASE("tampered delta fails with a diff row") {
    CaseRecord rec = test::case_named("A1-nodal");
    rec.delta = 3;
    CaseReport r = verify_case(rec);
    CHECK_FALSE(r.pass());
    const ReportRow* d = find_row(r, "delta");
    REQUIRE(d != nullptr);
    CHECK(d->status == RowStatus::fail);
    CHECK(d->expected == "3");
    CHECK(d->computed == "2");
}

TEST_CASE("every expected value is load-bearing") {
    for (const auto& rec : test::all_cases()) {
        for (size_t f = 0; f < rec.flags.size(); ++f) {
            CaseRecord m = rec;
            m.flags[f].s.exact += Rat(1, 1000);
            CHECK_MESSAGE(!verify_case(m).pass(), rec.name << " S of flag " << f);
            for (size_t k = 0; k < rec.flags[f].sw.size(); ++k) {
                CaseRecord w = rec;
                w.flags[f].sw[k].exact += Rat(1, 1000);
                CHECK_MESSAGE(!verify_case(w).pass(), rec.name << " " << rec.flags[f].sw[k].point);
                auto& pr = w.flags[f].sw[k].printed;
                if (pr && !pr->erratum) {
                    CaseRecord q = rec;
                    auto& qp = *q.flags[f].sw[k].printed;
                    qp.value = q.flags[f].sw[k].exact - Rat(1, 1000);
                    CHECK_MESSAGE(!verify_case(q).pass(), rec.name << " printed " << rec.flags[f].sw[k].point);
                }
            }
            if (!rec.flags[f].chambers.empty()) {
                CaseRecord c = rec;
                c.flags[f].chambers.back().p_sq = c.flags[f].chambers.back().p_sq + Poly::constant(1);
                CHECK(!verify_case(c).pass());
            }
        }
    }
}

TEST_CASE("verify_all over the catalog") {
    CatalogSummary s = verify_all(test::kCatalog);
    CHECK(s.cases.size() == 19);
    CHECK(s.passed() == 19);
    CHECK_FALSE(s.any_load_failure());
    for (const auto& r : s.cases) CHECK_MESSAGE(r.pass(), report_text(r, false));
}

TEST_CASE("missing config file is a load failure") {
    fs::path tmp = fs::temp_directory_path() / "dpdelta_catalog_copy";
    fs::remove_all(tmp);
    fs::copy(test::kCatalog, tmp, fs::copy_options::recursive);
    fs::remove(tmp / "a3" / "config.json");
    CatalogSummary s = verify_all(tmp.string());
    CHECK(s.any_load_failure());
    CHECK(s.failed() == 1);
    for (const auto& r : s.cases)
        if (r.name == "A3") CHECK(r.load_failed);
    fs::remove_all(tmp);
}

TEST_CASE("sub-case variants share S and delta") {
    const CaseRecord& a4 = test::case_named("A4");
    int variants = 0;
    for (const auto& r : compute_flags(a4))
        if (r.entry->group == "E2") {
            ++variants;
            CHECK(r.report.s == Rat(11, 15));
        }
    CHECK(variants == 7);
    for (const auto& rec : test::all_cases()) {
        std::map<std::string, std::pair<Rat, Rat>> seen;
        for (const auto& r : compute_flags(rec)) {
            if (r.entry->group.empty()) continue;
            auto [it, fresh] = seen.emplace(r.entry->group, std::make_pair(r.report.s, r.report.upper));
            if (!fresh) {
                CHECK(it->second.first == r.report.s);
                CHECK(it->second.second == r.report.upper);
            }
        }
    }
}

TEST_CASE("catalog deltas") {
    const std::pair<const char*, Rat> want[] = {
        {"A1-nodal", 2},          {"A1-cuspidal", Rat(9, 5)}, {"A2-nodal", Rat(12, 7)}, {"A2-cuspidal", Rat(3, 2)},
        {"A3", Rat(3, 2)},        {"A4", Rat(4, 3)},          {"A5", Rat(6, 5)},        {"A6", Rat(9, 8)},
        {"A7-irreducible", Rat(18, 17)}, {"A7-reducible", 1}, {"A8", 1},                {"D4", 1},
        {"D5", Rat(6, 7)},        {"D6", Rat(3, 4)},          {"D7", Rat(2, 3)},        {"D8", Rat(3, 5)},
        {"E6", Rat(3, 5)},        {"E7", Rat(3, 7)},          {"E8", Rat(3, 11)}};
    for (const auto& [n, d] : want) {
        CHECK(test::case_named(n).delta == d);
        CHECK(case_delta(test::case_named(n)) == d);
    }
}

TEST_CASE("expected file errors") {
    json j = json::parse(R"({"name":"X","delta":"1","configs":{"base":"config.json"},"flags":[]})");
    CHECK_THROWS_AS(case_from_json(j, "/nonexistent"), SchemaError);
    j = json::parse(R"({"name":"X","configs":{}})");
    CHECK_THROWS_AS(case_from_json(j, "/nonexistent"), SchemaError);
}

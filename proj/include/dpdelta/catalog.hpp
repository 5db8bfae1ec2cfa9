#pragma once

#include "dpdelta/delta.hpp"

#include <map>
#include <optional>

namespace dpd {

struct PrintedValue {
    std::string rel;  // "<=" or "="
    Rat value;
    bool erratum = false;
};

struct SwExpectation {
    std::string point;
    Rat exact;
    std::optional<PrintedValue> printed;
    std::optional<PrintedValue> printed_exact;
};

struct SExpectation {
    Rat exact;
    std::optional<Rat> printed;
    bool erratum = false;
    std::string note;
};

struct ChamberExpectation {
    Rat lo, hi;
    std::vector<std::string> support;
    Named<Poly> n_coeffs;
    Poly p_sq;
    Poly p_dot_flag;
};

struct FlagEntry {
    std::string config;
    std::string flag;
    std::vector<std::string> points;
    SExpectation s;
    std::vector<SwExpectation> sw;
    std::string group, variant;
    std::vector<ChamberExpectation> chambers;
};

struct DerivedEntry {
    std::string id, from, point, e_p_name;
    std::vector<PointSpec> points;
};

struct CaseRecord {
    std::string name;
    std::string dir;
    Rat delta;
    std::vector<std::pair<std::string, std::string>> config_files;  // key -> file
    std::vector<DerivedEntry> derived;
    std::vector<FlagEntry> flags;
    std::vector<std::string> notes;
    std::map<std::string, SurfaceConfig> configs;  // loaded and derived

    const SurfaceConfig& config(const std::string& key) const;
    std::vector<PointSpec> flag_points(const FlagEntry& f) const;
};

struct CaseRecordError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// DPDELTA_CATALOG if set, else the compiled-in catalog path.
std::string default_catalog_dir();

// Case directories of a catalog, sorted by case name.
std::vector<std::pair<std::string, std::string>> list_cases(const std::string& catalog_dir);

CaseRecord load_case_dir(const std::string& dir);
CaseRecord load_case(const std::string& name, const std::string& catalog_dir);
CaseRecord case_from_json(const json& j, const std::string& dir);

struct FlagResult {
    const FlagEntry* entry = nullptr;
    Decomposition decomposition;
    FlagReport report;
};

std::vector<FlagResult> compute_flags(const CaseRecord& c);
Rat case_delta(const CaseRecord& c);

enum class RowStatus { pass, fail, noted };

struct ReportRow {
    std::string what;
    std::string expected;
    std::string computed;
    RowStatus status = RowStatus::pass;
    std::string note;
};

struct CaseReport {
    std::string name;
    std::vector<ReportRow> rows;
    std::optional<Rat> delta;
    bool load_failed = false;
    bool pass() const;
    size_t count(RowStatus s) const;
};

CaseReport verify_case(const CaseRecord& c);
CaseReport verify_case(const std::string& name, const std::string& catalog_dir);

struct CatalogSummary {
    std::vector<CaseReport> cases;
    size_t passed() const;
    size_t failed() const;
    bool any_load_failure() const;
};

CatalogSummary verify_all(const std::string& catalog_dir);

std::string status_str(RowStatus s);
std::string report_text(const CaseReport& r, bool verbose);
json report_json(const CaseReport& r);

}  // namespace dpd

#pragma once

#include "dpdelta/linalg.hpp"
#include "dpdelta/rational.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dpd {

using json = nlohmann::ordered_json;

enum class CurveKind { minus_one, minus_two, anticanonical_transform, orbifold, other };

std::string to_string(CurveKind k);
CurveKind parse_curve_kind(const std::string& s);

struct CurveRecord {
    std::string name;
    Rat self_int;
    CurveKind kind = CurveKind::other;
    bool operator==(const CurveRecord&) const = default;
};

struct PointSpec {
    std::string id;
    std::string on_curve;  // empty: a point off every catalog curve (blowup input only)
    std::vector<std::pair<std::string, int>> incidences;
    Rat different;
    int incidence(const std::string& curve) const;
    bool operator==(const PointSpec&) const = default;
};

struct SurfaceConfig {
    std::string name;
    Rat norm = 1;
    bool smooth_surface = true;
    std::vector<CurveRecord> curves;
    Matrix gram;
    Vec anti_k;
    std::vector<std::pair<std::string, Rat>> discrepancy;
    std::vector<PointSpec> points;

    size_t size() const { return curves.size(); }
    bool has_curve(const std::string& n) const;
    size_t index(const std::string& n) const;  // throws std::out_of_range
    const PointSpec& point(const std::string& id) const;
    Rat discrepancy_of(const std::string& curve) const;  // 1 when not listed
    bool operator==(const SurfaceConfig&) const = default;
};

struct DivisorClass {
    Vec coeffs;
};

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat intersect(const SurfaceConfig& c, const DivisorClass& d1, const DivisorClass& d2);
DivisorClass unit_class(const SurfaceConfig& c, const std::string& curve);
DivisorClass anticanonical(const SurfaceConfig& c);

struct ValidationCheck {
    std::string rule;
    bool ok = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool ok() const;
    bool failed(const std::string& rule) const;
    std::string summary() const;
};

ValidationReport validate(const SurfaceConfig& c);

json config_to_json(const SurfaceConfig& c);
SurfaceConfig config_from_json(const json& j, const std::string& source = "<json>");
json point_to_json(const PointSpec& p);
PointSpec point_from_json(const json& j, const std::string& where);

SurfaceConfig load_config(const std::string& path);
void save_config(const SurfaceConfig& c, const std::string& path);
std::string canonical_text(const SurfaceConfig& c);

}  // namespace dpd

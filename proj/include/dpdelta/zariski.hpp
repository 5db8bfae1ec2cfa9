#pragma once

#include "dpdelta/config.hpp"
#include "dpdelta/poly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dpd {

struct NotPseudoEffective : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
using Named = std::vector<std::pair<std::string, T>>;

struct Chamber {
    Rat lo, hi;
    std::vector<std::string> support;  // config order
    Named<Poly> n_coeffs;              // keys = support
    Poly p_sq;
    Named<Poly> p_dot;       // every curve, config order
    Named<Poly> n_dot_flag;  // (N.F)_P for each config point on the flag

    const Poly& n_coeff(const std::string& curve) const;  // zero poly if absent
    const Poly& dot(const std::string& curve) const;
    bool operator==(const Chamber&) const = default;
};

struct Decomposition {
    std::string flag;
    Rat tau;
    std::vector<Chamber> chambers;

    const Chamber& chamber_at(const Rat& v) const;  // left chamber at interior breakpoints
    PiecewisePoly p_sq() const;
    PiecewisePoly p_dot_flag() const;
    bool operator==(const Decomposition&) const = default;
};

struct NegativePart {
    std::vector<std::string> support;  // curves with coefficient > 0, config order
    Vec coeffs;                        // full length, config order
    bool operator==(const NegativePart&) const = default;
};

// D(v) = anti_k - v F, with the F-coefficient of anti_k optionally replaced.
DivisorClass sweep_divisor(const SurfaceConfig& c, const std::string& flag, const Rat& v,
                           const std::optional<Rat>& pullback_coeff = std::nullopt);

NegativePart negative_part_at(const SurfaceConfig& c, const DivisorClass& d);

Decomposition parametric_decompose(const SurfaceConfig& c, const std::string& flag,
                                   const std::optional<Rat>& pullback_coeff = std::nullopt);

// Chamber evaluation of N(v) in the same shape as negative_part_at.
NegativePart evaluate_negative_part(const SurfaceConfig& c, const Decomposition& d, const Rat& v);

PiecewisePoly n_restricted_at_point(const Decomposition& d, const PointSpec& point);

json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);
json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j);
std::string decomposition_text(const Decomposition& d);

}  // namespace dpd

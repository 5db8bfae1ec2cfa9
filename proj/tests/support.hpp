#pragma once

#include "dpdelta/catalog.hpp"

#include <random>
#include <set>

namespace dpd::test {

inline const std::string kCatalog = DPDELTA_CATALOG_DIR;

// Every catalog case, loaded once.
inline const std::vector<CaseRecord>& all_cases() {
    static const std::vector<CaseRecord> cases = [] {
        std::vector<CaseRecord> v;
        for (const auto& [name, dir] : list_cases(kCatalog)) v.push_back(load_case_dir(dir));
        return v;
    }();
    return cases;
}

inline const CaseRecord& case_named(const std::string& n) {
    for (const auto& c : all_cases())
        if (c.name == n) return c;
    throw std::out_of_range(n);
}

struct ConfigFlag {
    const CaseRecord* rec;
    std::string key;
    std::string flag;
};

// Distinct (config, flag) pairs across the catalog.
inline std::vector<ConfigFlag> all_config_flags() {
    std::vector<ConfigFlag> out;
    for (const auto& c : all_cases()) {
        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& f : c.flags)
            if (seen.insert({f.config, f.flag}).second) out.push_back({&c, f.config, f.flag});
    }
    return out;
}

inline Rat random_rat(std::mt19937_64& rng, long num_range = 50, long den_max = 30) {
    std::uniform_int_distribution<long> num(-num_range, num_range), den(1, den_max);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline SurfaceConfig with_curve_order(const SurfaceConfig& c, const std::vector<size_t>& perm) {
    SurfaceConfig o = c;
    const size_t n = c.size();
    for (size_t i = 0; i < n; ++i) {
        o.curves[i] = c.curves[perm[i]];
        o.anti_k[i] = c.anti_k[perm[i]];
        for (size_t j = 0; j < n; ++j) o.gram[i][j] = c.gram[perm[i]][perm[j]];
    }
    return o;
}

}  // namespace dpd::test

#pragma once

#include "dpdelta/zariski.hpp"

#include <cstdint>
#include <memory>

namespace dpd {

struct NoSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Ambiguous : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleSolution {
    std::vector<size_t> subset;
    Vec coeffs;  // full length
};

// Every subset of curves with negative definite Gram matrix, with its inverse.
class SubsetTable {
public:
    explicit SubsetTable(const SurfaceConfig& c);
    size_t size() const { return subsets_.size(); }
    const std::vector<std::vector<size_t>>& subsets() const { return subsets_; }
    const Matrix& inverse(size_t k) const { return inverses_[k]; }

private:
    std::vector<std::vector<size_t>> subsets_;
    std::vector<Matrix> inverses_;
};

// All accepted subsets; throws NoSolution if none, Ambiguous if their N differ.
std::vector<OracleSolution> brute_force_solutions(const SurfaceConfig& c, const SubsetTable& t,
                                                  const DivisorClass& d);
NegativePart brute_force_negative_part(const SurfaceConfig& c, const SubsetTable& t, const DivisorClass& d);
NegativePart brute_force_negative_part(const SurfaceConfig& c, const DivisorClass& d);

// Composite Simpson, 10^4 panels per piece, against the exact integral.
bool quadrature_check(const PiecewisePoly& pp, double tol);
double simpson(const PiecewisePoly& pp, int panels_per_piece = 10000);

struct OracleOutcome {
    Rat v;
    std::vector<OracleSolution> solutions;
    bool agrees_with_engine = false;
    std::string detail;
};

struct EquivalenceReport {
    std::string flag;
    int trials = 0;
    std::uint64_t seed = 0;
    Rat tau;
    int agreed = 0;
    int ambiguous = 0;
    std::vector<OracleOutcome> mismatches;
    bool ok() const { return agreed == trials && ambiguous == 0; }
};

// Rationals in (0, hi) with denominators <= 10^4, deterministic in seed.
std::vector<Rat> random_rationals(const Rat& hi, int count, std::uint64_t seed);

EquivalenceReport random_equivalence(const SurfaceConfig& c, const std::string& flag, int trials,
                                     std::uint64_t seed);
EquivalenceReport random_equivalence(const SurfaceConfig& c, const SubsetTable& t, const std::string& flag,
                                     int trials, std::uint64_t seed);

json equivalence_to_json(const SurfaceConfig& c, const EquivalenceReport& r);

}  // namespace dpd

#pragma once

#include "dpdelta/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpd {

struct MissingFlag : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class SingType { A, D, E };

struct SingularityEntry {
    SingType type = SingType::A;
    int index = 1;
    std::optional<bool> cuspidal;     // A1, A2
    std::optional<bool> reducible_r;  // A7
    std::string str() const;
};

using SingularityInput = std::vector<SingularityEntry>;

Rat base_delta(const SingularityEntry& e);
Rat main_theorem_delta(const SingularityInput& in);

// "A2+4A1", "A7:red+A1", "A1:cusp+D4"
SingularityInput parse_singularities(const std::string& s);

// Lower bound for delta at smooth points.
Rat smooth_point_delta();

Rat multiplier_family_1_11();
Rat multiplier_family_2_1();

enum class Verdict { stable, semistable, unknown };
std::string to_string(Verdict v);
// delta > stable_above: stable; delta >= semistable_from: semistable.
Verdict kstability_verdict(const Rat& delta, const Rat& stable_above = 1, const Rat& semistable_from = 1);

struct TableRow {
    std::vector<std::string> singularities;  // as printed, parse syntax
    Rat printed;
};

// Rows of the published classification table, each a list of combinations and the printed delta.
const std::vector<TableRow>& main_theorem_table();

}  // namespace dpd

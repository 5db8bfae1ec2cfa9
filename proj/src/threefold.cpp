#include "dpdelta/threefold.hpp"

#include "dpdelta/poly.hpp"

#include <algorithm>
#include <cctype>

namespace dpd {

std::string SingularityEntry::str() const {
    std::string s(1, type == SingType::A ? 'A' : type == SingType::D ? 'D' : 'E');
    s += std::to_string(index);
    if (cuspidal) s += *cuspidal ? ":cusp" : ":nodal";
    if (reducible_r) s += *reducible_r ? ":red" : ":irred";
    return s;
}

Rat base_delta(const SingularityEntry& e) {
    const int i = e.index;
    switch (e.type) {
        case SingType::A:
            if (i == 1 || i == 2) {
                if (!e.cuspidal) throw MissingFlag(e.str() + " needs :cusp or :nodal");
                if (i == 1) return *e.cuspidal ? Rat(9, 5) : Rat(2);
                return *e.cuspidal ? Rat(3, 2) : Rat(12, 7);
            }
            if (i == 7) {
                if (!e.reducible_r) throw MissingFlag("A7 needs :red or :irred");
                return *e.reducible_r ? Rat(1) : Rat(18, 17);
            }
            switch (i) {
                case 3: return Rat(3, 2);
                case 4: return Rat(4, 3);
                case 5: return Rat(6, 5);
                case 6: return Rat(9, 8);
                case 8: return Rat(1);
            }
            break;
        case SingType::D:
            switch (i) {
                case 4: return Rat(1);
                case 5: return Rat(6, 7);
                case 6: return Rat(3, 4);
                case 7: return Rat(2, 3);
                case 8: return Rat(3, 5);
            }
            break;
        case SingType::E:
            switch (i) {
                case 6: return Rat(3, 5);
                case 7: return Rat(3, 7);
                case 8: return Rat(3, 11);
            }
            break;
    }
    throw std::invalid_argument("no Du Val type " + e.str() + " in degree 1");
}

namespace {

// Both values an entry can take when its nodal/cuspidal or R flag is left out.
std::vector<Rat> possible_values(const SingularityEntry& e) {
    if (e.type == SingType::A && (e.index == 1 || e.index == 2) && !e.cuspidal) {
        SingularityEntry a = e, b = e;
        a.cuspidal = true;
        b.cuspidal = false;
        return {base_delta(a), base_delta(b)};
    }
    if (e.type == SingType::A && e.index == 7 && !e.reducible_r) {
        SingularityEntry a = e, b = e;
        a.reducible_r = true;
        b.reducible_r = false;
        return {base_delta(a), base_delta(b)};
    }
    return {base_delta(e)};
}

}  // namespace

Rat main_theorem_delta(const SingularityInput& in) {
    if (in.empty()) throw std::invalid_argument("main_theorem_delta: no singular points");
    // An entry may omit its nodal/cuspidal or R flag when neither choice changes the minimum.
    std::optional<Rat> lo, hi;
    const SingularityEntry* unresolved = nullptr;
    for (const auto& e : in) {
        auto vals = possible_values(e);
        Rat mn = std::min(vals.front(), vals.back()), mx = std::max(vals.front(), vals.back());
        if (vals.size() > 1 && !unresolved) unresolved = &e;
        if (!lo || mn < *lo) lo = mn;
        if (!hi || mx < *hi) hi = mx;
    }
    if (*lo != *hi) base_delta(*unresolved);
    return *lo;
}

SingularityInput parse_singularities(const std::string& text) {
    SingularityInput out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('+', start);
        std::string tok = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        std::string t;
        for (char ch : tok)
            if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
        if (t.empty()) throw std::invalid_argument("empty singularity in '" + text + "'");
        size_t p = 0;
        int mult = 0;
        while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p]))) mult = mult * 10 + (t[p++] - '0');
        if (p == 0) mult = 1;
        if (mult < 1) throw std::invalid_argument("bad multiplicity in '" + t + "'");
        if (p >= t.size()) throw std::invalid_argument("missing type in '" + t + "'");
        SingularityEntry e;
        char ty = static_cast<char>(std::toupper(static_cast<unsigned char>(t[p++])));
        if (ty == 'A') e.type = SingType::A;
        else if (ty == 'D') e.type = SingType::D;
        else if (ty == 'E') e.type = SingType::E;
        else throw std::invalid_argument("unknown type in '" + t + "'");
        size_t q = p;
        while (q < t.size() && std::isdigit(static_cast<unsigned char>(t[q]))) ++q;
        if (q == p) throw std::invalid_argument("missing index in '" + t + "'");
        e.index = std::stoi(t.substr(p, q - p));
        std::string rest = t.substr(q);
        while (!rest.empty()) {
            if (rest[0] != ':') throw std::invalid_argument("unexpected '" + rest + "' in '" + t + "'");
            size_t nx = rest.find(':', 1);
            std::string suf = rest.substr(1, nx == std::string::npos ? std::string::npos : nx - 1);
            rest = nx == std::string::npos ? "" : rest.substr(nx);
            bool a12 = e.type == SingType::A && (e.index == 1 || e.index == 2);
            bool a7 = e.type == SingType::A && e.index == 7;
            if ((suf == "cusp" || suf == "nodal") && a12) e.cuspidal = suf == "cusp";
            else if ((suf == "red" || suf == "irred") && a7) e.reducible_r = suf == "red";
            else throw std::invalid_argument("suffix ':" + suf + "' does not apply to " + t);
        }
        base_delta([&] {
            SingularityEntry probe = e;  // reject types that do not occur
            if (!probe.cuspidal) probe.cuspidal = false;
            if (!probe.reducible_r) probe.reducible_r = false;
            return probe;
        }());
        for (int k = 0; k < mult; ++k) out.push_back(e);
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

Rat smooth_point_delta() { return Rat(15, 7); }

namespace {

Poly two_minus_u_cubed() {
    Poly l = Poly::affine(2, -1);
    return l * l * l;
}

}  // namespace

Rat multiplier_family_1_11() { return Rat(3, 8) * two_minus_u_cubed().integrate(0, 2); }

Rat multiplier_family_2_1() { return Rat(3, 4) * (1 + two_minus_u_cubed().integrate(1, 2)); }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::stable: return "stable";
        case Verdict::semistable: return "semistable";
        case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

Verdict kstability_verdict(const Rat& delta, const Rat& stable_above, const Rat& semistable_from) {
    if (delta <= 0) throw std::invalid_argument("kstability_verdict: delta must be positive");
    if (delta > stable_above) return Verdict::stable;
    if (delta >= semistable_from) return Verdict::semistable;
    return Verdict::unknown;
}

namespace {

std::vector<std::string> a1_rows(bool cusp) {
    std::vector<std::string> r;
    for (int k = 1; k <= 8; ++k) {
        if (!cusp) r.push_back((k > 1 ? std::to_string(k) : "") + "A1:nodal");
        else if (k == 1) r.push_back("A1:cusp");
        else r.push_back("A1:cusp+" + (k > 2 ? std::to_string(k - 1) : "") + "A1:nodal");
    }
    return r;
}

std::vector<std::string> a2_rows(bool cusp) {
    // (number of A2, number of A1) as printed
    const std::pair<int, int> combos[] = {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 0},
                                          {2, 1}, {2, 2}, {3, 0}, {3, 1}, {4, 0}};
    std::vector<std::string> r;
    for (auto [a2, a1] : combos) {
        std::string s;
        if (!cusp) s = (a2 > 1 ? std::to_string(a2) : "") + "A2:nodal";
        else s = "A2:cusp" + (a2 > 1 ? "+" + (a2 > 2 ? std::to_string(a2 - 1) : "") + "A2:nodal" : "");
        if (a1) s += "+" + (a1 > 1 ? std::to_string(a1) : "") + "A1";
        r.push_back(s);
    }
    return r;
}

}  // namespace

const std::vector<TableRow>& main_theorem_table() {
    static const std::vector<TableRow> rows = {
        {a1_rows(false), Rat(2)},
        {a1_rows(true), Rat(9, 5)},
        {a2_rows(false), Rat(12, 7)},
        {a2_rows(true), Rat(3, 2)},
        {{"A4", "A4+A1", "A4+2A1", "A4+A2", "A4+A2+A1", "A4+A3", "2A4"}, Rat(4, 3)},
        {{"A5", "A5+A1", "A5+2A1", "A5+A2", "A5+A2+A1", "A5+A3"}, Rat(6, 5)},
        {{"A6", "A6+A1"}, Rat(9, 8)},
        {{"A7:irred", "A7:irred+A1"}, Rat(18, 17)},
        {{"A7:red", "A7:red+A1"}, Rat(1)},
        {{"A8", "D4", "D4+A1", "D4+2A1", "D4+3A1", "D4+4A1", "D4+A2", "D4+A3", "2D4"}, Rat(1)},
        {{"D5", "D5+A1", "D5+2A1", "D5+A2", "D5+A3"}, Rat(6, 7)},
        {{"D6", "D6+A1", "D6+2A1"}, Rat(3, 4)},
        {{"D7"}, Rat(2, 3)},
        {{"D8", "E6", "E6+A1", "E6+A2"}, Rat(3, 5)},
        {{"E7", "E7+A1"}, Rat(3, 7)},
        {{"E8"}, Rat(3, 11)},
    };
    return rows;
}

}  // namespace dpd

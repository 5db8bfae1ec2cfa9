#include "dpdelta/oracle.hpp"

#include <cmath>
#include <random>

namespace dpd {

SubsetTable::SubsetTable(const SurfaceConfig& c) {
    const size_t n = c.size();
    subsets_.push_back({});
    inverses_.push_back({});
    // Negative definiteness passes to principal submatrices, so a failing subset prunes its supersets.
    std::vector<std::vector<size_t>> frontier{{}};
    while (!frontier.empty()) {
        std::vector<std::vector<size_t>> next;
        for (const auto& s : frontier) {
            for (size_t i = s.empty() ? 0 : s.back() + 1; i < n; ++i) {
                std::vector<size_t> t = s;
                t.push_back(i);
                Matrix g = principal_submatrix(c.gram, t);
                if (!is_negative_definite(g)) continue;
                subsets_.push_back(t);
                inverses_.push_back(dpd::inverse(g));
                next.push_back(t);
            }
        }
        frontier = std::move(next);
    }
}

std::vector<OracleSolution> brute_force_solutions(const SurfaceConfig& c, const SubsetTable& t,
                                                  const DivisorClass& d) {
    const size_t n = c.size();
    if (d.coeffs.size() != n) throw DimensionMismatch("divisor length does not match config");
    const Vec dd = mat_vec(c.gram, d.coeffs);
    std::vector<OracleSolution> out;
    Vec x;
    for (size_t k = 0; k < t.size(); ++k) {
        const auto& s = t.subsets()[k];
        const Matrix& inv = t.inverse(k);
        x.assign(s.size(), Rat(0));
        bool nonneg = true;
        for (size_t a = 0; a < s.size() && nonneg; ++a) {
            for (size_t b = 0; b < s.size(); ++b) x[a] += inv[a][b] * dd[s[b]];
            nonneg = x[a] >= 0;
        }
        if (!nonneg) continue;
        bool nef = true;
        for (size_t i = 0; i < n && nef; ++i) {
            Rat r = dd[i];
            for (size_t a = 0; a < s.size(); ++a) r -= x[a] * c.gram[i][s[a]];
            nef = r >= 0;
        }
        if (!nef) continue;
        OracleSolution sol{s, Vec(n)};
        for (size_t a = 0; a < s.size(); ++a) sol.coeffs[s[a]] = x[a];
        out.push_back(std::move(sol));
    }
    if (out.empty()) throw NoSolution("no negative definite subset gives a nef residual");
    for (const auto& sol : out)
        if (sol.coeffs != out.front().coeffs) throw Ambiguous("two subsets give different negative parts");
    return out;
}

NegativePart brute_force_negative_part(const SurfaceConfig& c, const SubsetTable& t, const DivisorClass& d) {
    auto sols = brute_force_solutions(c, t, d);
    NegativePart r{{}, sols.front().coeffs};
    for (size_t i = 0; i < c.size(); ++i)
        if (r.coeffs[i] > 0) r.support.push_back(c.curves[i].name);
    return r;
}

NegativePart brute_force_negative_part(const SurfaceConfig& c, const DivisorClass& d) {
    return brute_force_negative_part(c, SubsetTable(c), d);
}

double simpson(const PiecewisePoly& pp, int panels) {
    double total = 0;
    for (size_t k = 0; k < pp.pieces().size(); ++k) {
        std::vector<double> cf;
        for (const auto& x : pp.pieces()[k].coeffs()) cf.push_back(x.get_d());
        auto f = [&](double v) {
            double y = 0;
            for (size_t i = cf.size(); i-- > 0;) y = y * v + cf[i];
            return y;
        };
        double a = pp.breakpoints()[k].get_d(), b = pp.breakpoints()[k + 1].get_d();
        double h = (b - a) / panels, s = 0;
        for (int i = 0; i < panels; ++i) {
            double x0 = a + i * h;
            s += f(x0) + 4 * f(x0 + h / 2) + f(x0 + h);
        }
        total += s * h / 6;
    }
    return total;
}

bool quadrature_check(const PiecewisePoly& pp, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("quadrature_check: tol must be positive");
    double exact = integrate(pp, pp.lo(), pp.hi()).get_d();
    return std::fabs(simpson(pp) - exact) <= tol;
}

std::vector<Rat> random_rationals(const Rat& hi, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> den(1, 10000);
    std::vector<Rat> out;
    while (static_cast<int>(out.size()) < count) {
        long q = den(rng);
        // numerators p with 0 < p/q < hi
        mpz_class top = hi.get_num() * q;
        mpz_class pmax = (top - 1) / hi.get_den();
        if (pmax < 1) continue;
        std::uniform_int_distribution<long> num(1, pmax.get_si());
        Rat v(num(rng), q);
        v.canonicalize();
        out.push_back(v);
    }
    return out;
}

EquivalenceReport random_equivalence(const SurfaceConfig& c, const SubsetTable& t, const std::string& flag,
                                     int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("random_equivalence: trials must be at least 1");
    EquivalenceReport r;
    r.flag = flag;
    r.trials = trials;
    r.seed = seed;
    Decomposition d = parametric_decompose(c, flag);
    r.tau = d.tau;
    for (const Rat& v : random_rationals(d.tau, trials, seed)) {
        OracleOutcome o;
        o.v = v;
        NegativePart engine = evaluate_negative_part(c, d, v);
        try {
            o.solutions = brute_force_solutions(c, t, sweep_divisor(c, flag, v));
            o.agrees_with_engine = o.solutions.front().coeffs == engine.coeffs;
            if (!o.agrees_with_engine) o.detail = "negative parts differ";
        } catch (const Ambiguous& e) {
            ++r.ambiguous;
            o.detail = e.what();
        } catch (const NoSolution& e) {
            o.detail = e.what();
        }
        if (o.agrees_with_engine) ++r.agreed;
        else r.mismatches.push_back(o);
    }
    return r;
}

EquivalenceReport random_equivalence(const SurfaceConfig& c, const std::string& flag, int trials,
                                     std::uint64_t seed) {
    return random_equivalence(c, SubsetTable(c), flag, trials, seed);
}

json equivalence_to_json(const SurfaceConfig& c, const EquivalenceReport& r) {
    json mm = json::array();
    for (const auto& o : r.mismatches) {
        json sols = json::array();
        for (const auto& s : o.solutions) {
            json co = json::object();
            for (size_t i = 0; i < c.size(); ++i)
                if (s.coeffs[i] != 0) co[c.curves[i].name] = to_string(s.coeffs[i]);
            json sub = json::array();
            for (size_t i : s.subset) sub.push_back(c.curves[i].name);
            sols.push_back(json{{"subset", sub}, {"coeffs", co}});
        }
        mm.push_back(json{{"v", to_string(o.v)}, {"solutions", sols}, {"detail", o.detail}});
    }
    return json{{"config", c.name}, {"flag", r.flag},     {"tau", to_string(r.tau)}, {"seed", r.seed},
                {"trials", r.trials}, {"agreed", r.agreed}, {"ambiguous", r.ambiguous}, {"mismatches", mm}};
}

}  // namespace dpd

#include "dpdelta/zariski.hpp"

#include <algorithm>
#include <sstream>

namespace dpd {

namespace {

const Poly kZero;

template <class T>
const T* find_named(const Named<T>& m, const std::string& k) {
    for (const auto& [n, x] : m)
        if (n == k) return &x;
    return nullptr;
}

// Sign of p just to the right of lo.
int sign_after(const Poly& p, const Rat& lo) {
    Rat x = p(lo);
    if (x != 0) return sgn(x);
    return sgn(p.derivative()(lo));
}

bool contains(const std::vector<size_t>& s, size_t i) { return std::find(s.begin(), s.end(), i) != s.end(); }

}  // namespace

const Poly& Chamber::n_coeff(const std::string& curve) const {
    const Poly* p = find_named(n_coeffs, curve);
    return p ? *p : kZero;
}

const Poly& Chamber::dot(const std::string& curve) const {
    const Poly* p = find_named(p_dot, curve);
    if (!p) throw std::out_of_range("no curve " + curve + " in chamber");
    return *p;
}

const Chamber& Decomposition::chamber_at(const Rat& v) const {
    if (chambers.empty() || v < chambers.front().lo || v > tau)
        throw OutOfDomain("v = " + to_string(v) + " outside [0, " + to_string(tau) + "]");
    for (const auto& ch : chambers)
        if (v <= ch.hi) return ch;
    return chambers.back();
}

PiecewisePoly Decomposition::p_sq() const {
    std::vector<Rat> b{chambers.front().lo};
    std::vector<Poly> p;
    for (const auto& ch : chambers) {
        b.push_back(ch.hi);
        p.push_back(ch.p_sq);
    }
    return PiecewisePoly(b, p, true);
}

PiecewisePoly Decomposition::p_dot_flag() const {
    std::vector<Rat> b{chambers.front().lo};
    std::vector<Poly> p;
    for (const auto& ch : chambers) {
        b.push_back(ch.hi);
        p.push_back(ch.dot(flag));
    }
    return PiecewisePoly(b, p, true);
}

DivisorClass sweep_divisor(const SurfaceConfig& c, const std::string& flag, const Rat& v,
                           const std::optional<Rat>& pullback_coeff) {
    DivisorClass d{c.anti_k};
    size_t f = c.index(flag);
    if (pullback_coeff) d.coeffs[f] = *pullback_coeff;
    d.coeffs[f] -= v;
    return d;
}

NegativePart negative_part_at(const SurfaceConfig& c, const DivisorClass& d) {
    const size_t n = c.size();
    if (d.coeffs.size() != n) throw DimensionMismatch("divisor length does not match config");
    const Vec dd = mat_vec(c.gram, d.coeffs);
    std::vector<size_t> s;
    Vec x;
    for (;;) {
        if (!s.empty()) {
            Matrix g = principal_submatrix(c.gram, s);
            if (!is_negative_definite(g)) throw NotPseudoEffective("support is not negative definite");
            Vec rhs;
            for (size_t i : s) rhs.push_back(dd[i]);
            x = solve(g, rhs);
        }
        std::vector<size_t> neg;
        for (size_t i = 0; i < n; ++i) {
            if (contains(s, i)) continue;
            Rat pd = dd[i];
            for (size_t k = 0; k < s.size(); ++k) pd -= x[k] * c.gram[i][s[k]];
            if (pd < 0) neg.push_back(i);
        }
        if (neg.empty()) break;
        s.insert(s.end(), neg.begin(), neg.end());
    }
    NegativePart r{{}, Vec(n)};
    for (size_t k = 0; k < s.size(); ++k) {
        if (x[k] < 0) throw NotPseudoEffective("negative coefficient for " + c.curves[s[k]].name);
        r.coeffs[s[k]] = x[k];
    }
    for (size_t i = 0; i < n; ++i)
        if (r.coeffs[i] > 0) r.support.push_back(c.curves[i].name);
    return r;
}

Decomposition parametric_decompose(const SurfaceConfig& c, const std::string& flag,
                                   const std::optional<Rat>& pullback_coeff) {
    const size_t n = c.size();
    const size_t f = c.index(flag);
    std::vector<Poly> D(n);
    for (size_t i = 0; i < n; ++i) D[i] = Poly::constant(c.anti_k[i]);
    D[f] = Poly::affine(pullback_coeff ? *pullback_coeff : c.anti_k[f], -1);
    std::vector<Poly> DD(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) DD[i] += D[j] * c.gram[i][j];
    Poly d_sq;
    for (size_t i = 0; i < n; ++i) d_sq += D[i] * DD[i];

    Decomposition out;
    out.flag = flag;
    Rat lo = 0;
    for (size_t guard = 0;; ++guard) {
        if (guard > 4 * n + 8) throw NotPseudoEffective("sweep did not terminate for flag " + flag);
        std::vector<size_t> s;
        std::vector<Poly> x, pd;
        for (;;) {
            x.assign(s.size(), Poly());
            if (!s.empty()) {
                Matrix g = principal_submatrix(c.gram, s);
                if (!is_negative_definite(g))
                    throw NotPseudoEffective("support is not negative definite at v = " + to_string(lo));
                Vec r0, r1;
                for (size_t i : s) {
                    r0.push_back(DD[i].coeff(0));
                    r1.push_back(DD[i].coeff(1));
                }
                auto sol = solve(g, std::vector<Vec>{r0, r1});
                for (size_t k = 0; k < s.size(); ++k) x[k] = Poly::affine(sol[0][k], sol[1][k]);
            }
            pd.assign(n, Poly());
            for (size_t i = 0; i < n; ++i) {
                pd[i] = DD[i];
                for (size_t k = 0; k < s.size(); ++k) pd[i] -= x[k] * c.gram[i][s[k]];
            }
            std::vector<size_t> neg;
            for (size_t i = 0; i < n; ++i)
                if (!contains(s, i) && sign_after(pd[i], lo) < 0) neg.push_back(i);
            if (neg.empty()) break;
            s.insert(s.end(), neg.begin(), neg.end());
        }
        for (size_t k = 0; k < s.size(); ++k)
            if (sign_after(x[k], lo) < 0)
                throw NotPseudoEffective("coefficient of " + c.curves[s[k]].name + " negative after v = " +
                                         to_string(lo));

        Poly p_sq = d_sq;
        for (size_t k = 0; k < s.size(); ++k) p_sq -= x[k] * DD[s[k]];

        std::optional<Rat> nb;
        auto offer = [&](const Poly& p) {
            if (p.coeff(1) >= 0) return;
            Rat r = -p.coeff(0) / p.coeff(1);
            if (r > lo && (!nb || r < *nb)) nb = r;
        };
        for (size_t i = 0; i < n; ++i)
            if (!contains(s, i)) offer(pd[i]);
        for (const auto& xk : x) offer(xk);

        std::optional<Rat> tau;
        if (p_sq.is_zero()) throw NotPseudoEffective("P^2 vanishes identically after v = " + to_string(lo));
        if (auto roots = rational_roots(p_sq)) {
            for (const auto& r : *roots)
                if (r > lo && (!tau || r < *tau)) tau = r;
        } else if (has_root_in(p_sq, lo, nb)) {
            throw IrrationalRoot("P^2 = " + p_sq.str() + " has an irrational root after v = " + to_string(lo));
        }
        if (!tau && !nb) throw NotPseudoEffective("no pseudo-effective threshold for flag " + flag);

        Chamber ch;
        ch.lo = lo;
        ch.hi = (tau && (!nb || *tau <= *nb)) ? *tau : *nb;
        std::vector<size_t> order = s;
        std::sort(order.begin(), order.end());
        for (size_t i : order) {
            size_t k = std::find(s.begin(), s.end(), i) - s.begin();
            if (x[k].is_zero()) continue;
            ch.support.push_back(c.curves[i].name);
            ch.n_coeffs.emplace_back(c.curves[i].name, x[k]);
        }
        ch.p_sq = p_sq;
        for (size_t i = 0; i < n; ++i) ch.p_dot.emplace_back(c.curves[i].name, pd[i]);
        for (const auto& pt : c.points) {
            if (pt.on_curve != flag) continue;
            Poly nd;
            for (const auto& [g, m] : pt.incidences) nd += ch.n_coeff(g) * Rat(m);
            ch.n_dot_flag.emplace_back(pt.id, nd);
        }
        out.chambers.push_back(std::move(ch));
        if (out.chambers.back().hi == tau) {
            out.tau = *tau;
            return out;
        }
        lo = *nb;
    }
}

NegativePart evaluate_negative_part(const SurfaceConfig& c, const Decomposition& d, const Rat& v) {
    const Chamber& ch = d.chamber_at(v);
    NegativePart r{{}, Vec(c.size())};
    for (const auto& [g, p] : ch.n_coeffs) r.coeffs[c.index(g)] = p(v);
    for (size_t i = 0; i < c.size(); ++i)
        if (r.coeffs[i] > 0) r.support.push_back(c.curves[i].name);
    return r;
}

PiecewisePoly n_restricted_at_point(const Decomposition& d, const PointSpec& point) {
    if (point.on_curve != d.flag)
        throw std::invalid_argument("point " + point.id + " does not lie on flag " + d.flag);
    std::vector<Rat> b{d.chambers.front().lo};
    std::vector<Poly> pieces;
    for (const auto& ch : d.chambers) {
        Poly nd;
        for (const auto& [g, m] : point.incidences) nd += ch.n_coeff(g) * Rat(m);
        b.push_back(ch.hi);
        pieces.push_back(nd);
    }
    return PiecewisePoly(b, pieces, true);
}

json poly_to_json(const Poly& p) {
    json a = json::array();
    for (const auto& x : p.coeffs()) a.push_back(to_string(x));
    return a;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("polynomial: expected an array of rationals");
    std::vector<Rat> c;
    for (const auto& x : j) {
        if (!x.is_string()) throw SchemaError("polynomial: expected rational strings");
        c.push_back(parse_rat(x.get<std::string>()));
    }
    return Poly(c);
}

json decomposition_to_json(const Decomposition& d) {
    json chs = json::array();
    for (const auto& ch : d.chambers) {
        json nc = json::object(), pdot = json::object(), nfl = json::object();
        for (const auto& [g, p] : ch.n_coeffs) nc[g] = poly_to_json(p);
        for (const auto& [g, p] : ch.p_dot) pdot[g] = poly_to_json(p);
        for (const auto& [id, p] : ch.n_dot_flag) nfl[id] = poly_to_json(p);
        chs.push_back(json{{"lo", to_string(ch.lo)},
                           {"hi", to_string(ch.hi)},
                           {"support", ch.support},
                           {"n_coeffs", nc},
                           {"p_sq", poly_to_json(ch.p_sq)},
                           {"p_dot", pdot},
                           {"n_dot_flag", nfl}});
    }
    return json{{"flag", d.flag}, {"tau", to_string(d.tau)}, {"chambers", chs}};
}

Decomposition decomposition_from_json(const json& j) {
    Decomposition d;
    d.flag = j.at("flag").get<std::string>();
    d.tau = parse_rat(j.at("tau").get<std::string>());
    for (const auto& cj : j.at("chambers")) {
        Chamber ch;
        ch.lo = parse_rat(cj.at("lo").get<std::string>());
        ch.hi = parse_rat(cj.at("hi").get<std::string>());
        ch.support = cj.at("support").get<std::vector<std::string>>();
        for (auto it = cj.at("n_coeffs").begin(); it != cj.at("n_coeffs").end(); ++it)
            ch.n_coeffs.emplace_back(it.key(), poly_from_json(it.value()));
        ch.p_sq = poly_from_json(cj.at("p_sq"));
        for (auto it = cj.at("p_dot").begin(); it != cj.at("p_dot").end(); ++it)
            ch.p_dot.emplace_back(it.key(), poly_from_json(it.value()));
        if (cj.contains("n_dot_flag"))
            for (auto it = cj.at("n_dot_flag").begin(); it != cj.at("n_dot_flag").end(); ++it)
                ch.n_dot_flag.emplace_back(it.key(), poly_from_json(it.value()));
        d.chambers.push_back(std::move(ch));
    }
    return d;
}

std::string decomposition_text(const Decomposition& d) {
    std::ostringstream os;
    os << "flag " << d.flag << ", tau = " << to_string(d.tau) << "\n";
    for (const auto& ch : d.chambers) {
        os << "v in [" << to_string(ch.lo) << ", " << to_string(ch.hi) << "]\n";
        os << "  N   = ";
        if (ch.n_coeffs.empty()) os << "0";
        for (size_t k = 0; k < ch.n_coeffs.size(); ++k)
            os << (k ? " + " : "") << "(" << ch.n_coeffs[k].second.str() << ")" << ch.n_coeffs[k].first;
        os << "\n  P^2 = " << ch.p_sq.str() << "\n";
        os << "  P." << d.flag << " = " << ch.dot(d.flag).str() << "\n";
        for (const auto& [g, p] : ch.p_dot)
            if (g != d.flag && !p.is_zero()) os << "  P." << g << " = " << p.str() << "\n";
    }
    return os.str();
}

}  // namespace dpd

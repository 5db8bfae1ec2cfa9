#include "dpdelta/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dpd {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

Poly Poly::constant(const Rat& c) { return Poly({c}); }
Poly Poly::affine(const Rat& c0, const Rat& c1) { return Poly({c0, c1}); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::operator()(const Rat& v) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& k) const {
    std::vector<Rat> r(c_);
    for (auto& x : r) x *= k;
    return Poly(std::move(r));
}

Poly Poly::operator-() const { return *this * Rat(-1); }

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(r));
}

Poly Poly::antiderivative() const {
    std::vector<Rat> r(c_.size() + 1);
    for (size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i] / Rat(static_cast<long>(i + 1));
    return Poly(std::move(r));
}

Rat Poly::integrate(const Rat& a, const Rat& b) const {
    Poly F = antiderivative();
    return F(b) - F(a);
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        const Rat& x = c_[k];
        if (x == 0) continue;
        Rat mag = abs(x);
        if (first) {
            if (x < 0) os << "-";
        } else {
            os << (x < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) os << to_string(mag);
        if (k >= 1) os << "v";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

namespace {

bool rat_sqrt(const Rat& x, Rat& out) {
    if (x < 0) return false;
    mpz_class n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class sn = sqrt(n), sd = sqrt(d);
    out = Rat(sn, sd);
    out.canonicalize();
    return true;
}

int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

std::optional<std::vector<Rat>> rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    if (p.degree() > 2) throw std::invalid_argument("rational_roots: degree > 2");
    if (p.degree() == 0) return std::vector<Rat>{};
    if (p.degree() == 1) return std::vector<Rat>{-p.coeff(0) / p.coeff(1)};
    Rat a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    Rat disc = b * b - 4 * a * c;
    if (disc < 0) return std::vector<Rat>{};
    Rat r;
    if (!rat_sqrt(disc, r)) return std::nullopt;
    Rat x1 = (-b - r) / (2 * a), x2 = (-b + r) / (2 * a);
    if (x1 > x2) std::swap(x1, x2);
    if (x1 == x2) return std::vector<Rat>{x1};
    return std::vector<Rat>{x1, x2};
}

bool has_root_in(const Poly& p, const Rat& lo, const std::optional<Rat>& hi) {
    if (p.is_zero()) return true;
    if (p.degree() > 2) throw std::invalid_argument("has_root_in: degree > 2");
    if (auto rr = rational_roots(p)) {
        for (const auto& r : *rr)
            if (r > lo && (!hi || r <= *hi)) return true;
        return false;
    }
    // irrational pair: never equal to lo or hi, so sign tests are exact
    int s_lo = sgn(p(lo));
    Rat vertex = -p.coeff(1) / (2 * p.coeff(2));
    int s_vx = sgn(p(vertex));
    int s_far = hi ? sgn(p(*hi)) : sgn(p.coeff(2));
    if (s_lo * s_far < 0) return true;
    bool vertex_inside = vertex > lo && (!hi || vertex < *hi);
    return vertex_inside && s_vx * s_lo < 0;
}

std::optional<Rat> min_positive_root(const Poly& p, const Rat& lo) {
    if (p.is_zero()) return lo;
    if (p.degree() > 2) throw std::invalid_argument("min_positive_root: degree > 2");
    if (p(lo) == 0) return lo;
    auto rr = rational_roots(p);
    if (!rr) {
        if (has_root_in(p, lo, std::nullopt))
            throw IrrationalRoot("irrational root of " + p.str() + " beyond " + to_string(lo));
        return std::nullopt;
    }
    for (const auto& r : *rr)
        if (r >= lo) return r;
    return std::nullopt;
}

PiecewisePoly::PiecewisePoly(std::vector<Rat> breakpoints, std::vector<Poly> pieces, bool continuous)
    : b_(std::move(breakpoints)), p_(std::move(pieces)), continuous_(continuous) {
    if (b_.size() < 2 || p_.size() != b_.size() - 1)
        throw std::invalid_argument("PiecewisePoly: need k+1 breakpoints for k >= 1 pieces");
    for (size_t i = 0; i + 1 < b_.size(); ++i)
        if (!(b_[i] < b_[i + 1])) throw std::invalid_argument("PiecewisePoly: breakpoints not increasing");
    if (continuous_)
        for (size_t i = 1; i + 1 < b_.size(); ++i)
            if (p_[i - 1](b_[i]) != p_[i](b_[i]))
                throw std::invalid_argument("PiecewisePoly: discontinuity at " + to_string(b_[i]));
}

std::string PiecewisePoly::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < p_.size(); ++i)
        os << "[" << to_string(b_[i]) << ", " << to_string(b_[i + 1]) << "]: " << p_[i].str() << "\n";
    return os.str();
}

Rat integrate(const PiecewisePoly& pp, const Rat& a, const Rat& b) {
    if (a < pp.lo() || b > pp.hi() || a > b) throw OutOfDomain("integrate: interval outside domain");
    Rat total = 0;
    const auto& bp = pp.breakpoints();
    for (size_t i = 0; i < pp.pieces().size(); ++i) {
        Rat l = std::max(a, bp[i]), r = std::min(b, bp[i + 1]);
        if (l < r) total += pp.pieces()[i].integrate(l, r);
    }
    return total;
}

Rat eval(const PiecewisePoly& pp, const Rat& v) {
    if (v < pp.lo() || v > pp.hi()) throw OutOfDomain("eval: " + to_string(v) + " outside domain");
    const auto& bp = pp.breakpoints();
    for (size_t i = 0; i < pp.pieces().size(); ++i) {
        if (v <= bp[i + 1]) {
            Rat left = pp.pieces()[i](v);
            if (pp.continuous() && v == bp[i + 1] && i + 1 < pp.pieces().size() &&
                pp.pieces()[i + 1](v) != left)
                throw std::logic_error("eval: continuity violated at " + to_string(v));
            return left;
        }
    }
    return pp.pieces().back()(v);
}

}  // namespace dpd

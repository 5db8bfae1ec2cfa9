#pragma once

#include "dpdelta/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpd {

struct OutOfDomain : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IrrationalRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Univariate polynomial in v, ascending coefficients, trailing zeros stripped.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    static Poly constant(const Rat& c);
    static Poly affine(const Rat& c0, const Rat& c1);  // c0 + c1 v

    const std::vector<Rat>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rat coeff(size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

    Rat operator()(const Rat& v) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& k) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative() const;
    Poly antiderivative() const;  // constant term 0
    Rat integrate(const Rat& a, const Rat& b) const;

    // "1 - 2v^2" style rendering.
    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Smallest rational root r >= lo. None if no real root >= lo.
// Throws IrrationalRoot if a real root >= lo exists but is irrational.
// Degree <= 2 only; the zero polynomial returns lo.
std::optional<Rat> min_positive_root(const Poly& p, const Rat& lo);

// True if p has a real root in (lo, hi], or in (lo, inf) when hi is empty.
bool has_root_in(const Poly& p, const Rat& lo, const std::optional<Rat>& hi);

// Real roots of a polynomial of degree <= 2 when they are rational; nullopt when
// the discriminant is not a rational square. The zero polynomial is rejected.
std::optional<std::vector<Rat>> rational_roots(const Poly& p);

class PiecewisePoly {
public:
    PiecewisePoly() = default;
    PiecewisePoly(std::vector<Rat> breakpoints, std::vector<Poly> pieces, bool continuous = false);

    const std::vector<Rat>& breakpoints() const { return b_; }
    const std::vector<Poly>& pieces() const { return p_; }
    bool continuous() const { return continuous_; }
    const Rat& lo() const { return b_.front(); }
    const Rat& hi() const { return b_.back(); }

    std::string str() const;

private:
    std::vector<Rat> b_;
    std::vector<Poly> p_;
    bool continuous_ = false;
};

Rat integrate(const PiecewisePoly& pp, const Rat& a, const Rat& b);
Rat eval(const PiecewisePoly& pp, const Rat& v);

}  // namespace dpd

#include "dpdelta/poly.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace dpd;

namespace {

Poly P(std::initializer_list<Rat> c) { return Poly(std::vector<Rat>(c)); }

// P^2 for flag E on the A1 nodal surface
PiecewisePoly a1_p_sq() {
    return PiecewisePoly({0, Rat(1, 2), 1}, {P({1, 0, -2}), P({2, -4, 2})}, true);
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
    CHECK(to_string(parse_rat("-3/6")) == "-1/2");
    CHECK(to_string(parse_rat("4/2")) == "2");
    CHECK(to_string(parse_rat("0/5")) == "0");
    CHECK(to_string(parse_rat("7")) == "7");
    CHECK_THROWS_AS(parse_rat("2/-4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
    Rat big = parse_rat("123456789012345678901234567890/7");
    CHECK(to_string(big * 7) == "123456789012345678901234567890");
}

TEST_CASE("field axioms on random rationals") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        Rat a = test::random_rat(rng), b = test::random_rat(rng), c = test::random_rat(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == 0);
        if (a != 0) CHECK(a * (1 / a) == 1);
        Rat s = a + b;
        CHECK(s.get_den() > 0);
        CHECK(gcd(s.get_num(), s.get_den()) == 1);
    }
}

TEST_CASE("polynomial basics") {
    CHECK(P({0, 0}).is_zero());
    CHECK(P({1, 2, 0}).degree() == 1);
    CHECK(Poly().degree() == -1);
    Poly a = P({1, -1});
    CHECK(a * a == P({1, -2, 1}));
    CHECK(a * a * a == P({1, -3, 3, -1}));
    CHECK((a - a).is_zero());
    CHECK(P({1, 0, -2}).str() == "1 - 2v^2");
    CHECK(P({0, Rat(1, 2)}).str() == "1/2v");
    CHECK(Poly().str() == "0");
    CHECK(P({1, 2, 3}).derivative() == P({2, 6}));
    CHECK(P({2, 6}).antiderivative() == P({0, 2, 3}));
    CHECK(P({0, 0, 1}).integrate(0, 3) == 9);
}

TEST_CASE("integrate piecewise polynomials") {
    CHECK(integrate(a1_p_sq(), 0, 1) == Rat(1, 2));
    CHECK(integrate(PiecewisePoly({0, 1}, {Poly()}), 0, 1) == 0);
    PiecewisePoly a6({0, 1, Rat(4, 3), Rat(3, 2)},
                     {P({1, 0, Rat(-7, 12)}), P({2, -2, Rat(5, 12)}), P({6, -8, Rat(8, 3)})}, true);
    CHECK(integrate(a6, 0, Rat(3, 2)) == Rat(8, 9));
    CHECK(integrate(a1_p_sq(), Rat(1, 4), Rat(1, 4)) == 0);
    CHECK_THROWS_AS(integrate(a1_p_sq(), 0, 2), OutOfDomain);
    CHECK_THROWS_AS(integrate(a1_p_sq(), Rat(-1), 1), OutOfDomain);
}

TEST_CASE("integration is additive over adjacent intervals") {
    std::mt19937_64 rng(5);
    PiecewisePoly a6({0, 1, Rat(4, 3), Rat(3, 2)},
                     {P({1, 0, Rat(-7, 12)}), P({2, -2, Rat(5, 12)}), P({6, -8, Rat(8, 3)})}, true);
    std::uniform_int_distribution<long> u(0, 1500);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rat> x{Rat(u(rng), 1000), Rat(u(rng), 1000), Rat(u(rng), 1000)};
        for (auto& r : x) r.canonicalize();
        std::sort(x.begin(), x.end());
        CHECK(integrate(a6, x[0], x[1]) + integrate(a6, x[1], x[2]) == integrate(a6, x[0], x[2]));
    }
}

TEST_CASE("piecewise construction is validated") {
    CHECK_THROWS_AS(PiecewisePoly({0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(PiecewisePoly({0, 0}, {P({1})}), std::invalid_argument);
    CHECK_THROWS_AS(PiecewisePoly({0, 1, 2}, {P({1}), P({2})}, true), std::invalid_argument);
    CHECK_NOTHROW(PiecewisePoly({0, 1, 2}, {P({1}), P({2})}, false));
}

TEST_CASE("min_positive_root") {
    CHECK(min_positive_root(P({-1, 2}), 0) == Rat(1, 2));
    CHECK_FALSE(min_positive_root(P({1}), 0).has_value());
    CHECK_THROWS_AS(min_positive_root(P({1, 0, Rat(-1, 3)}), 0), IrrationalRoot);
    CHECK(min_positive_root(P({2, -3, 1}), 0) == 1);
    CHECK(min_positive_root(P({2, -3, 1}), Rat(3, 2)) == 2);
    CHECK_FALSE(min_positive_root(P({2, -3, 1}), 3).has_value());
    CHECK_FALSE(min_positive_root(P({1, 0, 1}), 0).has_value());
    // roots -sqrt(3), sqrt(3): only the negative one lies below lo = 2
    CHECK_FALSE(min_positive_root(P({-3, 0, 1}), 2).has_value());
    CHECK_THROWS_AS(min_positive_root(P({1, 2, 3, 4}), 0), std::invalid_argument);
}

TEST_CASE("has_root_in brackets irrational roots exactly") {
    Poly p = P({-3, 0, 1});  // roots +-sqrt(3)
    CHECK(has_root_in(p, 1, Rat(2)));
    CHECK_FALSE(has_root_in(p, 1, Rat(17, 10)));
    CHECK(has_root_in(p, Rat(173, 100), Rat(87, 50)));
    CHECK_FALSE(has_root_in(p, 2, std::nullopt));
    CHECK(has_root_in(p, -5, Rat(0)));
    CHECK_FALSE(rational_roots(p).has_value());
    auto rr = rational_roots(P({2, -3, 1}));
    REQUIRE(rr.has_value());
    CHECK(rr->size() == 2);
}

TEST_CASE("eval with continuity at breakpoints") {
    CHECK(eval(a1_p_sq(), Rat(3, 4)) == Rat(1, 8));
    CHECK(eval(a1_p_sq(), 0) == 1);
    PiecewisePoly pe({0, Rat(1, 2), 1}, {P({0, 2}), P({2, -2})}, true);
    CHECK(eval(pe, Rat(1, 2)) == 1);
    CHECK_THROWS_AS(eval(pe, Rat(3, 2)), OutOfDomain);
    PiecewisePoly jump({0, 1, 2}, {P({1}), P({2})}, false);
    CHECK(eval(jump, 1) == 1);
}

TEST_CASE("breakpoint values agree from both sides on every catalog P^2 and P.F") {
    for (const auto& cf : test::all_config_flags()) {
        Decomposition d = parametric_decompose(cf.rec->config(cf.key), cf.flag);
        for (const PiecewisePoly& pp : {d.p_sq(), d.p_dot_flag()}) {
            const auto& b = pp.breakpoints();
            for (size_t i = 1; i + 1 < b.size(); ++i) CHECK(pp.pieces()[i - 1](b[i]) == pp.pieces()[i](b[i]));
        }
    }
}

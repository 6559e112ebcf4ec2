#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genuspart/rational.hpp>
#include <genuspart/series.hpp>

#include <stdexcept>

using namespace genuspart;
using S = Series<Rat>;

namespace {

S geometric(int order) {  // 1/(1-x)
    S g(order);
    for (int k = 0; k <= order; ++k) g.set_coeff(k, 1);
    return g;
}

}  // namespace

TEST_CASE("construction and coefficient access") {
    S s(5);
    CHECK(s.order() == 5);
    for (int k = 0; k <= 5; ++k) CHECK(s.coeff(k) == 0);
    s.set_coeff(3, Rat(7, 2));
    CHECK(s.coeff(3) == Rat(7, 2));
    CHECK_THROWS_AS(s.coeff(6), std::out_of_range);
    CHECK_THROWS_AS(s.set_coeff(-1, Rat(1)), std::out_of_range);

    CHECK(S::constant(Rat(4), 3).coeff(0) == 4);
    CHECK(S::x(3).coeff(1) == 1);
    CHECK(S::monomial(Rat(5), 2, 4).coeff(2) == 5);
}

TEST_CASE("ring operations") {
    S one = S::constant(Rat(1), 8);
    S x = S::x(8);

    S a = one + x;              // 1 + x
    S b = one - x;              // 1 - x
    S prod = a * b;             // 1 - x^2
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.coeff(1) == 0);
    CHECK(prod.coeff(2) == -1);
    for (int k = 3; k <= 8; ++k) CHECK(prod.coeff(k) == 0);

    CHECK((a * geometric(8)).coeff(5) == 2);  // (1+x)/(1-x) = 1 + 2x + 2x^2 + ...
    CHECK((-x).coeff(1) == -1);
    CHECK(x.scaled(Rat(3)).coeff(1) == 3);

    // mixed orders truncate to the shorter one
    CHECK((S::x(8) + S::x(4)).order() == 4);
}

TEST_CASE("composition") {
    // f = 1 + x + x^2, g = x + x^2:
    // f(g) = 1 + (x + x^2) + (x + x^2)^2 = 1 + x + 2x^2 + 2x^3 + x^4
    S f(4), g(4);
    f.set_coeff(0, 1);
    f.set_coeff(1, 1);
    f.set_coeff(2, 1);
    g.set_coeff(1, 1);
    g.set_coeff(2, 1);
    S fg = f.composed_with(g);
    CHECK(fg.coeff(0) == 1);
    CHECK(fg.coeff(1) == 1);
    CHECK(fg.coeff(2) == 2);
    CHECK(fg.coeff(3) == 2);
    CHECK(fg.coeff(4) == 1);

    // composition needs g(0) = 0
    CHECK_THROWS_AS(f.composed_with(f), std::invalid_argument);
}

TEST_CASE("reciprocal") {
    S b = S::constant(Rat(1), 10) - S::x(10);
    S inv = b.reciprocal();
    for (int k = 0; k <= 10; ++k) CHECK(inv.coeff(k) == 1);
    S check = b * inv;
    CHECK(check.coeff(0) == 1);
    for (int k = 1; k <= 10; ++k) CHECK(check.coeff(k) == 0);

    CHECK_THROWS_AS(S::x(4).reciprocal(), std::invalid_argument);
}

TEST_CASE("rational powers") {
    // (1-4x)^(-1/2) = sum C(2n,n) x^n
    S base = S::constant(Rat(1), 8) - S::x(8).scaled(Rat(4));
    S c = base.pow_rational(Rat(-1, 2));
    std::uint64_t central[] = {1, 2, 6, 20, 70, 252, 924, 3432, 12870};
    for (int k = 0; k <= 8; ++k) CHECK(c.coeff(k) == Rat(BigInt(central[k])));

    // (1+x)^(1/2) squared is 1+x
    S r = (S::constant(Rat(1), 10) + S::x(10)).pow_rational(Rat(1, 2));
    S sq = r * r;
    CHECK(sq.coeff(0) == 1);
    CHECK(sq.coeff(1) == 1);
    for (int k = 2; k <= 10; ++k) CHECK(sq.coeff(k) == 0);

    // integer exponent agrees with repeated multiplication
    S p3 = (S::constant(Rat(1), 6) + S::x(6)).pow_rational(Rat(3));
    CHECK(p3.coeff(2) == 3);
    CHECK(p3.coeff(3) == 1);

    CHECK_THROWS_AS(S::x(4).pow_rational(Rat(1, 2)), std::invalid_argument);
}

TEST_CASE("derivative and shifts") {
    S f(5);
    f.set_coeff(3, Rat(4));
    S d = f.derivative();
    CHECK(d.order() == 4);
    CHECK(d.coeff(2) == 12);

    S up = f.shifted_up(2);
    CHECK(up.coeff(5) == 4);
    CHECK(up.shifted_down(2).coeff(3) == 4);
    CHECK_THROWS_AS(S::x(4).shifted_down(2), std::invalid_argument);

    CHECK(f.truncated(3).order() == 3);
    CHECK(f.truncated(3).coeff(3) == 4);
}

TEST_CASE("fixed point of Z = 1 + W(xZ)") {
    // W = x: Z = 1 + xZ, the geometric series
    S Z = solve_fixed_point(S::x(10));
    for (int k = 0; k <= 10; ++k) CHECK(Z.coeff(k) == 1);

    // W = x^2: Z = 1 + (xZ)^2, Catalan numbers on even powers
    S Z2 = solve_fixed_point(S::monomial(Rat(1), 2, 12));
    std::uint64_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (int k = 0; k <= 12; ++k)
        CHECK(Z2.coeff(k) == (k % 2 ? Rat(0) : Rat(BigInt(catalan[k / 2]))));
}

TEST_CASE("formatting") {
    S f(6);
    f.set_coeff(0, 1);
    f.set_coeff(2, 2);
    f.set_coeff(4, Rat(-1, 3));
    CHECK(f.str() == "1 + 2*x^2 + (-1/3)*x^4");
    CHECK(S(3).str() == "0");
}

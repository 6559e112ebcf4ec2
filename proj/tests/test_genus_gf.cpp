#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genuspart/enumerate.hpp>
#include <genuspart/genus_gf.hpp>

#include <cstdint>

using namespace genuspart;

namespace {

Monomial type_monomial(const PartitionType& t) {
    Monomial m;
    for (auto [size, mult] : t.mult) m.powers.emplace_back(var::kappa(size), mult);
    return m;
}

}  // namespace

TEST_CASE("weight specification parsing") {
    CHECK(CumulantSpec::parse("ones").mode == WeightMode::all_ones);
    CHECK(CumulantSpec::parse("y").mode == WeightMode::all_y);
    CHECK(CumulantSpec::parse("doublets").mode == WeightMode::doublets);
    CHECK(CumulantSpec::parse("triplets").mode == WeightMode::triplets);
    CHECK(CumulantSpec::parse("sf-ones").mode == WeightMode::singleton_free_ones);
    CHECK(CumulantSpec::parse("sf-y").mode == WeightMode::singleton_free_y);
    CHECK(CumulantSpec::parse("symbolic").mode == WeightMode::symbolic);

    CumulantSpec restricted = CumulantSpec::parse("symbolic:2,3");
    CHECK(restricted.mode == WeightMode::symbolic);
    REQUIRE(restricted.sizes.has_value());
    CHECK(restricted.sizes->contains(2));
    CHECK(restricted.sizes->contains(3));

    CumulantSpec custom = CumulantSpec::parse("2=1,3=1/2");
    CHECK(custom.mode == WeightMode::custom);
    CHECK(custom.custom.at(2) == Rat(1));
    CHECK(custom.custom.at(3) == Rat(1, 2));

    CHECK_THROWS(CumulantSpec::parse("nonsense"));
    // malformed explicit lists fail with a message naming the bad token
    CHECK_THROWS_WITH_AS(CumulantSpec::parse("custom 2=1"),
                         doctest::Contains("not a part size"), std::invalid_argument);
    CHECK_THROWS_AS(CumulantSpec::parse("2="), std::invalid_argument);
    CHECK_THROWS_AS(CumulantSpec::parse("2=abc"), std::invalid_argument);
    CHECK_THROWS_AS(CumulantSpec::parse("symbolic:2,x"), std::invalid_argument);
    CHECK_THROWS_AS(CumulantSpec::parse("0=1"), std::invalid_argument);
}

TEST_CASE("weight series construction") {
    Series<Rat> wd = build_W<Rat>(CumulantSpec::parse("doublets"), 6);
    for (int k = 0; k <= 6; ++k) CHECK(wd.coeff(k) == (k == 2 ? 1 : 0));

    Series<Poly> ws = build_W<Poly>(CumulantSpec::parse("symbolic"), 4);
    CHECK(ws.coeff(3) == Poly::kappa(3));
    CHECK(ws.coeff(0).is_zero());

    // y-weighted modes mark every part with one power of y
    Series<Poly> wy = build_W<Poly>(CumulantSpec::parse("y"), 4);
    CHECK(wy.coeff(1) == Poly::y());
    Series<Poly> wsf = build_W<Poly>(CumulantSpec::parse("sf-y"), 4);
    CHECK(wsf.coeff(1).is_zero());
    CHECK(wsf.coeff(2) == Poly::y());
}

TEST_CASE("genus-0 specializations") {
    // all weights 1: Catalan numbers
    Series<Rat> z = genus0_gf(build_W<Rat>(CumulantSpec::parse("ones"), 8));
    std::uint64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int k = 0; k <= 8; ++k) CHECK(z.coeff(k) == Rat(BigInt(catalan[k])));

    // triplet weights: Fuss-Catalan, the root of (xZ)^3 - Z + 1 = 0
    Series<Rat> zt = genus0_gf(build_W<Rat>(CumulantSpec::parse("triplets"), 12));
    CHECK(zt.coeff(3) == 1);
    CHECK(zt.coeff(6) == 3);
    CHECK(zt.coeff(9) == 12);
    CHECK(zt.coeff(12) == 55);
    Series<Rat> xz = zt.shifted_up(1);
    Series<Rat> relation = xz * xz * xz - zt + Series<Rat>::constant(Rat(1), 12);
    for (int k = 0; k <= 12; ++k) CHECK(relation.coeff(k) == 0);

    // y weights: Narayana numbers
    Series<Poly> zy = genus0_gf(build_W<Poly>(CumulantSpec::parse("y"), 6));
    Poly n4 = zy.coeff(4);
    CHECK(n4.coeff_of(Monomial::var(var::y, 1)) == Rat(1));
    CHECK(n4.coeff_of(Monomial::var(var::y, 2)) == Rat(6));
    CHECK(n4.coeff_of(Monomial::var(var::y, 3)) == Rat(6));
    CHECK(n4.coeff_of(Monomial::var(var::y, 4)) == Rat(1));

    // symbolic coefficients are the Kreweras counts
    Series<Poly> zs = genus0_gf(build_W<Poly>(CumulantSpec::parse("symbolic"), 6));
    for (int n = 1; n <= 6; ++n) {
        EnumOptions opt;
        opt.genus = 0;
        for (const auto& [cell, cnt] : count_by_genus(n, opt).cells)
            CHECK(zs.coeff(n).coeff_of(type_monomial(cell.first)) == Rat(BigInt(cnt)));
    }
}

TEST_CASE("genus-1 specializations") {
    Series<Rat> zd = genus1_gf(build_W<Rat>(CumulantSpec::parse("doublets"), 12));
    CHECK(zd.coeff(4) == 1);
    CHECK(zd.coeff(6) == 10);
    CHECK(zd.coeff(8) == 70);
    CHECK(zd.coeff(10) == 420);
    CHECK(zd.coeff(12) == 2310);

    Series<Rat> zt = genus1_gf(build_W<Rat>(CumulantSpec::parse("triplets"), 15));
    CHECK(zt.coeff(6) == 6);
    CHECK(zt.coeff(9) == 102);
    CHECK(zt.coeff(12) == 1212);
    CHECK(zt.coeff(15) == 12330);
}

TEST_CASE("genus-2 specializations") {
    Series<Rat> zd = genus2_gf(build_W<Rat>(CumulantSpec::parse("doublets"), 12));
    CHECK(zd.coeff(8) == 21);
    CHECK(zd.coeff(10) == 483);
    CHECK(zd.coeff(12) == 6468);

    Series<Rat> zt = genus2_gf(build_W<Rat>(CumulantSpec::parse("triplets"), 12));
    CHECK(zt.coeff(6) == 1);
    CHECK(zt.coeff(9) == 144);
    CHECK(zt.coeff(12) == 6046);
}

TEST_CASE("the two genus-1 forms agree symbolically") {
    Series<Poly> W = build_W<Poly>(CumulantSpec::parse("symbolic"), 10);
    DressingFunctions<Poly> d = dressing(W);
    Series<Poly> one = Series<Poly>::constant(Poly(1), W.order());
    Series<Poly> direct = d.X2t * d.Y2t * d.inv1m * d.inv1m * d.inv1m * d.inv1m * d.invV;
    Series<Poly> tilded = d.tY2 * d.tX2 * (one + d.tX2) * d.invV;
    CHECK(direct == tilded);
    CHECK(direct == genus1_gf(d));
}

TEST_CASE("dressed quantities satisfy their defining relations") {
    Series<Rat> W = build_W<Rat>(CumulantSpec::parse("ones"), 10);
    DressingFunctions<Rat> d = dressing(W);

    // xt = x Z0
    CHECK(d.xt == d.Z0.shifted_up(1));
    // Z0 = 1 + W(xt)
    Series<Rat> rhs = Series<Rat>::constant(Rat(1), 10) + W.composed_with(d.xt);
    CHECK(d.Z0 == rhs);
    // inv1m (1 - X2t) = 1
    Series<Rat> one = Series<Rat>::constant(Rat(1), 10);
    CHECK(d.inv1m * (one - d.X2t) == one.truncated(10));
    // tX2 = X2t + X2t tX2 (the geometric dressing)
    CHECK(d.tX2 == d.X2t + d.X2t * d.tX2);
}

TEST_CASE("singleton transforms") {
    // round trip in both orders, with a symbolic kappa_1
    Series<Poly> Z = genus0_gf(build_W<Poly>(CumulantSpec::parse("symbolic"), 10));
    Poly k1 = Poly::kappa(1);
    CHECK(singleton_remove_transform(singleton_insert_transform(Z, k1), k1) == Z);
    CHECK(singleton_insert_transform(singleton_remove_transform(Z, k1), k1) == Z);

    // inserting unit-weight singletons maps the singleton-free counts onto the
    // full ones, for every genus
    for (int g = 0; g <= 2; ++g) {
        Series<Rat> Wsf = build_W<Rat>(CumulantSpec::parse("sf-ones"), 14);
        Series<Rat> Wall = build_W<Rat>(CumulantSpec::parse("ones"), 14);
        Series<Rat> zsf = g == 0   ? genus0_gf(Wsf)
                          : g == 1 ? genus1_gf(Wsf)
                                   : genus2_gf(Wsf);
        Series<Rat> zall = g == 0   ? genus0_gf(Wall)
                           : g == 1 ? genus1_gf(Wall)
                                    : genus2_gf(Wall);
        CHECK(singleton_insert_transform(zsf, Rat(1)) == zall);
        CHECK(singleton_remove_transform(zall, Rat(1)) == zsf);
    }
}

TEST_CASE("part-count slices of the genus-2 series") {
    // two parts: binomial(n, 6), with or without singletons
    Series<Poly> z2y = genus2_gf(build_W<Poly>(CumulantSpec::parse("y"), 12));
    Series<Poly> z2sf = genus2_gf(build_W<Poly>(CumulantSpec::parse("sf-y"), 12));
    for (int n = 6; n <= 12; ++n) {
        Rat two_parts(binomial_big(n, 6));
        CHECK(z2y.coeff(n).coeff_of(Monomial::var(var::y, 2)) == two_parts);
        CHECK(z2sf.coeff(n).coeff_of(Monomial::var(var::y, 2)) == two_parts);
    }
    // three parts without singletons: 14 binomial(n, 7) (3n - 13) / 8
    for (int n = 7; n <= 12; ++n) {
        Rat want = Rat(14) * Rat(binomial_big(n, 7)) * Rat(3 * n - 13, 8);
        CHECK(z2sf.coeff(n).coeff_of(Monomial::var(var::y, 3)) == want);
    }
}

TEST_CASE("genus-3 doublet series") {
    Series<Rat> z3 = genus3_doublet_series(16);
    for (int k = 0; k <= 11; ++k) CHECK(z3.coeff(k) == 0);
    CHECK(z3.coeff(12) == 1485);
    CHECK(z3.coeff(14) == 56628);
    CHECK(z3.coeff(16) == 1169740);

    // cross-checked against direct enumeration of doublet partitions
    EnumOptions opt;
    opt.type = PartitionType::parse("2^6");
    opt.genus = 3;
    CHECK(count_by_genus(12, opt).total() == 1485);
}

TEST_CASE("moment polynomials through n = 5") {
    Poly k1 = Poly::kappa(1), k2 = Poly::kappa(2), k3 = Poly::kappa(3);
    Poly k4 = Poly::kappa(4), k5 = Poly::kappa(5);
    Poly eps = Poly::eps();

    CHECK(moment_polynomial(1, 0) == k1);
    CHECK(moment_polynomial(2, 0) == k2 + k1 * k1);
    CHECK(moment_polynomial(3, 0) == k3 + Poly(3) * k2 * k1 + k1 * k1 * k1);
    CHECK(moment_polynomial(4, 0) ==
          k4 + (Poly(2) + eps) * k2 * k2 + Poly(4) * k3 * k1 + Poly(6) * k2 * k1 * k1 +
              k1 * k1 * k1 * k1);
    CHECK(moment_polynomial(5, 0) ==
          k5 + Poly(5) * k4 * k1 + Poly(5) * (Poly(1) + eps) * k3 * k2 +
              Poly(10) * k3 * k1 * k1 + Poly(5) * (Poly(2) + eps) * k2 * k2 * k1 +
              Poly(10) * k2 * k1 * k1 * k1 + k1 * k1 * k1 * k1 * k1);
}

TEST_CASE("symbolic series against enumeration, all genera, n <= 8") {
    Series<Poly> W = build_W<Poly>(CumulantSpec::parse("symbolic"), 8);
    DressingFunctions<Poly> d = dressing(W);
    Series<Poly> zs[3] = {d.Z0, genus1_gf(d), genus2_gf(d)};
    for (int g = 0; g <= 2; ++g) {
        for (int n = 1; n <= 8; ++n) {
            EnumOptions opt;
            opt.genus = g;
            Poly expect;
            for (const auto& [cell, cnt] : count_by_genus(n, opt).cells)
                expect += Poly(type_monomial(cell.first), Rat(BigInt(cnt)));
            CHECK(zs[g].coeff(n) == expect);
        }
    }
}

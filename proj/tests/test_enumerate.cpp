#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genuspart/enumerate.hpp>
#include <genuspart/partition.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

using namespace genuspart;

TEST_CASE("counting formulas") {
    // Bell numbers
    std::uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (int n = 0; n <= 10; ++n) CHECK(bell_number(n) == BigInt(bell[n]));

    // labeled partitions of a given type: n! / (prod alpha_l! l!^alpha_l)
    CHECK(partition_count(4, PartitionType::parse("2^2")) == 3);
    CHECK(partition_count(4, PartitionType::parse("1^2 2")) == 6);
    CHECK(partition_count(4, PartitionType::parse("1 3")) == 4);
    CHECK(partition_count(4, PartitionType::parse("4")) == 1);
    CHECK(partition_count(4, PartitionType::parse("1^4")) == 1);
    CHECK(partition_count(18, PartitionType::parse("2^9")) == 34459425);

    // the type counts add up to the Bell number
    for (int n = 1; n <= 10; ++n) {
        GenusCountTable t = count_by_genus(n, {});
        CHECK(t.total() == bell[n]);
    }

    // non-crossing (genus 0) partitions of a type: Kreweras
    CHECK(kreweras_count(4, PartitionType::parse("2^2")) == 2);
    CHECK(kreweras_count(6, PartitionType::parse("3^2")) == 3);
    CHECK(kreweras_count(6, PartitionType::parse("1^2 2^2")) == 30);
    CHECK_THROWS(kreweras_count(5, PartitionType::parse("2^2")));
}

TEST_CASE("genus-filtered counts on small n") {
    // total genus-0 partitions are the Catalan numbers
    std::uint64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (int n = 1; n <= 9; ++n) {
        EnumOptions opt;
        opt.genus = 0;
        CHECK(count_by_genus(n, opt).total() == catalan[n]);
    }

    // the unique genus-1 partition of [4]
    EnumOptions g1;
    g1.genus = 1;
    GenusCountTable t4 = count_by_genus(4, g1);
    CHECK(t4.total() == 1);
    CHECK(t4.at(PartitionType::parse("2^2"), 1) == 1);

    // genus by type at n = 5: crossings need two doublets
    GenusCountTable t5 = count_by_genus(5, g1);
    CHECK(t5.at(PartitionType::parse("1 2^2"), 1) == 5);
    CHECK(t5.at(PartitionType::parse("2 3"), 1) == 5);
    CHECK(t5.total() == 10);

    // genus never exceeds the bound
    GenusCountTable all6 = count_by_genus(6, {});
    for (const auto& [cell, cnt] : all6.cells) {
        const auto& [type, g] = cell;
        CHECK(g <= genus_max(6, type));
        CHECK(cnt > 0);
    }
}

TEST_CASE("per-genus counts agree between Kreweras and the enumerator") {
    for (int n = 1; n <= 8; ++n) {
        EnumOptions opt;
        opt.genus = 0;
        GenusCountTable t = count_by_genus(n, opt);
        for (const auto& [cell, cnt] : t.cells)
            CHECK(BigInt(cnt) == kreweras_count_big(n, cell.first));
    }
}

TEST_CASE("streaming enumeration respects the filters") {
    EnumOptions opt;
    opt.type = PartitionType::parse("2^2 3");
    opt.genus = 2;
    std::vector<Partition> got;
    for_each_partition(7, opt, [&](const Partition& p, int g) {
        CHECK(g == 2);
        CHECK(p.genus() == 2);
        CHECK(p.type() == *opt.type);
        got.push_back(p);
    });
    CHECK(got.size() == 14);

    // the same count from the table
    CHECK(count_by_genus(7, opt).total() == 14);

    // singleton-free filter
    EnumOptions sf;
    sf.singleton_free = true;
    std::uint64_t seen = 0;
    for_each_partition(6, sf, [&](const Partition& p, int) {
        CHECK(p.type().singleton_free());
        ++seen;
    });
    CHECK(seen == 41);  // singleton-free partitions of [6]
}

TEST_CASE("singleton insertion rule") {
    // counts with r singletons are binomial(n, r) times the singleton-free count
    SingletonCheck c1 = singleton_insertion_check(5, PartitionType::parse("1 2^2"), 1, 0);
    CHECK(c1.ok);
    CHECK(c1.with_singletons == 5);
    CHECK(c1.predicted == 5);

    SingletonCheck c2 = singleton_insertion_check(10, PartitionType::parse("1^2 3 5"), 2, 0);
    CHECK(c2.ok);

    SingletonCheck c3 = singleton_insertion_check(3, PartitionType::parse("1^3"), 0, 0);
    CHECK(c3.ok);
    CHECK(c3.with_singletons == 1);
}

TEST_CASE("orbit census under rotation") {
    // the genus-1 partition of [4] is fixed by every rotation
    EnumOptions opt;
    opt.genus = 1;
    std::vector<OrbitRecord> orbits = orbit_census(4, opt);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].representative.str() == "1,3|2,4");
    CHECK(orbits[0].stabilizer_order == 4);
    CHECK(orbits[0].orbit_length == 1);

    // primitive genus-2 diagrams of [7]: two orbits of full length
    EnumOptions prim;
    prim.type = PartitionType::parse("2^2 3");
    prim.genus = 2;
    prim.klass = ClassFilter::primitive;
    std::vector<OrbitRecord> o7 = orbit_census(7, prim);
    REQUIRE(o7.size() == 2);
    std::uint64_t weight = 0;
    for (const auto& r : o7) weight += r.orbit_length;
    CHECK(weight == 14);

    // orbit lengths always add up to the labeled count
    for (int n = 1; n <= 7; ++n) {
        std::vector<OrbitRecord> all = orbit_census(n, {});
        std::uint64_t total = 0;
        for (const auto& r : all) {
            CHECK(r.representative.canonical() == r.representative);
            CHECK(r.orbit_length * r.stabilizer_order == static_cast<std::uint64_t>(n));
            total += r.orbit_length;
        }
        CHECK(BigInt(total) == bell_number(n));
    }
}

TEST_CASE("irreducibility class filters") {
    // n = 10, two doublets and two triplets, genus 2: 65 primitive diagrams
    // and 15 whose only reductions would split a small part (semiprimitive)
    EnumOptions opt;
    opt.type = PartitionType::parse("2^2 3^2");
    opt.genus = 2;
    opt.klass = ClassFilter::primitive;
    CHECK(count_by_genus(10, opt).total() == 65);
    opt.klass = ClassFilter::semiprimitive;
    CHECK(count_by_genus(10, opt).total() == 15);

    detail::ClassCounts cc = detail::classified_count(10, PartitionType::parse("2^2 3^2"), 2, 0, 1);
    CHECK(cc.primitive == 65);
    CHECK(cc.semiprimitive == 15);

    // only parts of size >= 3 can absorb a degree-2 face: all-doublet types
    // have no semiprimitive diagrams
    EnumOptions d;
    d.type = PartitionType::parse("2^4");
    d.genus = 2;
    d.klass = ClassFilter::semiprimitive;
    CHECK(count_by_genus(8, d).total() == 0);
}

TEST_CASE("sharded counting matches the single-threaded walk") {
    for (int n : {8, 9}) {
        EnumOptions a, b;
        b.threads = 3;
        GenusCountTable ta = count_by_genus(n, a);
        GenusCountTable tb = count_by_genus(n, b);
        CHECK(ta.cells == tb.cells);
    }

    EnumOptions a, b;
    a.type = PartitionType::parse("2^2 3^2");
    a.genus = 2;
    a.klass = ClassFilter::semiprimitive;
    b = a;
    b.threads = 4;
    CHECK(count_by_genus(10, a).cells == count_by_genus(10, b).cells);
}

TEST_CASE("budget enforcement") {
    EnumOptions opt;
    opt.budget = 50;
    CHECK_THROWS_AS(count_by_genus(9, opt), BudgetExceeded);

    EnumOptions fine;
    fine.budget = 100000000;
    CHECK(count_by_genus(6, fine).total() == 203);
}

TEST_CASE("moment polynomial grading") {
    // [x^n] of the moment generating series: total degree in kappa equals the
    // part count; substituting every kappa with 1 counts all partitions
    Poly m4 = moment_polynomial(4, 0);
    Poly ones = m4;
    for (int l = 1; l <= 4; ++l) ones = ones.substituted(var::kappa(l), Rat(1));
    CHECK(ones.substituted(var::eps, Rat(1)) == Poly(15));
    CHECK(ones.substituted(var::eps, Rat(0)) == Poly(14));
}

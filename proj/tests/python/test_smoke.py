"""Smoke tests for the python bindings: a thin pass over every exposed operation."""

import pytest

import genuspart as gp


def test_partition_basics():
    p = gp.Partition("1,3,4,6,7|2,5,9|8|10")
    assert p.n == 10
    assert p.part_count == 4
    assert p.type == "[1^2 3 5]"
    assert p.tau_cycles() == "(1,3,4,6,7)(2,5,9)(8)(10)"
    assert p.face_cycles() == "(1,8,9,6,5,3,2,10)(4)(7)"
    assert p.face_count() == 3
    assert p.genus() == 2
    assert str(p) == "1,3,4,6,7|2,5,9|8|10"
    assert p == gp.Partition.parse("1,3,4,6,7|2,5,9|8|10")

    q = gp.Partition.from_parts(4, [[1, 3], [2, 4]])
    assert q.genus() == 1
    assert q.stabilizer_order() == 4
    assert q.rotated(1) == q
    assert q.canonical() == q
    assert q.parts == [[1, 3], [2, 4]]

    with pytest.raises(ValueError):
        gp.Partition("1,2|2,3")


def test_genus_bounds():
    assert gp.genus_max(10) == 4
    assert gp.genus_max_of_type(10, "1^2 3 5") == 3


def test_counting_formulas():
    assert gp.bell_number(10) == 115975
    assert gp.partition_count(4, "2^2") == 3
    assert gp.partition_count(18, "2^9") == 34459425
    assert gp.kreweras_count(4, "2^2") == 2
    assert gp.kreweras_count(6, "1^2 2^2") == 30


def test_count_by_genus():
    t = gp.count_by_genus(6)
    assert sum(t.values()) == 203
    assert sum(c for (_, g), c in t.items() if g == 0) == 132

    t5 = gp.count_by_genus(5)
    assert t5[("[1 2^2]", 1)] == 5
    assert t5[("[2 3]", 1)] == 5

    t2 = gp.count_by_genus(7, type="2^2 3", genus=2, klass="primitive")
    assert t2 == {("[2^2 3]", 2): 14}

    t3 = gp.count_by_genus(10, type="2^2 3^2", genus=2, klass="semiprimitive")
    assert t3 == {("[2^2 3^2]", 2): 15}


def test_partitions_stream():
    ps = gp.partitions(4, genus=1)
    assert [str(p) for p in ps] == ["1,3|2,4"]
    assert all(p.genus() == 1 for p in ps)

    sf = gp.partitions(5, singleton_free=True)
    assert len(sf) == 11
    assert all(min(len(part) for part in p.parts) >= 2 for p in sf)


def test_orbit_census():
    orbits = gp.orbit_census(7, type="2^2 3", genus=2, klass="primitive")
    assert len(orbits) == 2
    assert sum(o["orbit_length"] for o in orbits) == 14
    assert all(o["stabilizer_order"] == 1 for o in orbits)


def test_reduction():
    p = gp.Partition("1,3,4,6,7|2,5,9|8|10")
    trace = gp.reduce(p)
    assert trace["genus"] == 2
    assert trace["reduced"] == "1,3,5|2,4,6"
    assert trace["class"] == "primitive"
    assert [s["kind"] for s in trace["steps"]] == [
        "remove_singleton",
        "remove_singleton",
        "remove_adjacent_edge",
        "remove_adjacent_edge",
    ]
    assert gp.is_primitive(gp.Partition("1,3|2,4"))
    assert gp.is_semiprimitive(gp.Partition("1,3,5|2,4|6,8,10|7,9"))
    assert gp.confluence_check(p, trials=25, seed=1)


def test_census():
    rows = gp.census_genus2(6, 12)
    by_n = {r["n"]: r for r in rows}
    assert by_n[10]["doublets_only"] == 168
    assert by_n[10]["two_triplets_primitive"] == 65
    assert by_n[10]["two_triplets_semiprimitive"] == 15
    assert by_n[10]["one_quadruplet"] == 15
    assert by_n[12]["total"] == 580


def test_gf_series():
    doublets = gp.gf_series("doublets", 1, 12)
    assert doublets[4] == "1"
    assert doublets[6] == "10"
    assert doublets[12] == "2310"

    ones0 = gp.gf_series("ones", 0, 8)
    assert [int(c) for c in ones0] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]

    sym = gp.gf_series("symbolic", 0, 3)
    assert sym[3] == "k3 + 3*k1*k2 + k1^3"

    z3 = gp.genus3_doublet_series(14)
    assert z3[12] == "1485"
    assert z3[14] == "56628"

    with pytest.raises(ValueError):
        gp.gf_series("ones", 5, 4)


def test_moment_polynomial():
    m4 = gp.moment_polynomial(4)
    assert "eps*k2^2" in m4
    assert "k1^4" in m4
    assert "4*k1*k3" in m4

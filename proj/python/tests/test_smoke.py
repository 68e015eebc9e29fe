import pytest

import hcd


def test_faces():
    assert hcd.weight("1*0*", 2) == 2
    assert hcd.covers("*0", "10", 2)
    assert not hcd.covers("0*", "10", 2)
    assert hcd.hamming_distance("1*0", "**1", 2) == 2
    assert hcd.subfaces("*0", 2, 2) == ["00", "10"]
    assert hcd.superfaces("00", 2, 1) == ["0*", "*0"]
    assert len(hcd.enumerate_faces(4, 2, 3)) == 32


def test_design_roundtrip_and_verify():
    d = hcd.Design(hcd.H(2, 3, 2, 1), ["21", "00", "12"])
    assert d.words == ["00", "12", "21"]
    assert d.is_valid()
    assert d.min_distance() == 2
    assert hcd.Design.from_text(d.to_text()) == d

    bad = hcd.Design(hcd.H(2, 2, 2, 1), ["00", "11", "01"])
    report = bad.verify()
    assert not report["valid"]
    assert report["violations"][0] == ("0*", 2)


def test_errors():
    with pytest.raises(hcd.MalformedDesign):
        hcd.Design(hcd.H(2, 2, 2, 1), ["00", "00"])
    with pytest.raises(hcd.ParseError):
        hcd.Design.from_text("design H n=2 q=2 w=2 t=1\n00\n00\n")
    with pytest.raises(hcd.GuardExceeded):
        hcd.search_design(hcd.H(4, 2, 3, 2), incidence_limit=10)
    with pytest.raises(ValueError):
        hcd.H(2, 2, 3, 1).validate()


def test_constructions():
    assert hcd.mds_distance2(2, 3).words == ["00", "12", "21"]
    s = hcd.Design(hcd.H(2, 2, 2, 1), ["00", "11"])
    t = hcd.construct_i(s, [hcd.mds_distance2(2, 3)])
    assert t.words == ["00", "12", "21", "33", "45", "54"]
    assert len(hcd.corollary2(1, 3)) == 72

    base = hcd.Design(hcd.A(2, 2, 1, 0), ["**"], allow_zero_t=True)
    a4 = hcd.construct_iii(base)
    a8 = hcd.construct_iii(a4)
    assert (len(a4), len(a8)) == (8, 256)
    assert a8.is_valid()
    a44 = hcd.construct_ii(a4, 2)
    assert len(a44) == a44.params.expected_cardinality()[0] == 32


def test_search_and_count():
    found = hcd.search_design(hcd.H(2, 2, 2, 1))
    assert [d.words for d in found] == [["00", "11"], ["01", "10"]]
    assert hcd.count_designs(hcd.H(3, 3, 3, 2)) == 12
    assert hcd.search_design(hcd.A(4, 2, 4, 3), max_solutions=1, min_distance=3)
    assert hcd.search_design(hcd.A(3, 2, 3, 2), min_distance=3) == []


def test_permanent_cross_check():
    assert hcd.permanent(3, 2, [[i, j, k] for i in range(2) for j in range(2) for k in range(2)]) == 4
    part = hcd.partition_into_designs(hcd.A(2, 3, 2, 1))
    assert part is not None and part.validate()[0]
    assert hcd.count_h_designs_via_permanent(part) == hcd.count_designs(hcd.H(2, 3, 2, 1)) == 6
    h_part = hcd.partition_into_designs(hcd.H(2, 3, 2, 1))
    assert hcd.count_a_designs_via_permanent(h_part) == hcd.count_designs(hcd.A(2, 3, 2, 1))
    assert hcd.Partition.from_text(h_part.to_text()).to_text() == h_part.to_text()

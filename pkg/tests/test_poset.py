import json

import pytest

from qtors import FinitePoset, PosetError, build_poset, poset_from_json, torsion_poset

from conftest import linear_quiver


def divisors_poset(n: int) -> FinitePoset:
    divs = [d for d in range(1, n + 1) if n % d == 0]
    return build_poset(divs, lambda a, b: b % a == 0)


def test_rejects_non_orders():
    with pytest.raises(PosetError):
        build_poset([1, 2], lambda a, b: True)  # not antisymmetric
    with pytest.raises(PosetError):
        build_poset([1, 2, 4], lambda a, b: b == a + a or a == b)  # not transitive


def test_divisor_lattice():
    p = divisors_poset(12)
    assert p.bottom() == 1 and p.top() == 12
    assert p.meet([4, 6]) == 2
    assert p.join([4, 6]) == 12
    ok, witness = p.is_lattice()
    assert ok and witness is None
    assert p.is_complete_lattice()
    assert sorted(p.hasse) == sorted(
        (p.elements.index(a), p.elements.index(b))
        for a, b in [(1, 2), (1, 3), (2, 4), (2, 6), (3, 6), (4, 12), (6, 12)]
    )


def test_non_lattice_witnessed():
    # two minimal and two maximal elements: meets/joins fail
    elements = ["a", "b", "x", "y"]
    order = {("a", "x"), ("a", "y"), ("b", "x"), ("b", "y")}
    p = build_poset(elements, lambda u, v: u == v or (u, v) in order)
    ok, witness = p.is_lattice()
    assert not ok
    assert set(witness) in ({"a", "b"}, {"x", "y"})
    assert p.bottom() is None and p.top() is None


def test_dual_and_interval():
    p = divisors_poset(12)
    d = p.dual()
    assert d.bottom() == 12 and d.top() == 1
    assert d.meet([4, 6]) == 12
    i = p.interval(2, 12)
    assert sorted(i.elements) == [2, 4, 6, 12]
    with pytest.raises(PosetError):
        p.interval(4, 6)


def test_isomorphism_and_duality():
    p = divisors_poset(12)
    q = divisors_poset(18)  # same shape: 1,2,3,6,9,18 vs 1,2,3,4,6,12
    assert p.is_isomorphic(q)
    assert p.is_dual_isomorphic(q)  # divisor lattices are self-dual
    chain = build_poset([0, 1, 2], lambda a, b: a <= b)
    assert not p.is_isomorphic(chain)
    iso = p.find_isomorphism(q)
    assert iso is not None
    for a in p.elements:
        for b in p.elements:
            assert p.leq(a, b) == q.leq(iso[a], iso[b])


def test_export_json_roundtrip():
    p = divisors_poset(12)
    text = p.export_json()
    back = poset_from_json(text)
    assert back.is_isomorphic(p)
    assert json.loads(text)["hasse"] == sorted(json.loads(text)["hasse"])


def test_export_dot_shape():
    p = build_poset([0, 1], lambda a, b: a <= b)
    dot = p.export_dot()
    assert dot.startswith("digraph hasse {")
    assert "n0 -> n1;" in dot
    assert dot.count("->") == 1


def test_torsion_poset_smallest_cases():
    p1 = torsion_poset(linear_quiver(1))
    assert len(p1.elements) == 2
    p2 = torsion_poset(linear_quiver(2))
    assert len(p2.elements) == 5
    assert p2.is_complete_lattice()
    assert p2.bottom() == frozenset()

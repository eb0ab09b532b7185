import pytest

from qtors import (
    Quiver,
    QuiverError,
    QuiverSyntaxError,
    classify,
    classify_by_shape,
    find_witness_subquiver,
    full_subquiver,
    opposite,
    parse_quiver,
    theorem_main_decision,
    tits_form,
    tits_matrix,
    triple_quiver,
)

from conftest import linear_quiver, star_quiver


class TestConstruction:
    def test_rejects_loops_cycles_and_bad_arrows(self):
        with pytest.raises(QuiverError):
            Quiver(2, ((1, 1),))
        with pytest.raises(QuiverError):
            Quiver(2, ((1, 2), (2, 1)))
        with pytest.raises(QuiverError):
            Quiver(2, ((1, 3),))
        with pytest.raises(QuiverError):
            Quiver(0, ())

    def test_topological_order_sources_first(self):
        q = Quiver(3, ((2, 1), (3, 1)))
        order = q.topological_order()
        assert order is not None
        assert order.index(2) < order.index(1)
        assert order.index(3) < order.index(1)

    def test_sinks_sources_connectivity(self):
        q = linear_quiver(3)
        assert q.is_source(1) and q.is_sink(3)
        assert not q.is_sink(1)
        assert q.is_connected()
        assert not Quiver(3, ((1, 2),)).is_connected()


class TestDsl:
    def test_roundtrip(self):
        q = Quiver(3, ((1, 2), (1, 2), (2, 3)))
        assert parse_quiver(q.to_dsl()) == q

    def test_comments_and_multiplicity(self):
        q = parse_quiver("# a comment\nvertices 2\narrow 1 2 *3\n")
        assert q == Quiver(2, ((1, 2),) * 3)

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "arrow 1 2",
            "vertices x",
            "vertices 2\narrow 1 2 *0",
            "vertices 2\narrow 1 3",
            "vertices 2\narrow 1 1",
            "vertices 2\nedge 1 2",
        ],
    )
    def test_syntax_errors(self, text):
        with pytest.raises(QuiverSyntaxError):
            parse_quiver(text)


DYNKIN = [
    (Quiver(1, ()), "A1"),
    (linear_quiver(4), "A4"),
    (Quiver(3, ((2, 1), (2, 3))), "A3"),
    (star_quiver(3), "D4"),
    (Quiver(6, ((1, 2), (2, 3), (3, 4), (4, 5), (6, 3))), "E6"),
]

EXTENDED = [
    Quiver(2, ((1, 2), (1, 2))),  # Kronecker
    Quiver(3, ((1, 2), (2, 3), (1, 3))),  # acyclic 3-cycle
    Quiver(4, ((1, 2), (2, 3), (3, 4), (1, 4))),  # acyclic 4-cycle
    star_quiver(4),  # 4-leaf star
]

WILD = [
    Quiver(2, ((1, 2),) * 3),
    triple_quiver(2, 1, 0),
    Quiver(3, ((1, 2), (1, 3), (1, 3))),
    Quiver(4, ((1, 2), (1, 3), (1, 4), (1, 4), (1, 4))),
]


class TestClassification:
    @pytest.mark.parametrize("q,label", DYNKIN)
    def test_dynkin(self, q, label):
        cls = classify(q)
        assert cls.tag == "Dynkin"
        assert cls.type_name == label

    @pytest.mark.parametrize("q", EXTENDED)
    def test_extended_dynkin(self, q):
        assert classify(q).tag == "ExtendedDynkin"

    @pytest.mark.parametrize("q", WILD)
    def test_wild(self, q):
        assert classify(q).tag == "Wild"

    @pytest.mark.parametrize("q", [q for q, _ in DYNKIN] + EXTENDED + WILD)
    def test_shape_and_form_agree(self, q):
        assert classify_by_shape(q).tag == classify(q).tag

    @pytest.mark.parametrize("q", [q for q, _ in DYNKIN] + EXTENDED + WILD)
    def test_orientation_independent(self, q):
        assert classify(opposite(q)).tag == classify(q).tag


class TestTitsForm:
    def test_matrix_matches_form(self):
        for q in [linear_quiver(3), star_quiver(3), triple_quiver(2, 1, 1)]:
            b = tits_matrix(q)
            for x in [[1] * q.n, list(range(1, q.n + 1)), [0, 1] * q.n][:3]:
                x = x[: q.n]
                quad = sum(
                    b[i, j] * x[i] * x[j] for i in range(q.n) for j in range(q.n)
                )
                assert quad == 2 * tits_form(q, x)

    def test_dynkin_form_positive_on_roots(self):
        q = linear_quiver(3)
        assert tits_form(q, [1, 1, 1]) == 1
        assert tits_form(q, [0, 1, 0]) == 1

    def test_extended_null_vector(self):
        q = Quiver(2, ((1, 2), (1, 2)))
        assert tits_form(q, [1, 1]) == 0


class TestSubquiversAndDecision:
    def test_full_subquiver_relabels(self):
        q = Quiver(4, ((1, 2), (2, 3), (3, 4)))
        sub, vmap = full_subquiver(q, {2, 3})
        assert sub.n == 2
        assert sub.arrows == ((vmap[2], vmap[3]),)

    def test_witness_none_for_dynkin(self):
        assert find_witness_subquiver(linear_quiver(4)) is None
        assert find_witness_subquiver(Quiver(2, ((1, 2),) * 5)) is None

    def test_witness_is_minimal_non_dynkin(self):
        q = Quiver(4, ((1, 2), (2, 3), (1, 3), (3, 4)))
        vs, cls = find_witness_subquiver(q)
        assert vs == frozenset({1, 2, 3})
        assert cls.tag == "ExtendedDynkin"

    def test_decision_positive(self):
        for q, _ in DYNKIN:
            verdict, cert = theorem_main_decision(q)
            assert verdict and cert["reason"] == "Dynkin"
        verdict, cert = theorem_main_decision(Quiver(2, ((1, 2),) * 4))
        assert verdict and cert["reason"] == "at most 2 vertices"

    def test_decision_negative_with_witness(self):
        verdict, cert = theorem_main_decision(triple_quiver(2, 1, 0))
        assert not verdict
        assert cert["reason"] == "witness subquiver"
        sub, _ = full_subquiver(triple_quiver(2, 1, 0), set(cert["vertices"]))
        assert classify(sub).tag in ("ExtendedDynkin", "Wild")

    def test_decision_requires_connected(self):
        with pytest.raises(QuiverError):
            theorem_main_decision(Quiver(3, ((1, 2),)))

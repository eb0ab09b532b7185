"""Cartan matrix, Coxeter matrix, Euler form and the Coxeter action on
dimension vectors for the path algebra of an acyclic quiver."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .linalg import Matrix
from .quiver import Quiver, QuiverError


class FormsContext:
    """Caches the Cartan matrix C, its inverse, and the Coxeter matrix
    Phi = -C^t * C^{-1} for one quiver.  All entries are exact."""

    def __init__(self, q: Quiver):
        if q.topological_order() is None:
            raise QuiverError("forms require an acyclic quiver")
        self.quiver = q
        self.cartan = cartan_matrix(q)
        self.cartan_inv = self.cartan.inverse()
        self.coxeter = (-self.cartan.transpose()) * self.cartan_inv
        self.coxeter_inv = self.coxeter.inverse()

    def euler_form(self, x: list[int], y: list[int]) -> int:
        """<x, y> = x^t * (C^{-1})^t * y; equals dim Hom - dim Ext^1 on
        dimension vectors."""
        if len(x) != self.quiver.n or len(y) != self.quiver.n:
            raise ValueError("dimension vector length mismatch")
        cinv_t = self.cartan_inv.transpose()
        mid = cinv_t.apply(y)
        val = sum(Fraction(xi) * mi for xi, mi in zip(x, mid))
        assert val.denominator == 1
        return int(val)

    def tau_dimvec(self, d: list[int]) -> list[int]:
        """Phi * d; equals dimvec of the AR translate for indecomposable
        non-projectives.  Entries may be negative (projective detection)."""
        return _int_vector(self.coxeter.apply(d))

    def tau_inverse_dimvec(self, d: list[int]) -> list[int]:
        return _int_vector(self.coxeter_inv.apply(d))


def _int_vector(v: list[Fraction]) -> list[int]:
    assert all(x.denominator == 1 for x in v)
    return [int(x) for x in v]


@lru_cache(maxsize=None)
def forms_context(q: Quiver) -> FormsContext:
    return FormsContext(q)


def cartan_matrix(q: Quiver) -> Matrix:
    """Entry (i, j) counts directed paths from j to i; computed as
    (I - N)^{-1} for the arrow-count matrix N, which is nilpotent since the
    quiver is acyclic."""
    if q.topological_order() is None:
        raise QuiverError("Cartan matrix requires an acyclic quiver")
    n = q.n
    data = [[0] * n for _ in range(n)]
    for i in range(n):
        data[i][i] = 1
    for s, t in q.arrows:
        data[t - 1][s - 1] -= 1
    return Matrix(n, n, data).inverse()


def coxeter_matrix(q: Quiver) -> Matrix:
    return forms_context(q).coxeter


def euler_form(q: Quiver, x: list[int], y: list[int]) -> int:
    return forms_context(q).euler_form(x, y)


def tau_dimvec(q: Quiver, d: list[int]) -> list[int]:
    return forms_context(q).tau_dimvec(d)


def tau_inverse_dimvec(q: Quiver, d: list[int]) -> list[int]:
    return forms_context(q).tau_inverse_dimvec(d)


def triple_quiver(a: int, b: int, c: int) -> Quiver:
    """The three-vertex quiver with a arrows 1->2, b arrows 2->3 and c
    arrows 1->3."""
    arrows = [(1, 2)] * a + [(2, 3)] * b + [(1, 3)] * c
    return Quiver(3, tuple(arrows))


def wild_triple_euler_value(a: int, b: int, c: int) -> int:
    """Closed form for <dim tau(M), dim M> on the (a, b, c) triple quiver,
    M the extended projective with dimension vector (1, a, 0):
    -1 - a^2(a^2 b^2 - 2b^2 - 1) - abc(2a^2 - 3) - c^2(a^2 - 1)."""
    return (
        -1
        - a * a * (a * a * b * b - 2 * b * b - 1)
        - a * b * c * (2 * a * a - 3)
        - c * c * (a * a - 1)
    )

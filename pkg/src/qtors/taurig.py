"""Support tau-tilting pairs for Dynkin quivers and the resulting finite
torsion-class model: enumeration (two independent strategies), mutation
neighborhoods, Fac-classes, perpendicular categories and meet/join."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .quiver import Quiver, QuiverError, classify
from .rep import (
    Rep,
    ar_translate,
    direct_sum,
    exists_surjection,
    ext1_via_presentation,
    extension_realize,
    gen_contains,
    hom_dim,
    projective_rep,
    projective_presentation,
)

# A decorated summand is ("mod", catalog index) for a module summand or
# ("proj", vertex) for a shifted projective.
Summand = tuple[str, int]
SttPair = frozenset[Summand]
TorsionClassModel = frozenset[int]


class Catalog:
    """Fixed list of the indecomposables of a Dynkin quiver together with
    the Hom/tau data every torsion-class computation needs."""

    def __init__(self, q: Quiver):
        from .rep import enumerate_indecomposables

        if classify(q).tag != "Dynkin":
            raise QuiverError("catalog requires a Dynkin quiver")
        self.quiver = q
        self.modules: list[Rep] = enumerate_indecomposables(q)
        self.tau = [ar_translate(m) for m in self.modules]
        self.projectives = [projective_rep(q, v) for v in range(1, q.n + 1)]
        self._hom: dict[tuple[int, int], int] = {}
        self._proj_hom: dict[tuple[int, int], int] = {}

    def size(self) -> int:
        return len(self.modules)

    def hom(self, i: int, j: int) -> int:
        if (i, j) not in self._hom:
            self._hom[i, j] = hom_dim(self.modules[i], self.modules[j])
        return self._hom[i, j]

    def hom_from_projective(self, v: int, j: int) -> int:
        if (v, j) not in self._proj_hom:
            self._proj_hom[v, j] = hom_dim(self.projectives[v - 1], self.modules[j])
        return self._proj_hom[v, j]

    def index_of_dims(self, dims: tuple[int, ...]) -> int:
        for i, m in enumerate(self.modules):
            if m.dims == dims:
                return i
        raise KeyError(f"no catalog module with dims {dims}")

    def summands(self) -> list[Summand]:
        """All decorated summands: tau-rigid modules plus shifted
        projectives, in canonical order."""
        mods = [
            ("mod", i)
            for i in range(self.size())
            if hom_dim(self.modules[i], self.tau[i]) == 0
        ]
        projs = [("proj", v) for v in range(1, self.quiver.n + 1)]
        return mods + projs


@lru_cache(maxsize=None)
def catalog(q: Quiver) -> Catalog:
    return Catalog(q)


def is_compatible(cat: Catalog, u: Summand, v: Summand) -> bool:
    """tau-rigidity of the direct sum: module/module needs Hom into each
    other's translate to vanish; a shifted projective at i needs the module
    unsupported at i; shifted projectives never interfere."""
    if u[0] == "proj" and v[0] == "proj":
        return True
    if u[0] == "proj":
        u, v = v, u
    if v[0] == "proj":
        return cat.hom_from_projective(v[1], u[1]) == 0
    i, j = u[1], v[1]
    return (
        hom_dim(cat.modules[i], cat.tau[j]) == 0
        and hom_dim(cat.modules[j], cat.tau[i]) == 0
    )


def _pairwise_compatible(cat: Catalog, items: list[Summand]) -> bool:
    return all(
        is_compatible(cat, items[i], items[j])
        for i in range(len(items))
        for j in range(i, len(items))
    )


def enumerate_stt_exhaustive(q: Quiver) -> set[SttPair]:
    """All size-n pairwise-compatible sets of decorated summands, found by
    brute force over the compatibility graph."""
    from itertools import combinations

    cat = catalog(q)
    all_summands = cat.summands()
    ok = [u for u in all_summands if is_compatible(cat, u, u)]
    pairs = set()
    for combo in combinations(ok, q.n):
        if _pairwise_compatible(cat, list(combo)):
            pairs.add(frozenset(combo))
    return pairs


def mutations(q: Quiver, p: SttPair) -> list[SttPair]:
    """The n neighbors of a pair: each summand has a unique alternative
    completion of the remaining n-1 summands."""
    cat = catalog(q)
    all_summands = [u for u in cat.summands() if is_compatible(cat, u, u)]
    out = []
    for u in sorted(p):
        rest = [w for w in p if w != u]
        completions = [
            w
            for w in all_summands
            if w != u
            and w not in p
            and all(is_compatible(cat, w, r) for r in rest)
            and is_compatible(cat, w, w)
        ]
        assert len(completions) == 1, (
            f"expected a unique exchange partner, got {len(completions)}"
        )
        out.append(frozenset(rest + [completions[0]]))
    return out


def enumerate_stt_mutation(q: Quiver) -> set[SttPair]:
    """Breadth-first mutation walk from the all-projectives pair."""
    cat = catalog(q)
    start = frozenset(
        ("mod", cat.index_of_dims(projective_rep(q, v).dims))
        for v in range(1, q.n + 1)
    )
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for m in mutations(q, p):
                if m not in seen:
                    seen.add(m)
                    nxt.append(m)
        frontier = nxt
    return seen


def enumerate_stt(q: Quiver) -> list[SttPair]:
    """All basic support tau-tilting pairs of a Dynkin quiver; the
    exhaustive search and the mutation walk must agree."""
    exhaustive = enumerate_stt_exhaustive(q)
    walked = enumerate_stt_mutation(q)
    assert exhaustive == walked, "enumeration strategies disagree"
    return sorted(exhaustive, key=_pair_sort_key)


def _pair_sort_key(p: SttPair):
    return sorted(p)


def pair_module(cat: Catalog, p: SttPair) -> Rep | None:
    """Direct sum of the module summands, or None for the all-shifted pair."""
    mods = [cat.modules[i] for kind, i in sorted(p) if kind == "mod"]
    return direct_sum(mods) if mods else None


def fac_class(q: Quiver, p: SttPair) -> TorsionClassModel:
    """Torsion class Fac(M) of the pair, as the set of catalog indices it
    generates."""
    cat = catalog(q)
    m = pair_module(cat, p)
    if m is None:
        return frozenset()
    return frozenset(
        i for i in range(cat.size()) if gen_contains(m, cat.modules[i])
    )


def tc_perp(q: Quiver, t: TorsionClassModel) -> frozenset[int]:
    """Right perpendicular: catalog members receiving no nonzero map from t."""
    cat = catalog(q)
    return frozenset(
        x
        for x in range(cat.size())
        if all(cat.hom(m, x) == 0 for m in t)
    )


def tc_left_perp(q: Quiver, f: frozenset[int]) -> TorsionClassModel:
    cat = catalog(q)
    return frozenset(
        x
        for x in range(cat.size())
        if all(cat.hom(x, m) == 0 for m in f)
    )


def tc_meet(q: Quiver, ts: list[TorsionClassModel]) -> TorsionClassModel:
    out = frozenset(range(catalog(q).size()))
    for t in ts:
        out &= t
    return out


def tc_join(q: Quiver, ts: list[TorsionClassModel]) -> TorsionClassModel:
    inter = frozenset(range(catalog(q).size()))
    for t in ts:
        inter &= tc_perp(q, t)
    return tc_left_perp(q, inter)


@dataclass
class SpotcheckReport:
    quotient_violations: list[tuple[int, int]] = field(default_factory=list)
    extension_violations: list[tuple[int, int]] = field(default_factory=list)

    def ok(self) -> bool:
        return not self.quotient_violations and not self.extension_violations


def torsion_axiom_spotcheck(
    q: Quiver,
    t: TorsionClassModel,
    generator: Rep | None,
    surjection_table: dict[tuple[int, int], bool] | None = None,
) -> SpotcheckReport:
    """Closure checks for a finite torsion-class model: every catalog
    quotient of a member is a member, and every extension middle term of
    two members is generated by the class generator."""
    cat = catalog(q)
    report = SpotcheckReport()
    for x in sorted(t):
        for y in range(cat.size()):
            if y in t:
                continue
            if surjection_table is not None:
                surj = surjection_table[x, y]
            else:
                surj = exists_surjection(cat.modules[x], cat.modules[y])
            if surj:
                report.quotient_violations.append((x, y))
    if generator is not None:
        for zi in sorted(t):
            z = cat.modules[zi]
            pres = _presentation(cat, zi)
            for xi in sorted(t):
                x = cat.modules[xi]
                _, cocycles = _ext_cocycles(cat, xi, zi, pres)
                for coc in cocycles:
                    e, _, _ = extension_realize(x, z, coc, pres)
                    if not gen_contains(generator, e):
                        report.extension_violations.append((zi, xi))
                        break
    return report


def _presentation(cat: Catalog, zi: int):
    cache = cat.__dict__.setdefault("_pres_cache", {})
    if zi not in cache:
        cache[zi] = projective_presentation(cat.modules[zi])
    return cache[zi]


def _ext_cocycles(cat: Catalog, xi: int, zi: int, pres):
    key = ("ext", xi, zi)
    cache = cat.__dict__.setdefault("_ext_cache", {})
    if key not in cache:
        from .rep import ExtGroup

        ext = ExtGroup(cat.modules[xi], cat.modules[zi], pres)
        cache[key] = (ext.dimension, ext.cocycles)
    return cache[key]


def surjection_table(q: Quiver) -> dict[tuple[int, int], bool]:
    """exists_surjection for every ordered pair of catalog members, computed
    once and shared by all spot-checks."""
    cat = catalog(q)
    table = {}
    for x in range(cat.size()):
        for y in range(cat.size()):
            table[x, y] = exists_surjection(cat.modules[x], cat.modules[y])
    return table


def stt_pairs_to_json(q: Quiver, pairs: list[SttPair]) -> str:
    cat = catalog(q)
    out = []
    for p in pairs:
        entry = {
            "modules": [list(cat.modules[i].dims) for k, i in sorted(p) if k == "mod"],
            "shifted_projectives": [i for k, i in sorted(p) if k == "proj"],
        }
        out.append(entry)
    return json.dumps({"count": len(pairs), "pairs": out}, indent=2)

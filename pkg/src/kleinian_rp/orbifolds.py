"""Orbifold-level data for class D groups.

Covers the ambient space of each orbifold family, classification rules for
fat vertices and cusp edges of singular-set graphs, the list of finite-volume
(compact and cusped) orbifolds, and the Gram-matrix hyperbolicity test for
the R[n, m; q] family.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .discreteness import FamilyInstance, generate_family
from .presentations import GroupSpec
from .trace_core import BARINF, INF, ExtExp, UPoint

DEFAULT_CENSUS_BOUND = 50


# ---------------------------------------------------------------------------
# Ambient spaces


@dataclass(frozen=True)
class AmbientSpace:
    kind: str  # "S3" | "RP3" | "SeifertS" | "S2xS1"
    n: int | None = None

    def __post_init__(self):
        if self.kind == "SeifertS" and self.n not in (2, 3):
            raise ValueError("only the Seifert spaces S(2) and S(3) occur")

    def __str__(self):
        return f"S({self.n})" if self.kind == "SeifertS" else self.kind


_AMBIENT = {
    "GT": AmbientSpace("S3"),
    "PH": AmbientSpace("S3"),
    "H": AmbientSpace("S3"),
    "Tet": AmbientSpace("S3"),
    "Tet6": AmbientSpace("S3"),
    "P": AmbientSpace("S3"),
    "S2": AmbientSpace("SeifertS", 2),
    "GTet2": AmbientSpace("SeifertS", 2),
    "S3": AmbientSpace("SeifertS", 3),
    "GTet1": AmbientSpace("S2xS1"),
    "R": AmbientSpace("RP3"),
}


def ambient_space(schema: str) -> AmbientSpace:
    try:
        return _AMBIENT[schema]
    except KeyError:
        raise ValueError(f"unknown schema {schema!r}") from None


# ---------------------------------------------------------------------------
# Fat vertices and cusps


@dataclass(frozen=True)
class VertexClass:
    kind: str  # "finite" | "rigid_cusp" | "puncture_22inf" | "boundary_removed"
    local_group: str | None = None
    triangle: tuple[int, int, int] | None = None

    def to_json(self):
        out = {"kind": self.kind}
        if self.local_group:
            out["local_group"] = self.local_group
        if self.triangle:
            out["triangle"] = list(self.triangle)
        return out


FINITE = "finite"
RIGID_CUSP = "rigid_cusp"
PUNCTURE_22INF = "puncture_22inf"
BOUNDARY_REMOVED = "boundary_removed"


def _local_group(a: int, b: int, c: int) -> str:
    # a <= b <= c, 1/a + 1/b + 1/c > 1
    if (a, b) == (2, 2):
        return f"D{2 * c}"
    return {(2, 3, 3): "A4", (2, 3, 4): "S4", (2, 3, 5): "A5"}[(a, b, c)]


def classify_fat_vertex(p, q, r) -> VertexClass:
    """What a fat vertex with incident labels p, q, r stands for."""
    labels = sorted(ExtExp.coerce(x) for x in (p, q, r))
    if all(x.is_finite for x in labels):
        a, b, c = (x.k for x in labels)
        total = Fraction(1, a) + Fraction(1, b) + Fraction(1, c)
        if total > 1:
            return VertexClass(FINITE, local_group=_local_group(a, b, c))
        if total == 1:
            return VertexClass(RIGID_CUSP, triangle=(a, b, c))
        return VertexClass(BOUNDARY_REMOVED)
    if labels[0] == 2 and labels[1] == 2 and labels[2] == INF:
        return VertexClass(PUNCTURE_22INF)
    return VertexClass(BOUNDARY_REMOVED)


ANNULUS = "annulus"
DISC_TWO_CONE2 = "disc_two_cone2"
TORUS = "torus"
PILLOW = "pillow"


class ClassDCuspViolation(ValueError):
    """A torus or pillow cusp, which never occurs for class D orbifolds."""


def classify_cusp_edge(label, endpoints: tuple[VertexClass, ...] = (),
                       class_d: bool = False) -> str:
    """Cross-section of the cusp carried by an ``inf`` edge.

    ``endpoints`` are the classes of the edge's two fat end vertices, or empty
    for a closed ``inf`` circle.  Each (2, 2, inf) end contributes two order-2
    cone points to the cross-section; a removed end contributes a boundary
    circle.  With ``class_d`` set, torus and pillow cross-sections raise.
    """
    if ExtExp.coerce(label) != INF:
        raise ValueError("only edges labelled inf carry cusps")
    if not endpoints:
        section = TORUS
    else:
        if len(endpoints) != 2:
            raise ValueError("a cusp edge has two ends or none")
        punctures = sum(e.kind == PUNCTURE_22INF for e in endpoints)
        section = (ANNULUS, DISC_TWO_CONE2, PILLOW)[punctures]
    if class_d and section in (TORUS, PILLOW):
        raise ClassDCuspViolation(f"{section} cusp cannot occur in class D")
    return section


@dataclass(frozen=True)
class GraphEdge:
    a: object | None
    b: object | None
    label: ExtExp
    fat: bool = False


@dataclass(frozen=True)
class SingularGraph:
    """A labelled 3-regular graph with fat vertices and fat edges."""

    vertices: tuple[tuple[object, bool], ...]
    edges: tuple[GraphEdge, ...]

    def __post_init__(self):
        fat = dict(self.vertices)
        if len(fat) != len(self.vertices):
            raise ValueError("duplicate vertex id")
        degree = {v: 0 for v in fat}
        for e in self.edges:
            if (e.a is None) != (e.b is None):
                raise ValueError("an edge needs two endpoints, or none for a circle")
            for end in (e.a, e.b):
                if end is None:
                    continue
                if end not in fat:
                    raise ValueError(f"edge endpoint {end!r} is not a vertex")
                degree[end] += 1
            if e.fat and e.a is not None and not (fat[e.a] and fat[e.b]):
                raise ValueError("the endpoints of a fat edge must be fat vertices")
        bad = [v for v, d in degree.items() if d != 3]
        if bad:
            raise ValueError(f"graph is not 3-regular at {bad}")
        for v, is_fat in self.vertices:
            if not is_fat:
                total = sum(x.reciprocal() for x in self.labels_at(v))
                if not total > 1:
                    raise ValueError(f"non-fat vertex {v!r} has 1/p+1/q+1/r <= 1")

    def labels_at(self, v) -> list[ExtExp]:
        out = []
        for e in self.edges:
            out += [e.label] * ((e.a == v) + (e.b == v))
        return out

    @classmethod
    def from_json(cls, data) -> "SingularGraph":
        if isinstance(data, str):
            data = json.loads(data)
        vertices = tuple((v["id"], bool(v.get("fat", False))) for v in data["vertices"])
        edges = tuple(GraphEdge(e.get("a"), e.get("b"), _parse_label(e["label"]),
                                bool(e.get("fat", False))) for e in data["edges"])
        return cls(vertices, edges)

    def analyze(self, class_d: bool = False) -> dict:
        """Classes of fat vertices and cross-sections of cusp edges."""
        classes = {v: classify_fat_vertex(*self.labels_at(v))
                   for v, is_fat in self.vertices if is_fat}
        cusps = []
        for i, e in enumerate(self.edges):
            if e.label == INF:
                ends = () if e.a is None else (classes[e.a], classes[e.b])
                cusps.append((i, classify_cusp_edge(e.label, ends, class_d)))
        removed = [i for i, e in enumerate(self.edges) if e.label == BARINF]
        return {"vertices": classes, "cusps": cusps, "removed_edges": removed}


def _parse_label(label) -> ExtExp:
    if isinstance(label, int):
        return ExtExp.fin(label)
    return ExtExp.from_tag(str(label))


# ---------------------------------------------------------------------------
# Finite-volume census


@dataclass(frozen=True)
class CensusEntry:
    group: GroupSpec
    compact: bool

    def to_json(self):
        return {"schema": self.group.schema,
                "exponents": [e.tag for e in self.group.exponents],
                "compact": self.compact}

    def __str__(self):
        return f"{self.group} ({'compact' if self.compact else 'cusped'})"


def _odd(lo: int, hi: int) -> range:
    return range(lo + (lo % 2 == 0), hi + 1, 2)


def _even(lo: int, hi: int) -> range:
    return range(lo + (lo % 2), hi + 1, 2)


def _compact(bound: int) -> Iterator[tuple]:
    for m in (3, 4, 5):
        yield "PH", (4, m, 3)
    yield "H", (2, 2, 3, 5)
    yield "H", (2, 2, 5, 3)
    yield "H", (2, 3, 5, 2)
    for q3 in (4, 5):
        yield "Tet6", (q3,)
    yield "Tet", (5, 4, 3)
    yield "Tet", (5, 5, 3)
    yield "Tet", (3, 3, 5)
    for n in _even(8, bound):
        for q in (3, 5):
            yield "P", (n, 3, q)
    for n in _even(4, bound):
        yield "P", (n, 5, 3)
    for n in _odd(7, bound):
        for q in (3, 4, 5):
            yield "GTet2", (n, 3, q)
    for n in _odd(5, bound):
        yield "GTet2", (n, 5, 3)
    for n in _odd(3, bound):
        for m in _odd(3, bound):
            if Fraction(1, n) + Fraction(1, m) < Fraction(1, 2):
                yield "GTet2", (n, m, 2)
    for n in _odd(5, bound):
        yield "S3", (n, 2, 2)
    yield "S3", (5, 2, 3)
    yield "S3", (5, 3, 2)
    yield "S3", (3, 4, 2)
    yield "S3", (3, 5, 2)
    for n in range(7, bound + 1):
        yield "GTet1", (n, 3, 2)


def _cusped(bound: int) -> Iterator[tuple]:
    yield "GT", (3, 3, 3)
    yield "GT", (4, 4, 2)
    yield "GT", (4, 3, 2)
    yield "PH", (4, 6, 3)
    for m in range(2, 7):
        yield "PH", (6, m, 3)
    for m in range(3, 7):
        yield "Tet", (6, m, 3)
    yield "S2", (4, 3, 2)
    yield "S2", (4, 4, 2)
    for n in _odd(7, bound):
        yield "GTet2", (n, 3, 6)
    yield "S3", (3, 6, 2)
    for n in _even(8, bound):
        yield "GTet1", (n, 3, 3)


def finite_volume_census(kind: str = "all", schema: str | None = None,
                         bound: int = DEFAULT_CENSUS_BOUND) -> list[CensusEntry]:
    """All finite-volume orbifolds of class D, infinite families cut at ``bound``.

    ``kind`` is ``"compact"``, ``"cusped"`` or ``"all"``.
    """
    if kind not in ("compact", "cusped", "all"):
        raise ValueError("kind must be compact, cusped or all")
    sources = []
    if kind in ("compact", "all"):
        sources.append((_compact(bound), True))
    if kind in ("cusped", "all"):
        sources.append((_cusped(bound), False))
    out, seen = [], set()
    for it, compact in sources:
        for s, exps in it:
            if schema is not None and s != schema:
                continue
            entry = CensusEntry(GroupSpec(s, exps), compact)
            if entry not in seen:
                seen.add(entry)
                out.append(entry)
    return out


def census_instance(entry: CensusEntry) -> FamilyInstance:
    """A family instance generating the census group, for cross-checks."""
    s = entry.group.schema
    e = [x.k for x in entry.group.exponents]
    A = UPoint.angle
    if s == "GT":
        return generate_family(1, {}, {"u": A(e[0]), "v": A(e[1]), "w": A(2 * e[2])})
    if s == "Tet":
        return generate_family(2, {}, {"u": A(e[0]), "v": A(e[1]), "w": A(e[2])})
    if s == "Tet6":
        return generate_family(9, {"m": e[0]})
    if s == "H":
        key = (e[0], tuple(sorted(e[1:3])), e[3])
        if key == (2, (2, 3), 5):
            return generate_family(13)
        if key == (2, (2, 5), 3):
            return generate_family(11, variant="+")
        if key[0] == 2 and key[1][0] == 3 and key[2] == 2:
            return generate_family(10, {"n": key[1][1]})
        if key[:2] == (2, (3, 3)):
            return generate_family(15, {"q": 2 * e[3]})
    if s == "PH":
        return generate_family(17, {"n": e[0]}, {"u": A(2 * e[1]), "v": A(e[2])})
    if s == "S2":
        return generate_family(18, {"n": e[0]}, {"u": A(2 * e[1]), "v": A(2 * e[2])})
    if s == "P":
        return generate_family(19, {"n": e[0]}, {"u": A(e[1]), "v": A(e[2])})
    if s == "GTet1":
        if e[0] % 2 == 1:
            return generate_family(22, {"n": e[0]})
        return generate_family(20, {"n": e[0]}, {"u": A(e[1]), "v": A(2 * e[2])})
    if s == "S3":
        return generate_family(21, {"n": e[0]}, {"u": A(2 * e[1]), "v": A(e[2])})
    if s == "GTet2":
        return generate_family(23, {"n": e[0]}, {"u": A(e[1]), "v": A(e[2])})
    if s == "R":
        return generate_family(16, {"n": e[0]})
    raise ValueError(f"no family generates {entry.group}")


# ---------------------------------------------------------------------------
# Gram matrix of R[n, m; q]


def gram_matrix(n: int, m: int, q: int) -> np.ndarray:
    if min(n, m, q) < 2:
        raise ValueError("n, m, q must be at least 2")
    a = -math.cos(math.pi / q)
    b = -math.cos(math.pi / (2 * m))
    c = -math.cos(math.pi / n)
    return np.array([[1, a, 0, b],
                     [a, 1, b, 0],
                     [0, b, 1, c],
                     [b, 0, c, 1]], dtype=float)


def gram_det(n: int, m: int, q: int) -> float:
    return float(np.linalg.det(gram_matrix(n, m, q)))


GRAM_TOL = 1e-12


def is_hyperbolic(n: int, m: int, q: int, tol: float = GRAM_TOL) -> bool:
    """Q(R[n, m; q]) is hyperbolic when the Gram determinant is negative.

    Determinants within ``tol`` of zero (e.g. R[3, 2; 2], exactly 0) count as zero.
    """
    return gram_det(n, m, q) < -tol

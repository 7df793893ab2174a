"""Explicit SL(2, C) matrix pairs with prescribed trace parameters.

Realizations use the normal form

    F = [[s, 1], [0, 1/s]],    G = [[t, 0], [r, 1/t]],

for which ``tr[F, G] - 2 = r^2 + r (s - 1/s)(t - 1/t)``.  Given (beta, beta',
gamma) one picks s, t with (s - 1/s)^2 = beta, (t - 1/t)^2 = beta' and solves
the quadratic for r.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .presentations import Relator, Word, relator_words_in_fg
from .trace_core import (
    BARINF,
    DEFAULT_TOL,
    INF,
    Elliptic,
    Parabolic,
    Parameters,
    classify_element,
)

DET_TOL = 1e-12
RELATOR_TOL = 1e-8


class NoCommutator(ValueError):
    """[F, G] = +-I, so the commutator has no well-defined half root."""


class UnboundSymbol(KeyError):
    pass


@dataclass(frozen=True)
class Mat2C:
    a: complex
    b: complex
    c: complex
    d: complex

    @classmethod
    def identity(cls) -> "Mat2C":
        return cls(1, 0, 0, 1)

    def __matmul__(self, o: "Mat2C") -> "Mat2C":
        return Mat2C(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                     self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def __add__(self, o: "Mat2C") -> "Mat2C":
        return Mat2C(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Mat2C") -> "Mat2C":
        return Mat2C(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self) -> "Mat2C":
        return Mat2C(-self.a, -self.b, -self.c, -self.d)

    def scale(self, k: complex) -> "Mat2C":
        return Mat2C(k * self.a, k * self.b, k * self.c, k * self.d)

    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def trace(self) -> complex:
        return self.a + self.d

    def inverse(self) -> "Mat2C":
        # adjugate; exact inverse for unit determinant
        return Mat2C(self.d, -self.b, -self.c, self.a)

    def normalized(self) -> "Mat2C":
        return self.scale(1 / cmath.sqrt(self.det()))

    def __pow__(self, k: int) -> "Mat2C":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Mat2C.identity(), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)

    def max_abs_diff(self, o: "Mat2C") -> float:
        return max(abs(x - y) for x, y in zip(self.entries(), o.entries()))

    def distance_to_pm_identity(self) -> float:
        """Entrywise max-norm distance to the nearer of +I and -I."""
        i = Mat2C.identity()
        return min(self.max_abs_diff(i), self.max_abs_diff(-i))

    def to_json(self):
        return [[z.real, z.imag] for z in map(complex, self.entries())]

    @classmethod
    def from_json(cls, data) -> "Mat2C":
        return cls(*(complex(re, im) for re, im in data))


def commutator(a: Mat2C, b: Mat2C) -> Mat2C:
    return a @ b @ a.inverse() @ b.inverse()


@dataclass(frozen=True)
class MatrixPair:
    F: Mat2C
    G: Mat2C
    params: Parameters
    reducible: bool = False

    def recomputed(self) -> tuple[complex, complex, complex]:
        """(tr^2 F - 4, tr^2 G - 4, tr[F,G] - 2) from the matrices."""
        return (self.F.trace() ** 2 - 4, self.G.trace() ** 2 - 4,
                commutator(self.F, self.G).trace() - 2)

    def max_param_error(self) -> float:
        return max(abs(x - y) for x, y in zip(self.recomputed(), self.params.as_tuple()))

    def bindings(self) -> dict[str, Mat2C]:
        return {"f": self.F, "g": self.G}

    def to_json(self):
        return {
            "F": self.F.to_json(),
            "G": self.G.to_json(),
            "params": list(self.params.as_tuple()),
            "reducible": self.reducible,
        }


def _diagonal_entry(beta: float) -> complex:
    """s with (s - 1/s)^2 = beta, principal branches.

    beta >= 0 gives s = exp(asinh(sqrt(beta)/2)); beta in [-4, 0) gives
    s = exp(i asin(sqrt(-beta)/2)); beta < -4 continues the same formula.
    """
    sigma = cmath.sqrt(beta)
    return (sigma + cmath.sqrt(sigma * sigma + 4)) / 2


def _pick_root(r1: complex, r2: complex) -> complex:
    # Im >= 0 first, then Re >= 0
    def key(r):
        im = r.imag if abs(r.imag) > 1e-15 else 0.0
        re = r.real if abs(r.real) > 1e-15 else 0.0
        return (im >= 0, re >= 0)
    return max((r1, r2), key=key)


def realize(p: Parameters) -> MatrixPair:
    """A matrix pair with parameters ``p``; unique up to conjugation when gamma != 0."""
    s = _diagonal_entry(p.beta)
    t = _diagonal_entry(p.beta_prime)
    sigma, sigma2 = s - 1 / s, t - 1 / t
    b = sigma * sigma2
    disc = cmath.sqrt(b * b + 4 * p.gamma)
    r = _pick_root((-b + disc) / 2, (-b - disc) / 2)
    F = Mat2C(s, 1, 0, 1 / s)
    G = Mat2C(t, 0, r, 1 / t)
    return MatrixPair(F, G, p, reducible=abs(p.gamma) <= DEFAULT_TOL)


def normal_form_gamma(s: complex, t: complex, r: complex) -> complex:
    """r^2 + r (s - 1/s)(t - 1/t): the commutator-trace quadratic of the normal form."""
    return r * r + r * (s - 1 / s) * (t - 1 / t)


def evaluate_word(w: Word, bindings: dict[str, Mat2C] | MatrixPair,
                  det_tol: float = DET_TOL) -> Mat2C:
    """Left-to-right product of matrix powers; renormalizes drifting determinants."""
    if isinstance(bindings, MatrixPair):
        bindings = bindings.bindings()
    result = Mat2C.identity()
    for sym, exp in w.letters:
        if sym not in bindings:
            raise UnboundSymbol(sym)
        result = result @ (bindings[sym] ** exp)
        if abs(result.det() - 1) > det_tol / 2:
            result = result.normalized()
    return result


# ---------------------------------------------------------------------------
# Relator verification


@dataclass
class RelatorCheck:
    label: str
    exponent: str
    kind: str  # "identity" | "parabolic" | "loxodromic" | "order" | "trace"
    deviation: float
    ok: bool

    def to_json(self):
        return {"label": self.label, "exponent": self.exponent, "kind": self.kind,
                "deviation": self.deviation, "ok": self.ok}


@dataclass
class RelatorReport:
    status: str  # "complete" | "partial"
    checks: list[RelatorCheck] = field(default_factory=list)

    @property
    def max_deviation(self) -> float:
        devs = [c.deviation for c in self.checks if c.kind in ("identity", "order")]
        return max(devs, default=0.0)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self):
        return {"status": self.status, "passed": self.passed,
                "max_deviation": self.max_deviation,
                "checks": [c.to_json() for c in self.checks]}


def _parabolic_deviation(m: Mat2C) -> float:
    tr = m.trace()
    return min(abs(tr - 2), abs(tr + 2))


def check_relator(rel: Relator, pair: MatrixPair, tol: float = RELATOR_TOL,
                  trace_tol: float = DEFAULT_TOL) -> RelatorCheck:
    base = evaluate_word(rel.word, pair)
    label = rel.label or str(rel.word)
    if rel.exponent is None or rel.exponent.is_finite:
        k = 1 if rel.exponent is None else rel.exponent.k
        dev = (base ** k).distance_to_pm_identity()
        return RelatorCheck(label, "1" if rel.exponent is None else rel.exponent.tag,
                            "identity", dev, dev <= tol)
    if rel.exponent == INF:
        dev = _parabolic_deviation(base)
        not_identity = base.distance_to_pm_identity() > tol
        return RelatorCheck(label, "inf", "parabolic", dev, dev <= tol and not_identity)
    # inf-bar: hyperbolic or loxodromic, i.e. tr^2 - 4 off [-4, 0]
    beta = base.trace() ** 2 - 4
    off = abs(beta.imag) > trace_tol or beta.real > trace_tol or beta.real < -4 - trace_tol
    return RelatorCheck(label, "barinf", "loxodromic", abs(beta), off)


def verify_relators(instance, tol: float = RELATOR_TOL) -> RelatorReport:
    """Realize ``instance.params`` and test every relator numerically.

    Rows without an f, g word map only get order checks on f and g and a
    recomputation of the commutator trace; the report is then ``partial``.
    """
    pair = realize(instance.params)
    rels = relator_words_in_fg(instance)
    if rels is not None:
        return RelatorReport("complete", [check_relator(r, pair, tol) for r in rels])
    checks = []
    for label, m, beta in (("f", pair.F, instance.params.beta),
                           ("g", pair.G, instance.params.beta_prime)):
        kind = classify_element(beta)
        if isinstance(kind, Elliptic):
            dev = (m ** kind.n).distance_to_pm_identity()
            checks.append(RelatorCheck(label, f"fin:{kind.n}", "order", dev, dev <= tol))
        elif isinstance(kind, Parabolic):
            dev = _parabolic_deviation(m)
            checks.append(RelatorCheck(label, "inf", "parabolic", dev, dev <= tol))
        else:
            checks.append(check_relator(Relator(Word.gen(label), BARINF, label), pair, tol))
    gamma = commutator(pair.F, pair.G).trace() - 2
    dev = abs(gamma - instance.params.gamma)
    checks.append(RelatorCheck("[f,g]", "trace", "trace", dev, dev <= tol))
    return RelatorReport("partial", checks)


# ---------------------------------------------------------------------------
# The commutator half root


@dataclass(frozen=True)
class HalfRoot:
    root: Mat2C
    candidates: tuple[Mat2C, ...]
    involution_traces: tuple[float, ...]
    unique: bool


def square_roots(K: Mat2C) -> list[Mat2C]:
    """The square roots of K in PSL(2, C), one SL representative each.

    A root of the lift K is (K + I)/sqrt(tr K + 2); a root of the other lift -K
    is (I - K)/sqrt(2 - tr K).  A lift with trace -2 has no root of this form,
    so a parabolic K has exactly one root.
    """
    i = Mat2C.identity()
    roots = []
    for lift in (K, -K):
        t = lift.trace()
        if abs(t + 2) > DET_TOL:
            roots.append((lift + i).scale(1 / cmath.sqrt(t + 2)))
    return roots


def commutator_half_root(pair: MatrixPair, tol: float = DEFAULT_TOL) -> HalfRoot:
    """The element h with h^2 = [f, g] and (hg)^2 = 1, i.e. tr(hg) = 0."""
    K = commutator(pair.F, pair.G)
    if K.distance_to_pm_identity() <= DET_TOL:
        raise NoCommutator("[F, G] is +-I")
    cands = tuple(square_roots(K))
    traces = tuple(abs((h @ pair.G).trace()) for h in cands)
    passing = [h for h, t in zip(cands, traces) if t <= tol]
    if len(passing) == 1:
        return HalfRoot(passing[0], cands, traces, True)
    best = min(range(len(cands)), key=traces.__getitem__)
    return HalfRoot(cands[best], cands, traces, False)


def gamma_sign_of_angle(phi: float) -> float:
    """gamma = -2 cos(phi) - 2 for an elliptic commutator with rotation angle phi."""
    if not 0 < phi < math.pi:
        raise ValueError("phi must lie in (0, pi)")
    return -2.0 * math.cos(phi) - 2.0


def angle_of_gamma(gamma: float) -> float:
    """Inverse of :func:`gamma_sign_of_angle` on gamma in (-4, 0)."""
    if not -4.0 < gamma < 0.0:
        raise ValueError("gamma must lie in (-4, 0)")
    return math.acos(-(gamma + 2.0) / 2.0)

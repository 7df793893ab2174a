"""Discreteness of class D groups from their trace parameters.

Every group in class D has a primitive generating pair whose parameters
(beta, gamma, beta') appear in one of 24 parametrized families.  Each family
gives the three parameters as closed formulas in integer slots (n, m, q) and
half-length slots (u, v, w), together with side conditions and the group it
generates.  The registry below is used in both directions: ``generate_family``
evaluates a family at given slot values, and ``classify`` inverts all families
to find every family instance matching a parameter triple.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .presentations import GroupSpec
from .trace_core import (
    DEFAULT_TOL,
    BoundExceeded,
    Elliptic,
    ExtExp,
    Parameters,
    UPoint,
    class_d_gate,
    classify_element,
    close,
    reduce_to_primitive,
    solve_int,
    upoint_from_cosh,
    upoint_from_cosh2,
)

DEFAULT_INT_BOUND = 200
SQRT5 = math.sqrt(5.0)


class ConditionViolated(ValueError):
    def __init__(self, row: int, condition: str, boundary: bool = False):
        self.row = row
        self.condition = condition
        self.boundary = boundary
        where = "on the boundary of" if boundary else "violates"
        super().__init__(f"row {row}: {where} condition {condition!r}")


@dataclass(frozen=True)
class SearchBounds:
    int_bound: int = DEFAULT_INT_BOUND
    tol: float = DEFAULT_TOL


# ---------------------------------------------------------------------------
# Family instances and results


@dataclass(frozen=True)
class FamilyInstance:
    row: int
    variant: str
    ints: Mapping[str, int]
    upoints: Mapping[str, UPoint]
    params: Parameters
    group: GroupSpec
    swapped: bool = False

    @property
    def label(self) -> str:
        return f"{self.row}{self.variant}"

    def key(self):
        return (self.row, self.variant, self.swapped,
                tuple(sorted(self.ints.items())),
                tuple(sorted((k, u.key()) for k, u in self.upoints.items())))

    def to_json(self):
        return {
            "row": self.row,
            "variant": self.variant,
            "swapped": self.swapped,
            "ints": dict(sorted(self.ints.items())),
            "upoints": {k: u.to_json() for k, u in sorted(self.upoints.items())},
            "params": list(self.params.as_tuple()),
            "group": str(self.group),
        }

    def __str__(self):
        data = ", ".join([f"{k}={v}" for k, v in sorted(self.ints.items())]
                         + [f"t({k})={u.t()}" for k, u in sorted(self.upoints.items())])
        swap = " (f, g swapped)" if self.swapped else ""
        return f"row {self.label}: {self.group}" + (f" [{data}]" if data else "") + swap


NOT_CLASS_D = "not_class_d"
DISCRETE = "discrete"
NOT_DISCRETE = "not_discrete"
UNRESOLVED = "unresolved"


@dataclass
class ClassificationResult:
    verdict: str
    matches: list[FamilyInstance] = field(default_factory=list)
    reason: str = ""
    reduced: Parameters | None = None

    def __post_init__(self):
        if self.verdict == DISCRETE and not self.matches:
            raise ValueError("a discrete verdict needs at least one match")

    def to_json(self):
        out = {"verdict": self.verdict, "reason": self.reason,
               "matches": [m.to_json() for m in self.matches]}
        if self.reduced is not None:
            out["reduced"] = list(self.reduced.as_tuple())
        return out


# ---------------------------------------------------------------------------
# Helpers shared by the family formulas


def _beta_n(n: int) -> float:
    return -4.0 * math.sin(math.pi / n) ** 2


def _sin(e: ExtExp) -> float:
    return math.sin(math.pi * e.reciprocal())


def _cos(e: ExtExp) -> float:
    return math.cos(math.pi * e.reciprocal())


def _n_from_beta(beta: float, tol: float, bound: int) -> int | None:
    """n with beta = -4 sin^2(pi/n)."""
    if not -4.0 <= beta < 0:
        return None
    return solve_int(beta, _beta_n, math.pi / math.asin(math.sqrt(-beta) / 2.0), tol, bound)


def _int_from_cos(c: float, scale: float, tol: float, bound: int, lo: int = 2) -> int | None:
    """k with cos(scale*pi/k) = c."""
    if not -1.0 - tol <= c <= 1.0 + tol:
        return None
    angle = math.acos(min(max(c, -1.0), 1.0))
    if angle == 0:
        return None
    return solve_int(c, lambda k: math.cos(scale * math.pi / k), scale * math.pi / angle,
                      tol, bound, lo)


# Condition values: a bool, or a float margin that must be strictly positive.
Conditions = list[tuple[str, "bool | float"]]


@dataclass(frozen=True)
class Row:
    """One family: slots, formulas, conditions and generated group."""

    row: int
    schema: str
    int_slots: tuple[str, ...]
    upoint_slots: tuple[str, ...]
    formulas: Callable[..., tuple[float, float, float]]  # -> (beta, gamma, beta')
    conditions: Callable[..., Conditions]
    exponents: Callable[..., tuple]
    invert: Callable[[Parameters, float, int], Iterable[tuple[dict, dict]]]
    variant: str = ""
    symmetric: bool = False

    @property
    def label(self) -> str:
        return f"{self.row}{self.variant}"


def _const_invert(p, tol, bound):
    yield {}, {}


def _t(u: UPoint) -> ExtExp:
    return u.t()


def _even_like(e: ExtExp) -> bool:
    """(t, 2) = 2: even, inf or inf-bar."""
    return e.gcd(2) == 2


# -- rows 1 and 2: both generators from U, commutator -4 cosh^2 w -------------

def _r12_formulas(u, v, w):
    return 4 * u.sinh2(), -4 * w.cosh2(), 4 * v.sinh2()


def _r12_conditions(u, v, w, even: bool) -> Conditions:
    tw = _t(w)
    return [
        ("t(u) >= 3", _t(u) >= 3),
        ("t(v) >= 3", _t(v) >= 3),
        ("(t(w),2) = 2" if even else "(t(w),2) = 1", _even_like(tw) if even else tw.is_odd()),
        ("cos(pi/t(w)) > sin(pi/t(u)) sin(pi/t(v))",
         _cos(tw) - _sin(_t(u)) * _sin(_t(v))),
    ]


def _r12_invert(p, tol, bound):
    u = upoint_from_cosh2(1 + p.beta / 4, tol, bound)
    v = upoint_from_cosh2(1 + p.beta_prime / 4, tol, bound)
    w = upoint_from_cosh2(-p.gamma / 4, tol, bound)
    if u and v and w:
        yield {}, {"u": u, "v": v, "w": w}


# -- row 3 -------------------------------------------------------------------

def _r3_invert(p, tol, bound):
    n = _n_from_beta(p.beta, tol, bound)
    if n is None:
        return
    u = upoint_from_cosh2((p.beta_prime + 4) / (4 * (p.beta + 4)), tol, bound)
    if u:
        yield {"n": n}, {"u": u}


# -- rows with beta = -3 and an integer read off gamma ---------------------------

def _gamma_int_invert(slot: str, scale: float, offset: float):
    """gamma = 2 cos(scale*pi/k) + offset."""
    def invert(p, tol, bound):
        k = _int_from_cos((p.gamma - offset) / 2, scale, tol, bound)
        if k is not None:
            yield {slot: k}, {}
    return invert


def _n_invert(p, tol, bound):
    n = _n_from_beta(p.beta, tol, bound)
    if n is not None:
        yield {"n": n}, {}


def _r7_invert(p, tol, bound):
    u = upoint_from_cosh2((p.beta_prime + 4) / (2 * (7 + 3 * SQRT5)), tol, bound)
    if u:
        yield {}, {"u": u}


# -- rows 17-24: beta = -4 sin^2(pi/n), gamma = 4 cosh^2 u + beta -------------

def _n_u_v_invert(solve_v):
    def invert(p, tol, bound):
        n = _n_from_beta(p.beta, tol, bound)
        if n is None or p.gamma == 0:
            return
        u = upoint_from_cosh2((p.gamma - p.beta) / 4, tol, bound)
        if u is None:
            return
        v = solve_v(p, n, tol, bound)
        if v is not None:
            yield {"n": n}, {"u": u, "v": v}
    return invert


def _tail(beta, gamma, n):
    """(2/(gamma beta)) ((gamma - beta)^2 cos(pi/n) + gamma (gamma + beta))."""
    c = math.cos(math.pi / n)
    return 2 / (gamma * beta) * ((gamma - beta) ** 2 * c + gamma * (gamma + beta))


def _v_17(p, n, tol, bound):
    return upoint_from_cosh2((p.beta_prime + 4 * p.gamma / p.beta) * p.gamma / 4, tol, bound)


def _v_19(p, n, tol, bound):
    if p.gamma == p.beta:
        return None
    x = (p.beta_prime + 4 * p.gamma / p.beta) * p.gamma / (4 * (p.gamma - p.beta))
    return upoint_from_cosh2(x, tol, bound)


def _v_21(p, n, tol, bound):
    y = (p.beta_prime + _tail(p.beta, p.gamma, n)) * p.gamma / 2 + math.cos(math.pi / n)
    return upoint_from_cosh(y, tol, bound)


def _v_23(p, n, tol, bound):
    if p.gamma == p.beta:
        return None
    y = (p.beta_prime + _tail(p.beta, p.gamma, n)) * p.gamma / (2 * (p.gamma - p.beta))
    return upoint_from_cosh(y, tol, bound)


def _r24_invert(p, tol, bound):
    n = _n_from_beta(p.beta, tol, bound)
    if n is None or p.beta == -1 or p.beta == -2:
        return
    b = p.beta
    y = ((p.beta_prime + 2 / b * (b * b + 6 * b + 4)) * (b + 1) / (2 * (b + 2) ** 2)
         + math.cos(math.pi / n))
    v = upoint_from_cosh(y, tol, bound)
    if v is not None:
        yield {"n": n}, {"v": v}


def _r17_formulas(n, u, v):
    b = _beta_n(n)
    g = 4 * u.cosh2() + b
    return b, g, 4 / g * v.cosh2() - 4 * g / b


def _r19_formulas(n, u, v):
    b = _beta_n(n)
    g = 4 * u.cosh2() + b
    return b, g, 4 * (g - b) / g * v.cosh2() - 4 * g / b


def _r21_formulas(n, u, v):
    b = _beta_n(n)
    g = 4 * u.cosh2() + b
    return b, g, 2 / g * (v.cosh() - math.cos(math.pi / n)) - _tail(b, g, n)


def _r23_formulas(n, u, v):
    b = _beta_n(n)
    g = 4 * u.cosh2() + b
    return b, g, 2 * (g - b) / g * v.cosh() - _tail(b, g, n)


def _r24_formulas(n, v):
    b = _beta_n(n)
    c = math.cos(math.pi / n)
    return (b, (b + 4) * (b + 1),
            2 * (b + 2) ** 2 / (b + 1) * (v.cosh() - c) - 2 / b * (b * b + 6 * b + 4))


def _nu_conditions(n_even: bool, u_even: bool):
    def conditions(n, u, v) -> Conditions:
        tu = _t(u)
        conds = [("(n,2) = 2, 4 <= n" if n_even else "(n,2) = 1, n >= 3",
                  (n % 2 == 0 and n >= 4) if n_even else (n % 2 == 1 and n >= 3)),
                 ("(t(u),2) = 2" if u_even else "(t(u),2) = 1",
                  _even_like(tu) if u_even else tu.is_odd()),
                 ("1/n + 1/t(u) < 1/2", 0.5 - 1 / n - tu.reciprocal())]
        return conds
    return conditions


def _with(base, *extra):
    def conditions(*args) -> Conditions:
        return base(*args) + [(name, fn(*args)) for name, fn in extra]
    return conditions


def _sqrt5_row(row, schema, exps, beta, gamma, beta_p, variant=""):
    return Row(row, schema, (), (), lambda: (beta, gamma, beta_p), lambda: [],
               lambda: exps, _const_invert, variant)


ROWS: tuple[Row, ...] = (
    Row(1, "GT", (), ("u", "v", "w"), _r12_formulas,
        lambda u, v, w: _r12_conditions(u, v, w, True),
        lambda u, v, w: (_t(u), _t(v), _t(w) / 2), _r12_invert, symmetric=True),
    Row(2, "Tet", (), ("u", "v", "w"), _r12_formulas,
        lambda u, v, w: _r12_conditions(u, v, w, False),
        lambda u, v, w: (_t(u), _t(v), _t(w)), _r12_invert, symmetric=True),
    Row(3, "Tet", ("n",), ("u",),
        lambda n, u: (_beta_n(n), -(_beta_n(n) + 2) ** 2,
                      4 * (_beta_n(n) + 4) * u.cosh2() - 4),
        lambda n, u: [("n >= 5, (n,2) = 1", n >= 5 and n % 2 == 1),
                      ("t(u) >= 3", _t(u) >= 3),
                      ("{n, t(u)} != {5, 3}", not (n == 5 and _t(u) == 3))],
        lambda n, u: (_t(u), n, 3), _r3_invert),
    Row(4, "Tet", ("m",), (),
        lambda m: (-2.0, 2 * math.cos(2 * math.pi / m),
                   (2 * math.cos(2 * math.pi / m)) ** 2 + 8 * math.cos(2 * math.pi / m)),
        lambda m: [("m >= 5, (m,2) = 1", m >= 5 and m % 2 == 1)],
        lambda m: (4, m, 3), _gamma_int_invert("m", 2, 0.0)),
    _sqrt5_row(5, "Tet", (4, 5, 3), -3.0, (SQRT5 - 1) / 2, SQRT5 - 1),
    Row(6, "Tet", ("q",), (),
        lambda q: (-3.0, 2 * math.cos(2 * math.pi / q), 4 * math.cos(2 * math.pi / q)),
        lambda q: [("q >= 7, (q,4) = 1", q >= 7 and math.gcd(q, 4) == 1)],
        lambda q: (3, 4, q), _gamma_int_invert("q", 2, 0.0)),
    Row(7, "Tet", (), ("u",),
        lambda u: (-3.0, (SQRT5 - 3) / 2, 2 * (7 + 3 * SQRT5) * u.cosh2() - 4),
        lambda u: [("t(u) >= 3", _t(u) >= 3)],
        lambda u: (3, _t(u), 5), _r7_invert),
    _sqrt5_row(8, "Tet", (3, 3, 5), (SQRT5 - 5) / 2, (SQRT5 - 1) / 2, (3 * SQRT5 - 1) / 2),
    Row(9, "Tet6", ("m",), (),
        lambda m: (-3.0, 2 * math.cos(math.pi / m) - 1,
                   (2 * math.cos(math.pi / m) - 1) ** 2 + 4 * (2 * math.cos(math.pi / m) - 1)),
        lambda m: [("m >= 4, (m,3) = 1", m >= 4 and math.gcd(m, 3) == 1)],
        lambda m: (m,), _gamma_int_invert("m", 1, -1.0)),
    Row(10, "H", ("n",), (),
        lambda n: (_beta_n(n), _beta_n(n) + 3,
                   2 / _beta_n(n) * ((_beta_n(n) - 3) * math.cos(math.pi / n)
                                     - 2 * _beta_n(n) - 3)),
        lambda n: [("n >= 5, (n,6) = 1", n >= 5 and math.gcd(n, 6) == 1)],
        lambda n: (2, 3, n, 2), _n_invert),
    _sqrt5_row(11, "H", (2, 5, 2, 3), (SQRT5 - 5) / 2, (SQRT5 + 1) / 2, 3 * (SQRT5 + 1) / 2, "+"),
    _sqrt5_row(11, "H", (2, 5, 2, 3), (SQRT5 - 5) / 2, (SQRT5 - 1) / 2, 3 * (SQRT5 + 1) / 2, "-"),
    _sqrt5_row(12, "H", (2, 3, 2, 5), -3.0, (SQRT5 + 1) / 2, SQRT5, "+"),
    _sqrt5_row(12, "H", (2, 3, 2, 5), -3.0, (SQRT5 - 1) / 2, SQRT5, "-"),
    _sqrt5_row(13, "H", (2, 3, 2, 5), (SQRT5 - 5) / 2, (SQRT5 - 1) / 2, SQRT5),
    _sqrt5_row(14, "H", (2, 3, 2, 5), (SQRT5 - 5) / 2, SQRT5 + 2, (5 * SQRT5 + 9) / 2),
    Row(15, "H", ("q",), (),
        lambda q: (-3.0, 2 * math.cos(2 * math.pi / q), 4 * math.cos(2 * math.pi / q)),
        lambda q: [("q >= 8, (q,4) = 2", q >= 8 and math.gcd(q, 4) == 2)],
        # the q slot of H[2;3,3;.] must be odd (>= 5), so it carries q/2
        lambda q: (2, 3, 3, q // 2), _gamma_int_invert("q", 2, 0.0)),
    Row(16, "R", ("n",), (),
        lambda n: (_beta_n(n), 2 * (_beta_n(n) + 3),
                   -6 / _beta_n(n) * (2 * math.cos(math.pi / n) + _beta_n(n) + 2)),
        lambda n: [("n >= 5, (n,6) = 1", n >= 5 and math.gcd(n, 6) == 1)],
        lambda n: (n, 2, 2), _n_invert),
    Row(17, "PH", ("n",), ("u", "v"), _r17_formulas,
        _with(_nu_conditions(True, True),
              ("t(v) >= 3, (t(v),2) = 1", lambda n, u, v: _t(v) >= 3 and _t(v).is_odd())),
        lambda n, u, v: (n, _t(u) / 2, _t(v)), _n_u_v_invert(_v_17)),
    Row(18, "S2", ("n",), ("u", "v"), _r17_formulas,
        _with(_nu_conditions(True, True),
              ("t(v) >= 4, (t(v),2) = 2", lambda n, u, v: _t(v) >= 4 and _even_like(_t(v)))),
        lambda n, u, v: (n, _t(u) / 2, _t(v) / 2), _n_u_v_invert(_v_17)),
    Row(19, "P", ("n",), ("u", "v"), _r19_formulas,
        _with(_nu_conditions(True, False),
              ("t(v) >= 3, (t(v),2) = 1", lambda n, u, v: _t(v) >= 3 and _t(v).is_odd())),
        lambda n, u, v: (n, _t(u), _t(v)), _n_u_v_invert(_v_19)),
    Row(20, "GTet1", ("n",), ("u", "v"), _r19_formulas,
        _with(_nu_conditions(True, False),
              ("t(v) >= 4, (t(v),2) = 2", lambda n, u, v: _t(v) >= 4 and _even_like(_t(v)))),
        lambda n, u, v: (n, _t(u), _t(v) / 2), _n_u_v_invert(_v_19)),
    Row(21, "S3", ("n",), ("u", "v"), _r21_formulas, _nu_conditions(False, True),
        lambda n, u, v: (n, _t(u) / 2, _t(v)), _n_u_v_invert(_v_21)),
    Row(22, "GTet1", ("n",), (),
        lambda n: (-3.0, 2 * math.cos(2 * math.pi / n) - 1,
                   2 / (2 * math.cos(2 * math.pi / n) - 1)
                   * ((2 * math.cos(2 * math.pi / n) - 1) ** 2
                      + 2 * (2 * math.cos(2 * math.pi / n) - 1) + 2)),
        lambda n: [("n >= 7, (n,2) = 1", n >= 7 and n % 2 == 1)],
        lambda n: (n, 3, 2), _gamma_int_invert("n", 2, -1.0)),
    Row(23, "GTet2", ("n",), ("u", "v"), _r23_formulas, _nu_conditions(False, False),
        lambda n, u, v: (n, _t(u), _t(v)), _n_u_v_invert(_v_23)),
    Row(24, "GTet2", ("n",), ("v",), _r24_formulas,
        lambda n, v: [("n >= 7, (n,2) = 1", n >= 7 and n % 2 == 1)],
        lambda n, v: (n, 3, _t(v)), _r24_invert),
)


def rows(row: int | None = None) -> list[Row]:
    """Registry entries, optionally restricted to one table row (rows 11, 12 have two)."""
    return [r for r in ROWS if row is None or r.row == row]


def _row_spec(row: int, variant: str = "") -> Row:
    for r in ROWS:
        if r.row == row and r.variant == variant:
            return r
    variants = [r.variant for r in ROWS if r.row == row]
    if not variants:
        raise KeyError(f"no row {row}")
    raise KeyError(f"row {row} needs a variant in {variants}")


# ---------------------------------------------------------------------------
# Forward direction


def generate_family(row: int | Row, ints: Mapping[str, int] | None = None,
                    upoints: Mapping[str, UPoint] | None = None, variant: str = "",
                    tol: float = DEFAULT_TOL) -> FamilyInstance:
    """Evaluate a family at the given slot values, checking every side condition.

    >>> inst = generate_family(5)
    >>> str(inst.group)
    'Tet[4,5;3]'
    """
    spec = row if isinstance(row, Row) else _row_spec(row, variant)
    ints = dict(ints or {})
    upoints = dict(upoints or {})
    if set(ints) != set(spec.int_slots) or set(upoints) != set(spec.upoint_slots):
        raise ValueError(f"row {spec.label} takes integer slots {spec.int_slots} "
                         f"and half-length slots {spec.upoint_slots}")
    args = [ints[k] for k in spec.int_slots] + [upoints[k] for k in spec.upoint_slots]
    for name, value in spec.conditions(*args):
        if isinstance(value, bool):
            if not value:
                raise ConditionViolated(spec.row, name)
        elif abs(value) <= tol:
            raise ConditionViolated(spec.row, name, boundary=True)
        elif value < 0:
            raise ConditionViolated(spec.row, name)
    try:
        beta, gamma, beta_p = spec.formulas(*args)
        params = Parameters(beta, beta_p, gamma)
    except (ZeroDivisionError, ValueError):
        raise ConditionViolated(spec.row, "formula defined") from None
    if not class_d_gate(params, tol):
        raise ConditionViolated(spec.row, "class D")
    try:
        group = GroupSpec(spec.schema, spec.exponents(*args))
    except ValueError:
        raise ConditionViolated(spec.row, "exponents defined") from None
    return FamilyInstance(spec.row, spec.variant, ints, upoints, params, group)


# ---------------------------------------------------------------------------
# Inverse direction


def _match_row(spec: Row, p: Parameters, bounds: SearchBounds,
               swapped: bool, notes: list[str]) -> list[FamilyInstance]:
    out = []
    try:
        candidates = list(spec.invert(p, bounds.tol, bounds.int_bound))
    except BoundExceeded as exc:
        notes.append(f"row {spec.label}: needs integer {exc.value} > bound {bounds.int_bound}")
        return out
    except (ZeroDivisionError, ValueError):
        return out
    for ints, ups in candidates:
        try:
            inst = generate_family(spec, ints, ups, tol=bounds.tol)
        except ConditionViolated as exc:
            if exc.boundary:
                notes.append(f"row {spec.label}: {exc.condition} holds with equality")
            continue
        if inst.params.close_to(p, bounds.tol):
            if swapped:
                inst = FamilyInstance(inst.row, inst.variant, inst.ints, inst.upoints,
                                      inst.params, inst.group, swapped=True)
            out.append(inst)
    return out


def primitive_parameters(p: Parameters, tol: float = DEFAULT_TOL) -> Parameters:
    """Replace non-primitive elliptic generators by their primitive powers."""
    beta, beta_p, gamma = p.as_tuple()
    for which in ("f", "g"):
        b = beta if which == "f" else beta_p
        kind = classify_element(b, tol)
        if isinstance(kind, Elliptic) and not kind.primitive:
            _, gamma = reduce_to_primitive(kind.n, kind.q, gamma)
            if which == "f":
                beta = _beta_n(kind.n)
            else:
                beta_p = _beta_n(kind.n)
    return Parameters(beta, beta_p, gamma)


def classify(p: Parameters, bounds: SearchBounds = SearchBounds()) -> ClassificationResult:
    """Decide discreteness of a class D pair by matching every family.

    All matching family instances are returned (several families may generate
    the same triple).  Asymmetric families are also tried with f and g
    exchanged, since <f, g> = <g, f> and gamma is symmetric.
    """
    if not class_d_gate(p, bounds.tol):
        return ClassificationResult(NOT_CLASS_D, reason="fails beta, beta' > -4, "
                                    "gamma < -beta beta'/4, gamma != 0")
    prim = primitive_parameters(p, bounds.tol)
    reduced = None if prim == p else prim
    notes: list[str] = []
    found: dict = {}
    for spec in ROWS:
        attempts = [(prim, False)] if spec.symmetric else [(prim, False), (prim.swapped(), True)]
        for target, swapped in attempts:
            for inst in _match_row(spec, target, bounds, swapped, notes):
                found.setdefault(inst.key(), inst)
    matches = sorted(found.values(), key=lambda m: (m.row, m.variant, m.swapped))
    if matches:
        return ClassificationResult(DISCRETE, matches, reduced=reduced)
    if notes:
        return ClassificationResult(UNRESOLVED, reason="; ".join(dict.fromkeys(notes)),
                                    reduced=reduced)
    return ClassificationResult(NOT_DISCRETE, reason="no family matches", reduced=reduced)


# ---------------------------------------------------------------------------
# Two primitive elliptic generators


def two_elliptic_discrete(n: int, m: int, gamma: float,
                          bounds: SearchBounds = SearchBounds()) -> ClassificationResult:
    """Discreteness when f, g are primitive elliptics of orders n, m >= 3.

    Discrete exactly when gamma <= -4, or gamma = -4 cos^2(pi/p) for an integer
    p with cos(pi/p) > sin(pi/n) sin(pi/m), or n = m >= 7 is odd and
    gamma = -(beta + 2)^2.
    """
    tol = bounds.tol
    if n < 3 or m < 3:
        return ClassificationResult(NOT_CLASS_D, reason="orders must be at least 3")
    beta, beta_p = _beta_n(n), _beta_n(m)
    p = Parameters(beta, beta_p, gamma)
    if not class_d_gate(p, tol):
        return ClassificationResult(NOT_CLASS_D, reason="gamma >= -beta beta'/4 or gamma = 0")
    u, v = UPoint.angle(n), UPoint.angle(m)
    matches: list[FamilyInstance] = []
    notes: list[str] = []

    w = None
    if gamma < -4 or close(gamma, -4.0, tol):
        w = UPoint.zero() if close(gamma, -4.0, tol) else UPoint.of_length(
            math.acosh(math.sqrt(-gamma / 4)))
    else:
        try:
            w = upoint_from_cosh2(-gamma / 4, tol, bounds.int_bound)
        except BoundExceeded as exc:
            notes.append(f"commutator order {exc.value} > bound {bounds.int_bound}")
        if w is not None:
            margin = math.cos(math.pi / w.p) - math.sin(math.pi / n) * math.sin(math.pi / m)
            if abs(margin) <= tol:
                notes.append("cos(pi/p) = sin(pi/n) sin(pi/m)")
                w = None
            elif margin < 0:
                w = None
    if w is not None:
        row = 1 if _even_like(w.t()) else 2
        inst = generate_family(row, {}, {"u": u, "v": v, "w": w}, tol=tol)
        matches.append(inst)

    if n == m and n >= 7 and n % 2 == 1 and close(gamma, -(beta + 2) ** 2, tol):
        matches.append(generate_family(3, {"n": n}, {"u": UPoint.angle(3)}, tol=tol))

    if matches:
        return ClassificationResult(DISCRETE, matches)
    if notes:
        return ClassificationResult(UNRESOLVED, reason="; ".join(notes))
    return ClassificationResult(NOT_DISCRETE, reason="no clause holds")


# ---------------------------------------------------------------------------
# Arithmetic conditions on the presentations themselves


def _ge(e: ExtExp, k: int) -> bool:
    return e >= k


def _odd_at_least(e: ExtExp, k: int) -> bool:
    return e.is_finite and e.k >= k and e.k % 2 == 1


def _even_finite_at_least(e: ExtExp, k: int) -> bool:
    return e.is_finite and e.k >= k and e.k % 2 == 0


def theorem2_conditions(group: GroupSpec | str, exponents=None) -> bool:
    """Whether ``group`` is one of the class D groups, by its exponent conditions.

    GT, Tet and H are symmetric in their two middle exponents (swap f and g, or
    x and y), so those slots are compared unordered.
    """
    spec = group if isinstance(group, GroupSpec) else GroupSpec(group, tuple(exponents))
    s, e = spec.schema, spec.exponents
    if s == "GT":
        n, m, q = e
        n, m = sorted((n, m))
        return (_ge(n, 3) and math.cos(math.pi / 2 * q.reciprocal())
                > _sin(n) * _sin(m))
    if s == "PH":
        n, m, q = e
        return (_even_finite_at_least(n, 4) and _ge(m, 2)
                and 2 * n.reciprocal() + m.reciprocal() < 1 and _odd_at_least(q, 3))
    if s == "H":
        p, n, m, q = e
        if p != 2:
            return False
        pair = sorted((n, m))
        if pair == [2, 3] and q == 5 or pair == [2, 5] and q == 3:
            return True
        if pair == [3, 3] and _odd_at_least(q, 5):
            return True
        return (q == 2 and pair[0] == 3 and pair[1].is_finite and pair[1].k >= 5
                and math.gcd(pair[1].k, 6) == 1)
    if s == "P":
        n, m, q = e
        return (_even_finite_at_least(n, 4) and n.reciprocal() + m.reciprocal() < 0.5
                and _odd_at_least(m, 3) and _odd_at_least(q, 3))
    if s == "Tet6":
        (m,) = e
        return m.is_finite and m.k >= 4 and math.gcd(m.k, 3) == 1
    if s == "Tet":
        n, m, q = e
        n, m = sorted((n, m))
        return (_ge(n, 3) and _odd_at_least(q, 3)
                and _cos(q) > _sin(n) * _sin(m))
    if s == "GTet1":
        n, m, q = e
        first = (_even_finite_at_least(n, 4) and _odd_at_least(m, 3)
                 and n.reciprocal() + m.reciprocal() < 0.5 and _ge(q, 2))
        second = _odd_at_least(n, 7) and m == 3 and q == 2
        return first or second
    if s == "GTet2":
        n, m, q = e
        return (_odd_at_least(n, 3) and _odd_at_least(m, 3)
                and n.reciprocal() + m.reciprocal() < 0.5 and _ge(q, 2))
    if s == "S2":
        n, m, q = e
        return (_even_finite_at_least(n, 4) and _ge(m, 2)
                and 2 * n.reciprocal() + m.reciprocal() < 1 and _ge(q, 2))
    if s == "S3":
        n, m, q = e
        return (_odd_at_least(n, 3) and _ge(m, 2)
                and 2 * n.reciprocal() + m.reciprocal() < 1 and _ge(q, 2))
    if s == "R":
        n, m, q = e
        return (n.is_finite and n.k >= 5 and math.gcd(n.k, 6) == 1
                and m == 2 and q == 2)
    raise ValueError(f"unknown schema {s!r}")


# ---------------------------------------------------------------------------
# Enumeration

DEFAULT_LENGTHS = (0.3, 0.7, 1.1, 1.9, 2.6)


def upoint_samples(max_int: int = 12, lengths=DEFAULT_LENGTHS) -> list[UPoint]:
    return ([UPoint.angle(p) for p in range(2, max_int + 1)] + [UPoint.zero()]
            + [UPoint.of_length(x) for x in lengths])


def enumerate_instances(row: int | None = None, max_int: int = 12,
                        lengths=DEFAULT_LENGTHS, tol: float = DEFAULT_TOL):
    """Yield every admissible instance with integers <= ``max_int``.

    Half-length slots range over i*pi/p (p <= ``max_int``), 0 and ``lengths``.
    """
    samples = upoint_samples(max_int, lengths)
    for spec in rows(row):
        int_ranges = [range(2, max_int + 1)] * len(spec.int_slots)
        up_ranges = [samples] * len(spec.upoint_slots)
        for ints in itertools.product(*int_ranges):
            for ups in itertools.product(*up_ranges):
                try:
                    yield generate_family(spec, dict(zip(spec.int_slots, ints)),
                                          dict(zip(spec.upoint_slots, ups)), tol=tol)
                except ConditionViolated:
                    continue

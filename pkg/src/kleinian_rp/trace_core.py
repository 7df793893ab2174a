"""Trace-parameter algebra for two-generator subgroups of PSL(2, C).

A pair (f, g) is described up to conjugacy by the real triple

    beta  = tr^2 f - 4
    beta' = tr^2 g - 4
    gamma = tr[f, g] - 2

This module holds that triple, the element-type classification read off from
``beta``, the extended exponents {2, 3, ...} U {inf, inf-bar} used in relator
lists, the half-length set ``U`` with its order function ``t``, and the
rescaling of ``gamma`` when a non-primitive elliptic generator is replaced by
a primitive power.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering

DEFAULT_TOL = 1e-9
DEFAULT_ORDER_BOUND = 1000


class InvalidRotation(ValueError):
    """Raised for an (n, q) pair that is not a non-primitive rotation 2*pi*q/n."""


def close(a: float, b: float, tol: float = DEFAULT_TOL) -> bool:
    """Relative closeness with an absolute floor of ``tol`` near zero."""
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


@dataclass(frozen=True)
class Parameters:
    beta: float
    beta_prime: float
    gamma: float

    def __post_init__(self):
        for name in ("beta", "beta_prime", "gamma"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be a finite real, got {value!r}")

    def swapped(self) -> "Parameters":
        return Parameters(self.beta_prime, self.beta, self.gamma)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.beta, self.beta_prime, self.gamma)

    def close_to(self, other: "Parameters", tol: float = DEFAULT_TOL) -> bool:
        return all(close(a, b, tol) for a, b in zip(self.as_tuple(), other.as_tuple()))


# ---------------------------------------------------------------------------
# Extended exponents


@total_ordering
class ExtExp:
    """An exponent in {2, 3, ...} U {inf, inf-bar}.

    ``inf`` marks a parabolic relator, ``inf-bar`` a hyperbolic one.  Ordering
    is inf-bar > inf > every finite value.  Division by a positive integer
    keeps the infinite values fixed, and ``gcd(inf, n) = gcd(inf-bar, n) = n``.
    """

    __slots__ = ("kind", "k")

    FIN = "fin"
    INF = "inf"
    BARINF = "barinf"
    _RANK = {FIN: 0, INF: 1, BARINF: 2}

    def __init__(self, kind: str, k: int | None = None):
        if kind == self.FIN:
            if not isinstance(k, int) or isinstance(k, bool) or k < 2:
                raise ValueError(f"finite exponent must be an integer >= 2, got {k!r}")
        elif kind in (self.INF, self.BARINF):
            k = None
        else:
            raise ValueError(f"unknown exponent kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError("ExtExp is immutable")

    @classmethod
    def fin(cls, k: int) -> "ExtExp":
        return cls(cls.FIN, k)

    @classmethod
    def coerce(cls, value) -> "ExtExp":
        """Accept an ExtExp, an int, or one of the tags ``inf``/``barinf``/``fin:k``."""
        if isinstance(value, ExtExp):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return cls.fin(value)
        if isinstance(value, str):
            return cls.from_tag(value)
        raise TypeError(f"cannot interpret {value!r} as an exponent")

    @classmethod
    def from_tag(cls, tag: str) -> "ExtExp":
        tag = tag.strip().lower()
        if tag in ("inf", "∞"):
            return INF
        if tag in ("barinf", "∞̄"):
            return BARINF
        if tag.startswith("fin:"):
            tag = tag[4:]
        try:
            return cls.fin(int(tag))
        except ValueError:
            raise ValueError(f"bad exponent tag {tag!r}") from None

    @property
    def is_finite(self) -> bool:
        return self.kind == self.FIN

    @property
    def tag(self) -> str:
        return f"fin:{self.k}" if self.is_finite else self.kind

    def reciprocal(self) -> float:
        """1/x, with 1/inf = 1/inf-bar = 0."""
        return 1.0 / self.k if self.is_finite else 0.0

    def gcd(self, n: int) -> int:
        if n < 1:
            raise ValueError("gcd is taken with a positive integer")
        return math.gcd(self.k, n) if self.is_finite else n

    def is_odd(self) -> bool:
        return self.gcd(2) == 1

    def __truediv__(self, d: int) -> "ExtExp":
        if not isinstance(d, int) or d < 1:
            raise ValueError("can only divide by a positive integer")
        if not self.is_finite:
            return self
        if self.k % d:
            raise ValueError(f"{self.k} is not divisible by {d}")
        return ExtExp.fin(self.k // d)

    def _key(self):
        return (self._RANK[self.kind], self.k or 0)

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.is_finite and self.k == other
        if not isinstance(other, ExtExp):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.is_finite and self.k < other
        if not isinstance(other, ExtExp):
            return NotImplemented
        return self._key() < other._key()

    def __gt__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return not self.is_finite or self.k > other
        if not isinstance(other, ExtExp):
            return NotImplemented
        return self._key() > other._key()

    def __ge__(self, other):
        return self == other or self > other

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"ExtExp.fin({self.k})" if self.is_finite else f"ExtExp({self.kind!r})"

    def __str__(self):
        if self.is_finite:
            return str(self.k)
        return "∞" if self.kind == self.INF else "∞̄"


INF = ExtExp(ExtExp.INF)
BARINF = ExtExp(ExtExp.BARINF)


# ---------------------------------------------------------------------------
# Half-lengths u in U


@dataclass(frozen=True)
class UPoint:
    """A complex translation half-length: i*pi/p, 0, or a positive real length."""

    kind: str
    p: int | None = None
    length: float | None = None

    ANGLE = "angle"
    ZERO = "zero"
    LEN = "len"

    def __post_init__(self):
        if self.kind == self.ANGLE:
            if not isinstance(self.p, int) or self.p < 2:
                raise ValueError(f"angle half-length needs integer p >= 2, got {self.p!r}")
        elif self.kind == self.LEN:
            if self.length is None or not self.length > 0 or not math.isfinite(self.length):
                raise ValueError(f"length must be a positive real, got {self.length!r}")
        elif self.kind != self.ZERO:
            raise ValueError(f"unknown half-length kind {self.kind!r}")

    @classmethod
    def angle(cls, p: int) -> "UPoint":
        return cls(cls.ANGLE, p=p)

    @classmethod
    def zero(cls) -> "UPoint":
        return cls(cls.ZERO)

    @classmethod
    def of_length(cls, length: float) -> "UPoint":
        return cls(cls.LEN, length=length)

    def t(self) -> ExtExp:
        if self.kind == self.ANGLE:
            return ExtExp.fin(self.p)
        return INF if self.kind == self.ZERO else BARINF

    def cosh(self) -> float:
        if self.kind == self.ANGLE:
            return math.cos(math.pi / self.p)
        return 1.0 if self.kind == self.ZERO else math.cosh(self.length)

    def cosh2(self) -> float:
        return self.cosh() ** 2

    def sinh2(self) -> float:
        if self.kind == self.ANGLE:
            return -math.sin(math.pi / self.p) ** 2
        return 0.0 if self.kind == self.ZERO else math.sinh(self.length) ** 2

    def to_json(self):
        if self.kind == self.ANGLE:
            return {"angle": self.p}
        if self.kind == self.ZERO:
            return {"zero": True}
        return {"len": self.length}

    def key(self):
        return (self.kind, self.p, None if self.length is None else round(self.length, 9))

    def __str__(self):
        if self.kind == self.ANGLE:
            return f"iπ/{self.p}"
        return "0" if self.kind == self.ZERO else f"{self.length:.12g}"


def beta_from_upoint(u: UPoint) -> float:
    """4 sinh^2(u)."""
    return 4.0 * u.sinh2()


def gamma_from_upoint(w: UPoint) -> float:
    """-4 cosh^2(w); w = i*pi/2 is refused because it gives gamma = 0."""
    if w.kind == UPoint.ANGLE and w.p == 2:
        raise ValueError("w = iπ/2 gives gamma = 0, which is never a class D parameter")
    return -4.0 * w.cosh2()


class BoundExceeded(Exception):
    """An integer that fits the data lies beyond the search bound."""

    def __init__(self, value: int):
        self.value = value
        super().__init__(f"integer {value} beyond search bound")


def solve_int(value: float, fn, approx: float, tol: float, bound: int,
              lo: int = 2) -> int | None:
    """The integer k near ``approx`` with fn(k) == value, if any.

    Raises :class:`BoundExceeded` when that integer fits but exceeds ``bound``.
    """
    if not math.isfinite(approx):
        return None
    k = round(approx)
    if k < lo or not close(fn(k), value, tol):
        return None
    if k > bound:
        raise BoundExceeded(k)
    return k


def upoint_from_cosh2(x: float, tol: float = DEFAULT_TOL,
                      bound: int = DEFAULT_ORDER_BOUND) -> UPoint | None:
    """The u in U with cosh^2(u) = x, or None when no such u exists."""
    if close(x, 1.0, tol):
        return UPoint.zero()
    if x > 1.0:
        return UPoint.of_length(math.acosh(math.sqrt(x)))
    if x < -tol:
        return None
    angle = math.acos(min(math.sqrt(max(x, 0.0)), 1.0))
    if angle == 0:
        return None
    p = solve_int(x, lambda p: math.cos(math.pi / p) ** 2, math.pi / angle, tol, bound)
    return None if p is None else UPoint.angle(p)


def upoint_from_cosh(y: float, tol: float = DEFAULT_TOL,
                     bound: int = DEFAULT_ORDER_BOUND) -> UPoint | None:
    """The u in U with cosh(u) = y (first power), or None."""
    if close(y, 1.0, tol):
        return UPoint.zero()
    if y > 1.0:
        return UPoint.of_length(math.acosh(y))
    if y < -tol:
        return None
    angle = math.acos(min(max(y, 0.0), 1.0))
    if angle == 0:
        return None
    p = solve_int(y, lambda p: math.cos(math.pi / p), math.pi / angle, tol, bound)
    return None if p is None else UPoint.angle(p)


def upoint_from_beta(beta: float, tol: float = DEFAULT_TOL,
                     bound: int = DEFAULT_ORDER_BOUND) -> UPoint | None:
    """Invert beta = 4 sinh^2(u); None for pi-loxodromic or non-primitive elliptic beta."""
    return upoint_from_cosh2(1.0 + beta / 4.0, tol, bound)


def upoint_from_gamma(gamma: float, tol: float = DEFAULT_TOL,
                      bound: int = DEFAULT_ORDER_BOUND) -> UPoint | None:
    """Invert gamma = -4 cosh^2(w)."""
    w = upoint_from_cosh2(-gamma / 4.0, tol, bound)
    if w is not None and w.kind == UPoint.ANGLE and w.p == 2:
        return None
    return w


# ---------------------------------------------------------------------------
# Element classification


@dataclass(frozen=True)
class Elliptic:
    n: int
    q: int = 1

    @property
    def primitive(self) -> bool:
        return self.q == 1


@dataclass(frozen=True)
class EllipticIrrational:
    theta: float


@dataclass(frozen=True)
class Parabolic:
    pass


@dataclass(frozen=True)
class Hyperbolic:
    translation_length: float


@dataclass(frozen=True)
class PiLoxodromic:
    """Rejection value: beta < -4 is outside the generator types of class D."""

    beta: float


ElementClass = Elliptic | EllipticIrrational | Parabolic | Hyperbolic | PiLoxodromic


def classify_element(beta: float, tol: float = DEFAULT_TOL,
                     order_bound: int = DEFAULT_ORDER_BOUND) -> ElementClass:
    """Element type of f from beta(f) = tr^2 f - 4.

    Elliptic rotation angles theta in (0, pi] satisfy beta = -4 sin^2(theta/2);
    theta = 2*pi*q/n is searched with n up to ``order_bound``.
    """
    if not math.isfinite(beta):
        raise ValueError("beta must be finite")
    if abs(beta) <= tol:
        return Parabolic()
    if beta > 0:
        return Hyperbolic(2.0 * math.asinh(math.sqrt(beta) / 2.0))
    if beta < -4.0 and not close(beta, -4.0, tol):
        return PiLoxodromic(beta)
    half = math.asin(min(math.sqrt(-beta) / 2.0, 1.0))
    theta = 2.0 * half
    # theta/(2 pi) = q/n, so n = q * pi/half: first n (in q-order) that fits wins
    for n in range(2, order_bound + 1):
        q = round(n * half / math.pi)
        if q < 1 or 2 * q > n:
            continue
        if math.gcd(q, n) != 1:
            continue
        if close(-4.0 * math.sin(math.pi * q / n) ** 2, beta, tol):
            return Elliptic(n, q)
    return EllipticIrrational(theta)


def reduce_to_primitive(n: int, q: int, gamma: float) -> tuple[int, float]:
    """Replace a non-primitive elliptic f (rotation 2*pi*q/n) by its primitive power f^r.

    Returns r and gamma(f^r, g) = (beta(f^r)/beta(f)) * gamma(f, g).
    """
    if n < 5 or not 1 < q < n / 2 or math.gcd(q, n) != 1:
        raise InvalidRotation(f"(n={n}, q={q}) is not a non-primitive rotation")
    # f^r must rotate through exactly +2*pi/n
    r = next(r for r in range(1, n) if (q * r) % n == 1)
    ratio = math.sin(math.pi / n) ** 2 / math.sin(math.pi * q / n) ** 2
    return r, ratio * gamma


def class_d_gate(p: Parameters, tol: float = DEFAULT_TOL) -> bool:
    """beta > -4, beta' > -4, gamma < -beta*beta'/4 and gamma != 0.

    Inequalities are exact; only gamma != 0 is tested with ``tol``.
    """
    return (p.beta > -4.0 and p.beta_prime > -4.0
            and p.gamma < -p.beta * p.beta_prime / 4.0
            and abs(p.gamma) > tol)

"""Group presentations with extended exponents.

Ten presentation schemas cover every group in class D.  Relator exponents
are :class:`ExtExp` values: an ``inf`` relator records a parabolic element and
is kept in the Kleinian form, an ``inf-bar`` relator records a hyperbolic one
and is always dropped.  The abstract form drops both.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .trace_core import BARINF, INF, ExtExp, UPoint


class PresentationError(ValueError):
    pass


class Word:
    """A freely reduced word, stored as ``((symbol, exponent), ...)``."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[tuple[str, int]] = ()):
        stack: list[list] = []
        for sym, exp in letters:
            if exp == 0:
                continue
            if stack and stack[-1][0] == sym:
                stack[-1][1] += exp
                if stack[-1][1] == 0:
                    stack.pop()
            else:
                stack.append([sym, exp])
        self.letters = tuple((s, e) for s, e in stack)

    @classmethod
    def gen(cls, sym: str, exp: int = 1) -> "Word":
        return cls([(sym, exp)])

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse the compact form produced by ``str``: ``xz^-1y^2``; ``1`` is empty."""
        text = text.replace(" ", "")
        if text in ("", "1"):
            return cls()
        letters = []
        i = 0
        while i < len(text):
            sym = text[i]
            if not sym.isalpha():
                raise PresentationError(f"unexpected {sym!r} in word {text!r}")
            i += 1
            exp = 1
            if i < len(text) and text[i] == "^":
                j = i + 1
                if j < len(text) and text[j] == "-":
                    j += 1
                k = j
                while k < len(text) and text[k].isdigit():
                    k += 1
                if k == j:
                    raise PresentationError(f"missing exponent in word {text!r}")
                exp = int(text[i + 1:k])
                i = k
            letters.append((sym, exp))
        return cls(letters)

    def symbols(self) -> set[str]:
        return {s for s, _ in self.letters}

    def is_reduced(self) -> bool:
        return all(e != 0 for _, e in self.letters) and all(
            a[0] != b[0] for a, b in zip(self.letters, self.letters[1:]))

    def inverse(self) -> "Word":
        return Word((s, -e) for s, e in reversed(self.letters))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self.letters * k)

    def substitute(self, mapping: dict[str, "Word"]) -> "Word":
        out = Word()
        for sym, exp in self.letters:
            out = out * (mapping[sym] ** exp if sym in mapping else Word.gen(sym, exp))
        return out

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Word({str(self)!r})"

    def __str__(self):
        if not self.letters:
            return "1"
        return "".join(s if e == 1 else f"{s}^{e}" for s, e in self.letters)


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a b a^-1 b^-1."""
    return a * b * a.inverse() * b.inverse()


@dataclass(frozen=True)
class Relator:
    """``word ** exponent = 1``; ``exponent=None`` is a bare relator word = 1."""

    word: Word
    exponent: ExtExp | None = None
    label: str = ""

    def __str__(self):
        if self.exponent is None:
            return str(self.word)
        base = str(self.word)
        if len(self.word) == 1 and self.word.letters[0][1] == 1:
            return f"{base}^{self.exponent}"
        return f"({base})^{self.exponent}"

    def to_json(self):
        return {
            "word": [[s, e] for s, e in self.word.letters],
            "exponent": "fin:1" if self.exponent is None else self.exponent.tag,
        }


KLEINIAN = "kleinian"
ABSTRACT = "abstract"


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Relator, ...]
    form: str = KLEINIAN
    name: str = ""

    def __str__(self):
        rels = ", ".join(str(r) for r in self.relators)
        return f"⟨{', '.join(self.generators)} | {rels}⟩"

    def to_json(self):
        return {
            "form": self.form,
            "generators": list(self.generators),
            "name": self.name,
            "relators": [r.to_json() for r in self.relators],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, ensure_ascii=False)


# ---------------------------------------------------------------------------
# Schemas

# schema -> (generators, exponent slot names)
SCHEMAS: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "GT": (("f", "g"), ("n", "m", "q")),
    "PH": (("x", "y", "z"), ("n", "m", "q")),
    "H": (("x", "y", "s"), ("p", "n", "m", "q")),
    "P": (("w", "x", "y", "z"), ("n", "m", "q")),
    "Tet": (("x", "y", "z"), ("n", "m", "q")),
    "Tet6": (("x", "y", "z"), ("m",)),
    "GTet1": (("x", "y", "z"), ("n", "m", "q")),
    "GTet2": (("x", "y", "z"), ("n", "m", "q")),
    "S2": (("x", "L"), ("n", "m", "q")),
    "S3": (("x", "L"), ("n", "m", "q")),
    "R": (("u", "v"), ("n", "m", "q")),
}

_DISPLAY = {"GTet1": "GTet_1", "GTet2": "GTet_2", "S2": "S_2", "S3": "S_3"}


@dataclass(frozen=True)
class GroupSpec:
    """A schema together with its exponent values, e.g. ``Tet[5,4;3]``."""

    schema: str
    exponents: tuple[ExtExp, ...]

    def __post_init__(self):
        if self.schema not in SCHEMAS:
            raise PresentationError(f"unknown schema {self.schema!r}")
        arity = len(SCHEMAS[self.schema][1])
        exps = tuple(ExtExp.coerce(e) for e in self.exponents)
        if len(exps) != arity:
            raise PresentationError(
                f"{self.schema} takes {arity} exponents, got {len(exps)}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def of(cls, schema: str, *exponents) -> "GroupSpec":
        return cls(schema, tuple(exponents))

    def slots(self) -> dict[str, ExtExp]:
        return dict(zip(SCHEMAS[self.schema][1], self.exponents))

    def __str__(self):
        e = [str(x) for x in self.exponents]
        s = self.schema
        if s in ("GT", "Tet", "R"):
            return f"{s}[{e[0]},{e[1]};{e[2]}]"
        if s == "H":
            return f"H[{e[0]};{e[1]},{e[2]};{e[3]}]"
        if s == "Tet6":
            return f"Tet[2,3,3;2,3,{e[0]}]"
        return f"{_DISPLAY.get(s, s)}[{','.join(e)}]"

    def to_json(self):
        return {"schema": self.schema, "exponents": [x.tag for x in self.exponents]}


def _w(text: str) -> Word:
    return Word.parse(text)


def _tet_relators(p1, p2, p3, q1, q2, q3) -> list[Relator]:
    return [
        Relator(_w("x"), p1), Relator(_w("y"), p2), Relator(_w("z"), p3),
        Relator(_w("xy^-1"), q3), Relator(_w("yz^-1"), q1), Relator(_w("zx^-1"), q2),
    ]


def _relators(schema: str, e: Sequence[ExtExp]) -> list[Relator]:
    two, three = ExtExp.fin(2), ExtExp.fin(3)
    if schema == "GT":
        n, m, q = e
        return [Relator(_w("f"), n), Relator(_w("g"), m),
                Relator(commutator(_w("f"), _w("g")), q)]
    if schema == "PH":
        n, m, q = e
        return [Relator(_w("x"), n), Relator(_w("y"), two), Relator(_w("z"), two),
                Relator(_w("xz"), two), Relator(commutator(_w("x"), _w("y")), m),
                Relator(_w("yxyz"), q)]
    if schema == "H":
        p, n, m, q = e
        return [Relator(_w("s"), two), Relator(_w("x"), n), Relator(_w("y"), m),
                Relator(_w("xy^-1"), p), Relator(_w("sxsy^-1"), q),
                Relator(_w("sx^-1y"), two)]
    if schema == "P":
        n, m, q = e
        return [Relator(_w("w"), n), Relator(_w("x"), two), Relator(_w("y"), two),
                Relator(_w("z"), two), Relator(_w("wx"), two), Relator(_w("wy"), two),
                Relator(_w("yz"), two), Relator(_w("zx"), q), Relator(_w("zw"), m)]
    if schema == "Tet":
        n, m, q = e
        # Tet[n,m;q] = Tet[2,2,n;2,q,m]
        return _tet_relators(two, two, n, two, q, m)
    if schema == "Tet6":
        (m,) = e
        return _tet_relators(two, three, three, two, three, m)
    if schema == "GTet1":
        n, m, q = e
        return [Relator(_w("x"), n), Relator(_w("y"), two), Relator(_w("xy"), m),
                Relator(commutator(_w("y"), _w("z")), q),
                Relator(commutator(_w("x"), _w("z")))]
    if schema == "GTet2":
        n, m, q = e
        return [Relator(_w("x"), n), Relator(_w("y"), two), Relator(_w("xy"), m),
                Relator(_w("xz^-1y^-1zy"), q),
                Relator(commutator(_w("x"), _w("z")))]
    if schema == "S2":
        n, m, q = e
        return [Relator(_w("x"), n), Relator(_w("xLxL^-1"), m),
                Relator(_w("xL^2x^-1L^-2"), q)]
    if schema == "S3":
        n, m, q = e
        return [Relator(_w("x"), n), Relator(_w("xLxL^-1"), m),
                Relator(_w("xLxLxL^-2"), q)]
    if schema == "R":
        n, m, q = e
        return [Relator(_w("uv"), n), Relator(_w("uv^-1"), m),
                Relator(commutator(_w("u"), _w("v")), q)]
    raise PresentationError(f"unknown schema {schema!r}")


def build(schema: str | GroupSpec, exponents: Sequence | None = None) -> Presentation:
    """Kleinian-form presentation: finite and ``inf`` relators kept, ``inf-bar`` dropped.

    >>> str(build("GT", (3, 3, 3)))
    '⟨f, g | f^3, g^3, (fgf^-1g^-1)^3⟩'
    """
    spec = schema if isinstance(schema, GroupSpec) else GroupSpec(schema, tuple(exponents))
    gens = SCHEMAS[spec.schema][0]
    rels = tuple(r for r in _relators(spec.schema, spec.exponents) if r.exponent != BARINF)
    return Presentation(gens, rels, KLEINIAN, str(spec))


def to_abstract(p: Presentation) -> Presentation:
    """Drop the parabolic (``inf``) relators as well."""
    rels = tuple(r for r in p.relators if r.exponent not in (INF, BARINF))
    return Presentation(p.generators, rels, ABSTRACT, p.name)


# ---------------------------------------------------------------------------
# Relators rewritten in the generators f, g of a parameter triple

F, G = Word.gen("f"), Word.gen("g")
FG_COMMUTATOR = commutator(F, G)


def tet_half_turn(p: int) -> Word:
    """The half-turn e = f^-1 g^-1 [f,g]^((p-1)/2), valid when p is odd."""
    return F.inverse() * G.inverse() * FG_COMMUTATOR ** ((p - 1) // 2)


def clause3_words(n: int) -> tuple[Word, Word]:
    """(u, e_f) for the odd n >= 7 case where Tet[3,n;3] = <f, g>.

    u = f [f,g]^(-(n-1)^2/4) f and e_f = [f,g]^((n-1)^2/2) g.
    """
    k = (n - 1) ** 2 // 4
    u = F * FG_COMMUTATOR ** (-k) * F
    e_f = FG_COMMUTATOR ** (2 * k) * G
    return u, e_f


def relator_words_in_fg(instance) -> list[Relator] | None:
    """Relators of ``instance``'s group written as words in f and g.

    Available for the two-elliptic-style rows: row 1 (GT), row 2 (Tet with odd
    t(w)) and row 3 when t(u) = 3.  Returns None otherwise.  Every returned word
    must evaluate to +-I (finite exponent), a parabolic (``inf``) or a
    hyperbolic/loxodromic (``inf-bar``) on a realization of ``instance.params``.
    """
    two, three = ExtExp.fin(2), ExtExp.fin(3)
    row = instance.row
    if row == 1:
        tu, tv, tw = (instance.upoints[k].t() for k in ("u", "v", "w"))
        return [Relator(F, tu, "f"), Relator(G, tv, "g"),
                Relator(FG_COMMUTATOR, tw / 2, "[f,g]")]
    if row == 2:
        tu, tv, tw = (instance.upoints[k].t() for k in ("u", "v", "w"))
        e = tet_half_turn(tw.k)
        return [Relator(F, tu, "f"), Relator(G, tv, "g"), Relator(e, two, "e"),
                Relator(F * e, two, "fe"), Relator(G * e, two, "ge"),
                Relator(G * F * e, tw, "gfe")]
    if row == 3 and instance.upoints["u"] == UPoint.angle(3):
        n = instance.ints["n"]
        u, e_f = clause3_words(n)
        return [Relator(F, ExtExp.fin(n), "f"), Relator(G, ExtExp.fin(n), "g"),
                Relator(e_f, two, "e_f"), Relator(u, two, "u"),
                Relator(F * e_f, two, "fe_f"), Relator(u * e_f, three, "ue_f"),
                Relator(F * u, three, "fu")]
    return None

"""Exact arithmetic in U(osp(1|2)) extended by the grade involution P.

Elements are kept in the PBW normal form

    Em^a Fm^dm H^b Fp^dp Ep^c P^e,   dm, dp, e in {0, 1},

i.e. with the letters sorted by ``Em < Fm < H < Fp < Ep < P``.  Products are
normalised by rewriting the leftmost out-of-order adjacent pair with the
defining (anti)commutation relations:

    [H, E±] = ±E±          [E+, E-] = 2H
    [H, F±] = ±F±/2        {F+, F-} = H/2
    [E±, F∓] = -F±         {F±, F±} = ±E±/2
    [P, E±] = [P, H] = 0   {P, F±} = 0        P^2 = 1
"""

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache

from . import expression as ex
from .linear import LinearCombination, accumulate, as_scalar
from .report import Check, Report


class Generator(IntEnum):
    """The six PBW letters, valued by their position in the normal order."""

    Em = 0
    Fm = 1
    H = 2
    Fp = 3
    Ep = 4
    P = 5

    @property
    def odd(self):
        return self in (Generator.Fm, Generator.Fp)


Em, Fm, H, Fp, Ep, P = Generator

_NAMES = ("Em", "Fm", "H", "Fp", "Ep", "P")


class PBWMonomial(tuple):
    """Exponent vector ``(em, fm, h, fp, ep, p)`` of an ordered word.

    Comparison is lexicographic on the exponent tuple, which is also the
    printing order.
    """

    __slots__ = ()

    def __new__(cls, em=0, fm=0, h=0, fp=0, ep=0, p=0):
        exps = (em, fm, h, fp, ep, p)
        if any(not isinstance(x, int) or x < 0 for x in exps):
            raise ValueError(f"exponents must be non-negative integers: {exps}")
        if fm > 1 or fp > 1 or p > 1:
            raise ValueError(f"Fm, Fp and P exponents must be 0 or 1: {exps}")
        return tuple.__new__(cls, exps)

    @classmethod
    def from_word(cls, word):
        """Monomial of an already normal-ordered word of letters."""
        exps = [0] * 6
        for letter in word:
            exps[letter] += 1
        return cls(*exps)

    def word(self):
        return tuple(g for g in Generator for _ in range(self[g]))

    @property
    def parity(self):
        return (self[Fm] + self[Fp]) % 2

    @property
    def degree(self):
        return sum(self)

    def __repr__(self):
        return f"PBWMonomial{tuple(self)}"

    def __str__(self):
        parts = []
        for g, e in zip(_NAMES, self):
            if e == 1:
                parts.append(g)
            elif e > 1:
                parts.append(f"{g}^{e}")
        return "*".join(parts) or "1"


ONE_MONOMIAL = PBWMonomial()


def _rules():
    half = Fraction(1, 2)
    swap = {
        (Fm, Em): [(1, (Em, Fm))],
        (H, Em): [(1, (Em, H)), (-1, (Em,))],
        (H, Fm): [(1, (Fm, H)), (-half, (Fm,))],
        (Fp, Em): [(1, (Em, Fp)), (1, (Fm,))],
        (Fp, Fm): [(-1, (Fm, Fp)), (half, (H,))],
        (Fp, H): [(1, (H, Fp)), (-half, (Fp,))],
        (Ep, Em): [(1, (Em, Ep)), (2, (H,))],
        (Ep, Fm): [(1, (Fm, Ep)), (-1, (Fp,))],
        (Ep, H): [(1, (H, Ep)), (-1, (Ep,))],
        (Ep, Fp): [(1, (Fp, Ep))],
    }
    for g in (Em, Fm, H, Fp, Ep):
        swap[(P, g)] = [(-1 if g.odd else 1, (g, P))]
    square = {
        Fm: [(Fraction(-1, 4), (Em,))],
        Fp: [(Fraction(1, 4), (Ep,))],
        P: [(1, ())],
    }
    return swap, square


_SWAP, _SQUARE = _rules()


def _append(m, g):
    exps = list(m)
    exps[g] += 1
    return PBWMonomial(*exps)


def _last_letter(m):
    for g in reversed(Generator):
        if m[g]:
            return g
    return None


def _drop(m, g):
    exps = list(m)
    exps[g] -= 1
    return PBWMonomial(*exps)


@lru_cache(maxsize=None)
def _times_letter(m, g):
    """Normal form of ``m * g`` as a tuple of (monomial, coeff).

    In the word ``m g`` only the last pair ``(x, g)`` can be reducible, so
    the leftmost-pair rewrite acts there: either append ``g``, or replace
    ``x g`` and recurse on ``m / x``.  Every step lowers the degree or the
    number of inversions, hence terminates.
    """
    x = _last_letter(m)
    if x is None or x < g or (x == g and g not in _SQUARE):
        return ((_append(m, g), Fraction(1)),)
    rest = _drop(m, x)
    replacement = _SQUARE[g] if x == g else _SWAP[(x, g)]
    out = {}
    for coeff, middle in replacement:
        for mono, c in _times_word(rest, middle):
            accumulate(out, mono, coeff * c)
    return tuple(out.items())


def _times_word(m, word):
    terms = {m: Fraction(1)}
    for g in word:
        new = {}
        for mono, c in terms.items():
            for mono2, c2 in _times_letter(mono, g):
                accumulate(new, mono2, c * c2)
        terms = new
    return tuple(terms.items())


@lru_cache(maxsize=None)
def _normal_word(word):
    """Normal form of an arbitrary word of letters."""
    return _times_word(ONE_MONOMIAL, tuple(word))


@lru_cache(maxsize=None)
def monomial_product(left, right):
    """Normal form of ``left * right`` as a tuple of (monomial, coeff)."""
    if not right.degree:
        return ((left, Fraction(1)),)
    return _times_word(left, right.word())


class PBWElement(LinearCombination):
    """Finite linear combination of PBW monomials."""

    __slots__ = ()

    def _check_key(self, key):
        if not isinstance(key, PBWMonomial):
            raise TypeError(f"PBWMonomial expected, got {key!r}")
        return key

    def scalar(self, value):
        return scalar(value)

    def _product(self, other):
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                for m, c in monomial_product(m1, m2):
                    accumulate(out, m, c1 * c2 * c)
        return PBWElement._from_clean(out)

    @property
    def parities(self):
        return {m.parity for m in self._terms}

    def __repr__(self):
        return f"PBWElement({self})"

    def __str__(self):
        return format_terms((str(m), c) for m, c in self.sorted_terms())


def format_terms(items):
    """Render (word, coeff) pairs as re-parsable text."""
    out = []
    for word, coeff in items:
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if word == "1":
            body = str(mag)
        elif mag == 1:
            body = word
        else:
            body = f"{mag}*{word}"
        out.append((sign, body))
    if not out:
        return "0"
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def monomial(**exponents):
    """Single monomial element, e.g. ``monomial(fm=1, fp=1, p=1)``."""
    return PBWElement._from_clean({PBWMonomial(**exponents): Fraction(1)})


def scalar(value):
    value = as_scalar(value)
    return PBWElement._from_clean({ONE_MONOMIAL: value} if value else {})


def one():
    return scalar(1)


def zero():
    return PBWElement._from_clean({})


def generator(g):
    g = Generator(g) if not isinstance(g, str) else Generator[g]
    exps = [0] * 6
    exps[g] = 1
    return PBWElement._from_clean({PBWMonomial(*exps): Fraction(1)})


def multiply(x, y):
    return x * y


def linear_combine(terms):
    """``sum(c * x for c, x in terms)`` with exact coefficients."""
    out = {}
    for coeff, x in terms:
        coeff = as_scalar(coeff)
        for m, c in x.terms.items():
            accumulate(out, m, coeff * c)
    return PBWElement._from_clean(out)


def bracket(x, y, kind="commutator"):
    if kind in ("commutator", "comm"):
        return x.commutator(y)
    if kind in ("anticommutator", "anti"):
        return x.anticommutator(y)
    raise ValueError(f"unknown bracket kind {kind!r}")


@lru_cache(maxsize=None)
def casimir():
    """The central element ``8[Fp, Fm]P + P``."""
    fp, fm, p = generator(Fp), generator(Fm), generator(P)
    return linear_combine([(8, bracket(fp, fm) * p), (1, p)])


def normal_form(expr):
    """PBW normal form of an arity-one expression (or its text)."""
    if isinstance(expr, str):
        expr = ex.parse_expression(expr)
    a = ex.arity(expr)
    if a not in (None, 1):
        raise ex.ArityError(f"expected an arity-1 expression, got arity {a}")
    return _evaluate(expr)


def _evaluate(node):
    if isinstance(node, ex.Num):
        return scalar(node.value)
    if isinstance(node, ex.Sym):
        return casimir() if node.name == "C" else generator(node.name)
    if isinstance(node, ex.Add):
        return _evaluate(node.left) + _evaluate(node.right)
    if isinstance(node, ex.Sub):
        return _evaluate(node.left) - _evaluate(node.right)
    if isinstance(node, ex.Neg):
        return -_evaluate(node.operand)
    if isinstance(node, ex.Mul):
        return _evaluate(node.left) * _evaluate(node.right)
    if isinstance(node, ex.Pow):
        return _evaluate(node.base) ** node.exponent
    if isinstance(node, ex.Bracket):
        kind = "anticommutator" if node.anti else "commutator"
        return bracket(_evaluate(node.left), _evaluate(node.right), kind)
    if isinstance(node, ex.Tensor):
        raise ex.ArityError("tensor separator in an arity-1 expression")
    raise TypeError(f"not an expression node: {node!r}")


@dataclass(frozen=True)
class Relation:
    name: str
    lhs: str
    rhs: str

    def residual(self):
        return normal_form(self.lhs) - normal_form(self.rhs)


DEFINING_RELATIONS = (
    Relation("[H,Ep] = Ep", "[H,Ep]", "Ep"),
    Relation("[H,Em] = -Em", "[H,Em]", "-Em"),
    Relation("[Ep,Em] = 2H", "[Ep,Em]", "2*H"),
    Relation("[H,Fp] = Fp/2", "[H,Fp]", "1/2*Fp"),
    Relation("[H,Fm] = -Fm/2", "[H,Fm]", "-1/2*Fm"),
    Relation("{Fp,Fm} = H/2", "{Fp,Fm}", "1/2*H"),
    Relation("[Ep,Fm] = -Fp", "[Ep,Fm]", "-Fp"),
    Relation("[Em,Fp] = -Fm", "[Em,Fp]", "-Fm"),
    Relation("{Fp,Fp} = Ep/2", "{Fp,Fp}", "1/2*Ep"),
    Relation("{Fm,Fm} = -Em/2", "{Fm,Fm}", "-1/2*Em"),
    Relation("[P,Ep] = 0", "[P,Ep]", "0"),
    Relation("[P,Em] = 0", "[P,Em]", "0"),
    Relation("[P,H] = 0", "[P,H]", "0"),
    Relation("{P,Fp} = 0", "{P,Fp}", "0"),
    Relation("{P,Fm} = 0", "{P,Fm}", "0"),
    Relation("P^2 = 1", "P^2", "1"),
)


def check_defining_relations():
    """Residual of every defining relation after rewriting."""
    report = Report("defining relations")
    for rel in DEFINING_RELATIONS:
        report.add(Check.zero(rel.name, rel.residual()))
    return report

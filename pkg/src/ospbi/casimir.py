"""Intermediate Casimir elements C_A of U(osp(1|2))^{#n}.

Contiguous sets ``K = {k, ..., l}`` get ``1^(k-1) # Delta^(l-k)(C) # 1^(n-l)``.
An arbitrary subset ``A`` is reached as ``gamma_s(C_K)`` for any word ``s``
with ``s(K) = A``; the result does not depend on that choice, which
``path_consistency`` checks rather than assumes.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import pbw
from .pbw import Generator
from .perm import Permutation, shuffle_word
from .report import Check, Report
from .rmatrix import gamma
from .tensor import coproduct_iter, embed, tensor_product, unit


@dataclass(frozen=True, order=True)
class SubsetIndex:
    """Sorted subset ``elements`` of ``{1, ..., n}``; empty means ``C = 1``."""

    n: int
    elements: tuple = ()

    def __post_init__(self):
        elems = tuple(sorted(int(k) for k in self.elements))
        if len(set(elems)) != len(elems):
            raise ValueError(f"repeated index in {self.elements}")
        if any(not 1 <= k <= self.n for k in elems):
            raise ValueError(f"subset {elems} not contained in 1..{self.n}")
        object.__setattr__(self, "elements", elems)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def is_contiguous(self):
        e = self.elements
        return not e or e[-1] - e[0] + 1 == len(e)

    def _other(self, other):
        if self.n != other.n:
            raise ValueError(f"ambient arities differ: {self.n} vs {other.n}")
        return set(other.elements)

    def __or__(self, other):
        return SubsetIndex(self.n, set(self.elements) | self._other(other))

    def __and__(self, other):
        return SubsetIndex(self.n, set(self.elements) & self._other(other))

    def __sub__(self, other):
        return SubsetIndex(self.n, set(self.elements) - self._other(other))

    def __xor__(self, other):
        return SubsetIndex(self.n, set(self.elements) ^ self._other(other))

    def label(self):
        return "".join(map(str, self.elements)) if self.n < 10 else ",".join(map(str, self.elements))

    def __str__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


def subset(n, *elements):
    return SubsetIndex(n, elements)


def all_subsets(n, include_empty=False):
    """Nonempty subsets of ``[n]`` in lexicographic order."""
    out = [SubsetIndex(n, c) for r in range(0 if include_empty else 1, n + 1)
           for c in combinations(range(1, n + 1), r)]
    return sorted(out, key=lambda a: a.elements)


@lru_cache(maxsize=None)
def contiguous_casimir(k, l, n):
    """``C_{k,k+1,...,l}`` in arity ``n``."""
    if not 1 <= k <= l <= n:
        raise ValueError(f"need 1 <= k <= l <= n, got k={k}, l={l}, n={n}")
    parts = []
    if k > 1:
        parts.append(unit(k - 1))
    parts.append(coproduct_iter(l - k, pbw.casimir()))
    if l < n:
        parts.append(unit(n - l))
    return tensor_product(*parts)


def _contiguous(K):
    if not len(K):
        return unit(K.n)
    if not K.is_contiguous:
        raise ValueError(f"{K} is not a set of successive integers")
    return contiguous_casimir(K.elements[0], K.elements[-1], K.n)


def canonical_path(A):
    """``K = {1..|A|}`` and the shortest word sending it onto ``A``."""
    K = SubsetIndex(A.n, range(1, len(A) + 1))
    return K, shuffle_word(K.elements, A.elements, A.n)


@lru_cache(maxsize=None)
def intermediate_casimir(A):
    """``C_A = gamma_s(C_K)`` along the canonical path; ``C_{} = 1``."""
    if not len(A):
        return unit(A.n)
    K, s = canonical_path(A)
    return gamma(s, _contiguous(K))


def casimir_along(K, word):
    """``gamma_s(C_K)`` for an explicit path."""
    s = word if isinstance(word, Permutation) else Permutation(K.n, tuple(word))
    return gamma(s, _contiguous(K))


def simple_embedding_casimir(A):
    """Naive ``C-bar_A``: ``Delta^(|A|-1)(C)`` placed on the legs of ``A``.

    Only a centraliser element when ``A`` is contiguous.
    """
    if not len(A):
        return unit(A.n)
    d = coproduct_iter(len(A) - 1, pbw.casimir())
    out = {}
    for key, c in d.terms.items():
        full = [pbw.ONE_MONOMIAL] * A.n
        for leg, m in zip(A.elements, key):
            full[leg - 1] = m
        out[tuple(full)] = c
    return type(d)(A.n, out)


def explicit_casimir(A):
    """``(8[F+_A, F-_A] + 1) P_A`` with ``F_A = sum_i F_i P_{i+1} ... P_{max A}``.

    The P string runs over every leg between ``i`` and ``max A``, including
    legs outside ``A``.  The general form extrapolates the three-leg
    formulas; tests compare it with ``intermediate_casimir``.
    """
    if not len(A):
        raise ValueError("explicit_casimir needs a nonempty subset")
    n, top = A.n, A.elements[-1]
    p = pbw.generator(Generator.P)

    def p_string(legs):
        out = unit(n)
        for j in legs:
            out = out * embed(p, j, n)
        return out

    def f_total(g):
        total = 0 * unit(n)
        for i in A.elements:
            total = total + embed(pbw.generator(g), i, n) * p_string(range(i + 1, top + 1))
        return total

    fp, fm = f_total(Generator.Fp), f_total(Generator.Fm)
    return (8 * fp.commutator(fm) + unit(n)) * p_string(A.elements)


def centralizer_residuals(x, n):
    """``[Delta^(n-1)(g), x]`` for the six generators ``g``."""
    if x.arity != n:
        raise ValueError(f"element of arity {x.arity} checked in arity {n}")
    report = Report(f"centralizer residuals (n={n})")
    for g in Generator:
        d = coproduct_iter(n - 1, pbw.generator(g))
        report.add(Check.zero(f"[Delta^({n - 1})({g.name}), X]", d.commutator(x)))
    return report


def generate_paths(A):
    """Distinct ``(K, word)`` pairs with ``s(K) = A``.

    One canonical shuffle per contiguous ``K`` of the right size, plus, for
    ``|A| >= 2``, the canonical path padded by a transposition inside ``K``.
    """
    n, k = A.n, len(A)
    paths = []
    for start in range(1, n - k + 2):
        K = SubsetIndex(n, range(start, start + k))
        paths.append((K, shuffle_word(K.elements, A.elements, n)))
    if k >= 2:
        K, s = paths[0]
        first = K.elements[0]
        paths.append((K, Permutation(n, s.word + (first,))))
    return paths


def path_consistency(A, paths=None):
    """All paths reaching ``A`` must give the same element."""
    if paths is None:
        paths = generate_paths(A)
    if len(paths) < 2 and len(A) and A.n > 1:
        raise ValueError("need at least two paths")
    report = Report(f"path consistency for C_{A}")
    values = []
    for K, word in paths:
        if not isinstance(K, SubsetIndex):
            K = SubsetIndex(A.n, K)
        s = word if isinstance(word, Permutation) else Permutation(A.n, tuple(word))
        if s.apply_set(K.elements) != A.elements:
            raise ValueError(f"word {s.word} sends {K} to {set(s.apply_set(K.elements))}, not {A}")
        values.append(((K, s), casimir_along(K, s)))
    (K0, s0), ref = values[0]
    for (K, s), val in values[1:]:
        report.add(
            Check.zero(f"K={K0} s={list(s0.word)} vs K={K} s={list(s.word)}", val - ref)
        )
    return report

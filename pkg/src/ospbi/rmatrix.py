"""The universal R-matrix of osp(1|2) and the braid-group action it induces.

``R = (1 + P_i + P_j - P_i P_j) / 2`` in legs ``(i, j)``.  Although
``R^-1 == R`` for this algebra, inverses are spelled out wherever a
conjugation is meant so the formulas stay valid for other R-matrices.
"""

import random
from functools import lru_cache

from . import pbw, tensor
from .expression import ArityError
from .linear import accumulate
from .pbw import ONE_MONOMIAL, Generator, PBWMonomial
from .perm import Permutation
from .report import Check, Report
from .tensor import (
    TensorElement,
    apply_legwise,
    as_tensor,
    coproduct,
    coproduct_iter,
    swap_legs,
    unit,
)

_P = PBWMonomial(p=1)


@lru_cache(maxsize=None)
def universal_R(n, i, j):
    """``R_{ij}`` in arity ``n``."""
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ValueError(f"legs ({i}, {j}) invalid for arity {n}")
    one = (ONE_MONOMIAL,) * n

    def with_p(*legs):
        key = list(one)
        for leg in legs:
            key[leg - 1] = _P
        return tuple(key)

    half = pbw.Fraction(1, 2)
    terms = {one: half, with_p(i): half, with_p(j): half, with_p(i, j): -half}
    return TensorElement(n, terms)


def universal_R_inverse(n, i, j):
    # R is an involution for osp(1|2).
    return universal_R(n, i, j)


def braided_conjugate(x, i):
    """``Rc_i x Rc_i^-1`` with ``Rc_i = R_{i,i+1} sigma_{i,i+1}``."""
    n = x.arity
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} out of range for arity {n}")
    return universal_R(n, i, i + 1) * swap_legs(x, i) * universal_R_inverse(n, i, i + 1)


def gamma(s, x):
    """Braid action of the word ``s = s_{i1} ... s_{ip}`` on ``x``.

    ``s`` may be a ``Permutation`` or a bare word; the rightmost letter is
    applied first.
    """
    x = as_tensor(x)
    if not isinstance(s, Permutation):
        s = Permutation(x.arity, tuple(s))
    if s.n != x.arity:
        raise ArityError(f"permutation on {s.n} legs applied to arity {x.arity}")
    for i in reversed(s.word):
        x = braided_conjugate(x, i)
    return x


def coaction(x, side="hat"):
    """``hat: R^-1 (1 # x) R``; ``check: R^-1 (x # 1) R``."""
    x = as_tensor(x)
    if side == "hat":
        placed = tensor.tensor_product(unit(1), x)
    elif side == "check":
        placed = tensor.tensor_product(x, unit(1))
    else:
        raise ValueError(f"side must be 'hat' or 'check', not {side!r}")
    return universal_R_inverse(2, 1, 2) * placed * universal_R(2, 1, 2)


def _coaction_map(side):
    cache = {}

    def f(m):
        if m not in cache:
            cache[m] = coaction(pbw.PBWElement._from_clean({m: pbw.Fraction(1)}), side)
        return cache[m]

    return f


def apply_coaction(x, leg, side):
    """Apply the coaction to one leg of ``x`` (raising its arity by one)."""
    maps = [None] * x.arity
    maps[leg - 1] = _coaction_map(side)
    return apply_legwise(x, maps)


def _delta_map(k=1):
    return lambda m: coproduct_iter(k, pbw.PBWElement._from_clean({m: pbw.Fraction(1)}))


def random_element(n, rng, terms=4, max_degree=3):
    """Pseudo-random test element of arity ``n``."""
    out = {}
    for _ in range(terms):
        key = []
        for _ in range(n):
            word = tuple(sorted(rng.choice(list(Generator)) for _ in range(rng.randint(0, max_degree))))
            key.append(pbw.PBWElement._from_clean(dict(pbw._normal_word(word))))
        elem = tensor.tensor_product(*key)
        coeff = rng.randint(-3, 3) or 1
        for k, c in elem.terms.items():
            accumulate(out, k, coeff * c)
    return TensorElement(n, out)


GENERATORS = tuple(Generator)


def verify_r_properties(n=3, seed=0):
    """Check every R-matrix identity used by the construction.

    Arity-2/3 identities are checked as such; the braided identities are
    checked in arity ``n``.
    """
    if not 2 <= n <= 4:
        raise ValueError("verify_r_properties supports 2 <= n <= 4")
    report = Report(f"R-matrix properties (n={n})")
    R = universal_R(2, 1, 2)
    for g in GENERATORS:
        x = pbw.generator(g)
        report.add(
            Check.zero(
                f"Delta({g.name}) R = R Delta^op({g.name})",
                coproduct(x) * R - R * coproduct(x, opposite=True),
            )
        )
    report.add(Check.zero("R^2 = 1#1", R * R - unit(2)))
    report.add(Check.zero("R R^-1 = 1#1", R * universal_R_inverse(2, 1, 2) - unit(2)))
    report.add(Check.zero("R_21 = R", universal_R(2, 2, 1) - R))
    R12, R13, R23 = (universal_R(3, *ij) for ij in ((1, 2), (1, 3), (2, 3)))
    report.add(
        Check.zero("(id#Delta) R = R12 R13", apply_legwise(R, [None, _delta_map()]) - R12 * R13)
    )
    report.add(
        Check.zero("(Delta#id) R = R23 R13", apply_legwise(R, [_delta_map(), None]) - R23 * R13)
    )
    report.add(Check.zero("R12 R13 R23 = R23 R13 R12", R12 * R13 * R23 - R23 * R13 * R12))
    report.add(Check.zero("[R12, R13] = 0", R12.commutator(R13)))

    rng = random.Random(seed)
    for i in range(1, n):
        for g in GENERATORS:
            d = coproduct_iter(n - 1, pbw.generator(g))
            report.add(
                Check.zero(f"gamma(s{i}) Delta^({n - 1})({g.name}) = Delta^({n - 1})({g.name})",
                           gamma((i,), d) - d)
            )
    for i in range(1, n - 1):
        x = random_element(n, rng)
        report.add(
            Check.zero(
                f"braided YBE: gamma(s{i} s{i + 1} s{i}) = gamma(s{i + 1} s{i} s{i + 1})",
                gamma((i, i + 1, i), x) - gamma((i + 1, i, i + 1), x),
            )
        )
    for g in GENERATORS:
        x = pbw.generator(g)
        hat = coaction(x, "hat")
        check = coaction(x, "check")
        report.add(
            Check.zero(
                f"(id#tau^)tau^({g.name}) = (Delta#id)tau^({g.name})",
                apply_coaction(hat, 2, "hat") - apply_legwise(hat, [_delta_map(), None]),
            )
        )
        report.add(
            Check.zero(
                f"(tauv#id)tauv({g.name}) = (id#Delta)tauv({g.name})",
                apply_coaction(check, 1, "check") - apply_legwise(check, [None, _delta_map()]),
            )
        )
    return report

"""Bannai-Ito relations among the intermediate Casimirs.

For subsets ``A, B`` of ``[n]`` (with ``C_{} = 1``)::

    {C_A, C_B} = 2 (-C_{A^B} + C_{A-B} C_{B-A} + C_{A&B} C_{A|B})
"""

import os
import platform
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from . import __version__
from .casimir import (
    SubsetIndex,
    all_subsets,
    centralizer_residuals,
    intermediate_casimir,
    simple_embedding_casimir,
)
from .report import Check, Report
from .rmatrix import gamma


@dataclass(frozen=True)
class BIRelationResidual:
    A: SubsetIndex
    B: SubsetIndex
    residual: object

    @property
    def is_zero(self):
        return self.residual.is_zero


def _generator(X, scale):
    c = intermediate_casimir(X)
    return c if not len(X) or scale == 1 else c.scale(scale)


def bi_relation_sides(A, B, scale=1):
    """``(lhs, rhs)`` of the relation for the pair ``(A, B)``.

    ``scale`` rescales every nonempty generator; anything but 1 is a
    deliberately wrong normalisation used as a negative control.
    """
    if A.n != B.n:
        raise ValueError(f"ambient arities differ: {A.n} vs {B.n}")
    scale = Fraction(scale)
    ca, cb = _generator(A, scale), _generator(B, scale)
    lhs = ca.anticommutator(cb)
    rhs = 2 * (
        -_generator(A ^ B, scale)
        + _generator(A - B, scale) * _generator(B - A, scale)
        + _generator(A & B, scale) * _generator(A | B, scale)
    )
    return lhs, rhs


def bi_residual(A, B, scale=1):
    lhs, rhs = bi_relation_sides(A, B, scale)
    return BIRelationResidual(A, B, lhs - rhs)


def subset_pairs(n, include_empty=False):
    """Unordered pairs (with repetition) of subsets, lexicographic order."""
    return list(combinations_with_replacement(all_subsets(n, include_empty), 2))


def _pair_check(pair):
    A, B = pair
    res = bi_residual(A, B)
    return Check.zero(f"{{C{A}, C{B}}}", res.residual)


def _map(fn, items, jobs):
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def verify_bi(n, jobs=1, include_empty=False):
    """Residual of the relation for every unordered pair of nonempty subsets.

    Results come back in key order whatever ``jobs`` is.
    """
    if n < 2:
        raise ValueError("verify_bi needs n >= 2")
    pairs = subset_pairs(n, include_empty)
    report = Report(f"Bannai-Ito relations (n={n})")
    for check in _map(_pair_check, pairs, jobs):
        report.add(check)
    return report


def conjugated_bi1_residual():
    """``gamma_{s1}`` applied to ``{C12,C23} - rhs`` at ``n = 3``.

    Conjugation is an algebra map, so the image must vanish again; written
    out it is the second three-leg relation.
    """
    s = lambda *e: SubsetIndex(3, e)
    lhs, rhs = bi_relation_sides(s(1, 2), s(2, 3))
    return gamma((1,), lhs - rhs)


def _casimir_entry(A):
    c = intermediate_casimir(A)
    return {"subset": list(A.elements), "terms": len(c), "parity_profile": c.leg_parities()}


def structure_report(n, jobs=1, diagnostics=False, timings=False):
    """JSON-ready summary of every ``C_A`` and every relation checked.

    Keys are in lexicographic subset order; timings are only included when
    asked for so repeated runs stay byte-identical.
    """
    clock = {}
    t0 = time.perf_counter()
    subsets = all_subsets(n)
    casimirs = [_casimir_entry(A) for A in subsets]
    clock["casimirs_s"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    report = verify_bi(n, jobs=jobs)
    clock["relations_s"] = time.perf_counter() - t0
    relations = []
    for (A, B), check in zip(subset_pairs(n), report.checks):
        relations.append(
            {
                "A": list(A.elements),
                "B": list(B.elements),
                "status": "pass" if check.passed else "fail",
                "residual_terms": len(check.residual),
            }
        )
    doc = {
        "n": n,
        "ok": report.ok,
        "casimirs": casimirs,
        "relations": relations,
        "meta": {"versions": {"ospbi": __version__, "python": platform.python_version()}},
    }
    if diagnostics and n >= 3:
        bar = simple_embedding_casimir(SubsetIndex(n, (1, 3)))
        central = centralizer_residuals(bar, n)
        doc["diagnostics"] = [
            {
                "element": "Cbar_13",
                "centralizing": central.ok,
                "residual_terms": {c.name: len(c.residual) for c in central.checks},
            }
        ]
    if timings:
        doc["meta"]["timings"] = {k: round(v, 6) for k, v in clock.items()}
    return doc

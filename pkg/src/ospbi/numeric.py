"""Matrix representation of osp(1|2) used as an independent numeric oracle.

Tensor elements are evaluated through ``rho^{#n}`` with Kronecker
products, leg 1 being the most significant block.  Because the symbolic
tensor product carries no Koszul signs, neither does the Kronecker one.
"""

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from importlib import resources

import numpy as np

from . import expression as ex
from .pbw import DEFINING_RELATIONS, Generator
from .report import Check, Report
from .tensor import as_tensor

FORMAT = "ospbi-rep"
FORMAT_VERSION = 1
FLOAT_TOL = 1e-12
DEFAULT_BUDGET = 1 << 28


class RepError(ValueError):
    """Malformed representation data."""


class MemoryBudgetError(ValueError):
    """Requested matrix would exceed the configured budget."""


@dataclass(frozen=True)
class MatrixRep:
    dim: int
    grading: tuple
    matrices: dict  # Generator -> (dim, dim) ndarray, object(Fraction) or float
    exact: bool = True

    def __post_init__(self):
        for g in Generator:
            m = self.matrices.get(g)
            if m is None:
                raise RepError(f"missing matrix for {g.name}")
            if m.shape != (self.dim, self.dim):
                raise RepError(f"{g.name} has shape {m.shape}, expected {(self.dim, self.dim)}")
        if len(self.grading) != self.dim or any(s not in (1, -1) for s in self.grading):
            raise RepError(f"grading must be {self.dim} signs, got {self.grading}")

    def __getitem__(self, g):
        return self.matrices[Generator[g] if isinstance(g, str) else Generator(g)]

    def identity(self):
        return _identity(self.dim, self.exact)


def _identity(dim, exact=True):
    if not exact:
        return np.eye(dim)
    out = np.full((dim, dim), Fraction(0), dtype=object)
    for i in range(dim):
        out[i, i] = Fraction(1)
    return out


def _exact_zeros(dim):
    return np.full((dim, dim), Fraction(0), dtype=object)


def fundamental_rep():
    """Three-dimensional representation with basis of H-weights 1/2, 0, -1/2.

    The weight-0 vector is odd.  With ``Fp`` raising by 1 on both steps the
    relation ``{Fp, Fm} = H/2`` evaluated on each weight vector fixes ``Fm``:
    on weight 1/2 the single path gives 1/4, on weight 0 the two paths must
    cancel to 0, which leaves -1/4 on the lower step.  ``E+ = 4 Fp^2`` and
    ``E- = -4 Fm^2`` then follow from ``{F, F} = +-E/2``.
    """
    raise_steps = (Fraction(1), Fraction(1))
    weights = (Fraction(1, 2), Fraction(0), Fraction(-1, 2))
    fp = _exact_zeros(3)
    fm = _exact_zeros(3)
    fp[0, 1], fp[1, 2] = raise_steps
    # {Fp,Fm} = H/2 on the top vector, then on the middle one.
    fm[1, 0] = weights[0] / 2 / fp[0, 1]
    fm[2, 1] = -(fp[0, 1] * fm[1, 0]) / fp[1, 2]
    h = _exact_zeros(3)
    for i, w in enumerate(weights):
        h[i, i] = w
    grading = (1, -1, 1)
    p = _exact_zeros(3)
    for i, s in enumerate(grading):
        p[i, i] = Fraction(s)
    matrices = {
        Generator.Em: -4 * fm.dot(fm),
        Generator.Fm: fm,
        Generator.H: h,
        Generator.Fp: fp,
        Generator.Ep: 4 * fp.dot(fp),
        Generator.P: p,
    }
    return MatrixRep(3, grading, matrices, exact=True)


def _encode(value):
    if isinstance(value, Fraction):
        return str(value)
    return repr(float(value))


def rep_to_dict(rep):
    return {
        "format": FORMAT,
        "version": FORMAT_VERSION,
        "dim": rep.dim,
        "grading": list(rep.grading),
        "matrices": {g.name: [[_encode(v) for v in row] for row in rep.matrices[g]] for g in Generator},
    }


def _decode(value):
    if isinstance(value, bool):
        raise RepError(f"bad matrix entry {value!r}")
    if isinstance(value, int):
        return Fraction(value), True
    if isinstance(value, float):
        return value, False
    if isinstance(value, str):
        text = value.strip()
        try:
            if any(c in text.lower() for c in ".e") and "/" not in text:
                return float(text), False
            return Fraction(text), True
        except ValueError as err:
            raise RepError(f"bad matrix entry {value!r}") from err
    raise RepError(f"bad matrix entry {value!r}")


def rep_from_dict(doc):
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise RepError(f"not an {FORMAT} document")
    if doc.get("version") != FORMAT_VERSION:
        raise RepError(f"unsupported version {doc.get('version')!r}")
    try:
        dim = int(doc["dim"])
        grading = tuple(int(s) for s in doc["grading"])
        raw = doc["matrices"]
    except (KeyError, TypeError, ValueError) as err:
        raise RepError(f"incomplete representation document: {err}") from err
    decoded = {}
    exact = True
    for g in Generator:
        rows = raw.get(g.name)
        if not isinstance(rows, list) or len(rows) != dim or any(
            not isinstance(r, list) or len(r) != dim for r in rows
        ):
            raise RepError(f"{g.name} is not a {dim}x{dim} array")
        entries = [[_decode(v) for v in row] for row in rows]
        exact &= all(e for row in entries for _, e in row)
        decoded[g] = [[v for v, _ in row] for row in entries]
    matrices = {}
    for g, rows in decoded.items():
        if exact:
            matrices[g] = np.array(rows, dtype=object).reshape(dim, dim)
        else:
            matrices[g] = np.array([[float(v) for v in row] for row in rows], dtype=float)
    return MatrixRep(dim, grading, matrices, exact=exact)


def dumps_rep(rep):
    """Stable text form: one matrix row per line."""
    doc = rep_to_dict(rep)
    lines = ["{"]
    for key in ("format", "version", "dim", "grading"):
        lines.append(f"  {json.dumps(key)}: {json.dumps(doc[key])},")
    lines.append('  "matrices": {')
    names = list(doc["matrices"])
    for i, name in enumerate(names):
        rows = doc["matrices"][name]
        body = ",\n".join(f"      {json.dumps(r)}" for r in rows)
        comma = "," if i < len(names) - 1 else ""
        lines.append(f'    "{name}": [\n{body}\n    ]{comma}')
    lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def save_rep(rep, path):
    with open(path, "w") as fh:
        fh.write(dumps_rep(rep))


def load_rep(path=None):
    """Read a representation file; ``None`` loads the bundled fixture."""
    try:
        if path is None:
            text = resources.files("ospbi").joinpath("data/fundamental_rep.json").read_text()
        else:
            with open(path) as fh:
                text = fh.read()
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise RepError(f"invalid JSON: {err}") from err
    return rep_from_dict(doc)


def max_entry(m):
    if m.size == 0:
        return Fraction(0)
    return max(abs(v) for v in m.flat)


def _eval_expr(node, rep):
    """Matrix of an arity-1 expression tree, straight from the generators."""
    if isinstance(node, ex.Num):
        return rep.identity() * (node.value if rep.exact else float(node.value))
    if isinstance(node, ex.Sym):
        if node.name == "C":
            fp, fm, p = rep["Fp"], rep["Fm"], rep["P"]
            return 8 * (fp.dot(fm) - fm.dot(fp)).dot(p) + p
        return rep[node.name]
    if isinstance(node, ex.Add):
        return _eval_expr(node.left, rep) + _eval_expr(node.right, rep)
    if isinstance(node, ex.Sub):
        return _eval_expr(node.left, rep) - _eval_expr(node.right, rep)
    if isinstance(node, ex.Neg):
        return -_eval_expr(node.operand, rep)
    if isinstance(node, ex.Mul):
        return _eval_expr(node.left, rep).dot(_eval_expr(node.right, rep))
    if isinstance(node, ex.Pow):
        base = _eval_expr(node.base, rep)
        return reduce(np.dot, [base] * node.exponent, rep.identity())
    if isinstance(node, ex.Bracket):
        a, b = _eval_expr(node.left, rep), _eval_expr(node.right, rep)
        return a.dot(b) + b.dot(a) if node.anti else a.dot(b) - b.dot(a)
    raise ex.ArityError("only arity-1 expressions evaluate on a single copy")


def check_rep(rep):
    """Residual norm of every defining relation on ``rep``."""
    tol = 0 if rep.exact else FLOAT_TOL
    report = Report(f"representation relations (dim={rep.dim})")
    for rel in DEFINING_RELATIONS:
        lhs = _eval_expr(ex.parse_expression(rel.lhs), rep)
        rhs = _eval_expr(ex.parse_expression(rel.rhs), rep)
        norm = max_entry(lhs - rhs)
        report.add(Check(rel.name, norm <= tol, value=norm))
    p = rep["P"]
    diag = rep.identity() * 0
    for i, s in enumerate(rep.grading):
        diag[i, i] = s
    norm = max_entry(p - diag)
    report.add(Check("P = diag(grading)", norm <= tol, value=norm))
    return report


def memory_budget():
    value = os.environ.get("BI_MEMORY_BUDGET")
    return int(value) if value else DEFAULT_BUDGET


def _monomial_matrix(rep, m, cache):
    if m not in cache:
        out = rep.identity()
        for g in m.word():
            out = out.dot(rep.matrices[g])
        cache[m] = out
    return cache[m]


def evaluate(x, rep, budget=None):
    """``rho^{#n}(x)`` as a ``dim^n`` square matrix."""
    x = as_tensor(x)
    size = rep.dim ** x.arity
    need = size * size * (64 if rep.exact else 8)
    budget = memory_budget() if budget is None else budget
    if need > budget:
        raise MemoryBudgetError(f"{size}x{size} matrix needs ~{need} bytes, budget is {budget}")
    out = _identity(size, rep.exact) * 0
    cache = {}
    for key, coeff in x.terms.items():
        block = reduce(np.kron, (_monomial_matrix(rep, m, cache) for m in key))
        out = out + block * (coeff if rep.exact else float(coeff))
    return out


def numeric_residual(x, rep, budget=None):
    """Largest absolute entry of ``rho^{#n}(x)``."""
    return max_entry(evaluate(x, rep, budget))


def casimir_scalar(rep):
    """Eigenvalue of the Casimir on ``rep`` if it acts as a scalar, else ``None``."""
    c = _eval_expr(ex.Sym("C"), rep)
    lam = c[0, 0]
    tol = 0 if rep.exact else FLOAT_TOL
    return lam if max_entry(c - rep.identity() * lam) <= tol else None


# Matrix-side constructions that bypass the symbolic engine.  The symbolic
# C_A only enters through ``evaluate``; every product, bracket, coproduct
# and R-matrix below is formed with numpy.


def _kron_all(mats):
    return reduce(np.kron, mats)


def diagonal_generator(rep, g, n):
    """``rho^{#n}(Delta^(n-1)(g))`` built leg by leg.

    Odd generators pick up ``P`` on every leg to their right.
    """
    g = Generator[g] if isinstance(g, str) else Generator(g)
    ident, m, p = rep.identity(), rep.matrices[g], rep.matrices[Generator.P]
    if g == Generator.P:
        return _kron_all([p] * n)
    tail = p if g.odd else ident
    total = None
    for i in range(n):
        block = _kron_all([ident] * i + [m] + [tail] * (n - i - 1))
        total = block if total is None else total + block
    return total


def r_matrix(rep, n, i, j):
    """``rho^{#n}(R_ij)`` from the grade involution."""
    ident, p = rep.identity(), rep.matrices[Generator.P]

    def placed(*legs):
        return _kron_all([p if k + 1 in legs else ident for k in range(n)])

    half = Fraction(1, 2) if rep.exact else 0.5
    return (placed() + placed(i) + placed(j) - placed(i, j)) * half


def leg_swap(rep, n, i):
    """Permutation matrix exchanging tensor legs ``i`` and ``i + 1``."""
    d = rep.dim
    size = d ** n
    out = _identity(size, rep.exact) * 0
    one = Fraction(1) if rep.exact else 1.0
    for index in range(size):
        digits = list(np.unravel_index(index, (d,) * n))
        digits[i - 1], digits[i] = digits[i], digits[i - 1]
        out[np.ravel_multi_index(digits, (d,) * n), index] = one
    return out


def matrix_centralizer_residuals(matrix, rep, n):
    """Max entry of ``[rho(Delta^(n-1)(g)), matrix]`` for each generator."""
    out = {}
    for g in Generator:
        d = diagonal_generator(rep, g, n)
        out[g.name] = max_entry(d.dot(matrix) - matrix.dot(d))
    return out


def matrix_bi_residual(A, B, rep, scale=1, cache=None):
    """Max entry of the Bannai-Ito residual formed with matrix products.

    Only the individual ``C_X`` come from the symbolic engine; pass a dict
    as ``cache`` to reuse their matrices across pairs.
    """
    from .casimir import intermediate_casimir

    scale = Fraction(scale) if rep.exact else float(Fraction(scale))
    cache = {} if cache is None else cache

    def c(X):
        if X not in cache:
            cache[X] = evaluate(intermediate_casimir(X), rep)
        m = cache[X]
        return m if not len(X) else m * scale

    ca, cb = c(A), c(B)
    lhs = ca.dot(cb) + cb.dot(ca)
    rhs = (-c(A ^ B) + c(A - B).dot(c(B - A)) + c(A & B).dot(c(A | B))) * 2
    return max_entry(lhs - rhs)

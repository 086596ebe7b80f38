"""Tensor powers of U(osp(1|2)).

The tensor product is the ordinary one: ``(a # b)(c # d) = ac # bd`` with
no Koszul sign.  The super structure is carried by the grade involution
``P`` inside the coproduct, ``Delta(F) = F # P + 1 # F``, so unsigned
products are correct here (the bosonised presentation).  Mixing in a
signed product would silently break every identity downstream.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import expression as ex
from . import pbw
from .expression import ArityError
from .linear import LinearCombination, accumulate, as_scalar
from .pbw import ONE_MONOMIAL, Generator, PBWElement, PBWMonomial
from .perm import Permutation


class TensorElement(LinearCombination):
    """Sparse combination of ``arity``-tuples of PBW monomials."""

    __slots__ = ("arity",)

    def __init__(self, arity, terms=None):
        if arity < 1:
            raise ValueError("arity must be at least 1")
        self.arity = arity
        super().__init__(terms)

    def _check_key(self, key):
        key = tuple(key)
        if len(key) != self.arity or not all(isinstance(m, PBWMonomial) for m in key):
            raise ValueError(f"tensor monomial of arity {self.arity} expected: {key!r}")
        return key

    def _like(self, terms):
        return TensorElement._from_clean(terms, arity=self.arity)

    def _shape(self):
        return self.arity

    def _check_compatible(self, other):
        super()._check_compatible(other)
        if other.arity != self.arity:
            raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")

    def scalar(self, value):
        value = as_scalar(value)
        key = (ONE_MONOMIAL,) * self.arity
        return self._like({key: value} if value else {})

    def _product(self, other):
        out = {}
        cache = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                legs = []
                for m1, m2 in zip(k1, k2):
                    pair = (m1, m2)
                    if pair not in cache:
                        cache[pair] = pbw.monomial_product(m1, m2)
                    legs.append(cache[pair])
                coeff = c1 * c2
                if all(len(leg) == 1 for leg in legs):
                    c = coeff
                    for leg in legs:
                        c *= leg[0][1]
                    accumulate(out, tuple(leg[0][0] for leg in legs), c)
                    continue
                for combo in product(*legs):
                    c = coeff
                    for _, lc in combo:
                        c *= lc
                    accumulate(out, tuple(m for m, _ in combo), c)
        return self._like(out)

    def leg_parities(self):
        """Term count per parity pattern, e.g. ``{"0101": 4}``."""
        profile = {}
        for key in self._terms:
            pattern = "".join(str(m.parity) for m in key)
            profile[pattern] = profile.get(pattern, 0) + 1
        return dict(sorted(profile.items()))

    def to_pbw(self):
        if self.arity != 1:
            raise ArityError(f"arity-1 element expected, got arity {self.arity}")
        return PBWElement._from_clean({k[0]: c for k, c in self._terms.items()})

    def __repr__(self):
        return f"TensorElement({self.arity}, {self})"

    def __str__(self):
        items = []
        for key, coeff in self.sorted_terms():
            items.append((" # ".join(str(m) for m in key), coeff))
        return pbw.format_terms(items)


def as_tensor(x):
    """Identify an arity-1 ``PBWElement`` with a ``TensorElement``."""
    if isinstance(x, TensorElement):
        return x
    if isinstance(x, PBWElement):
        return TensorElement._from_clean({(m,): c for m, c in x.terms.items()}, arity=1)
    raise TypeError(f"algebra element expected, got {type(x).__name__}")


def unit(n):
    return TensorElement._from_clean({(ONE_MONOMIAL,) * n: Fraction(1)}, arity=n)


def zero(n):
    return TensorElement._from_clean({}, arity=n)


def tensor_product(*factors):
    """Outer product ``x1 # x2 # ...`` of elements of any arities."""
    factors = [as_tensor(f) for f in factors]
    terms = {(): Fraction(1)}
    for f in factors:
        new = {}
        for k1, c1 in terms.items():
            for k2, c2 in f.terms.items():
                new[k1 + k2] = c1 * c2
        terms = new
    return TensorElement._from_clean(terms, arity=sum(f.arity for f in factors))


def embed(x, i, n):
    """``x`` placed in leg ``i`` (1-based) of arity ``n``."""
    if not 1 <= i <= n:
        raise IndexError(f"leg {i} out of range for arity {n}")
    x = as_tensor(x)
    if x.arity != 1:
        raise ArityError("only arity-1 elements can be embedded in a single leg")
    pad_l = (ONE_MONOMIAL,) * (i - 1)
    pad_r = (ONE_MONOMIAL,) * (n - i)
    return TensorElement._from_clean({pad_l + k + pad_r: c for k, c in x.terms.items()}, arity=n)


def tensor_multiply(x, y):
    if x.arity != y.arity:
        raise ArityError(f"arity mismatch: {x.arity} vs {y.arity}")
    return x * y


_DELTA_GENERATORS = {
    Generator.Em: "Em # 1 + 1 # Em",
    Generator.Ep: "Ep # 1 + 1 # Ep",
    Generator.H: "H # 1 + 1 # H",
    Generator.Fm: "Fm # P + 1 # Fm",
    Generator.Fp: "Fp # P + 1 # Fp",
    Generator.P: "P # P",
}


@lru_cache(maxsize=None)
def _delta_generator(g):
    return evaluate(_DELTA_GENERATORS[g])


@lru_cache(maxsize=None)
def _delta_monomial(m):
    result = unit(2)
    for g in m.word():
        result = result * _delta_generator(g)
    return result


@lru_cache(maxsize=None)
def _delta_iter_monomial(k, m):
    if k == 0:
        return TensorElement._from_clean({(m,): Fraction(1)}, arity=1)
    return apply_legwise(_delta_monomial(m), [None, lambda x: _delta_iter_monomial(k - 1, x)])


def coproduct(x, opposite=False):
    """``Delta(x)``, or ``Delta^op(x)`` (legs swapped) when ``opposite``."""
    x = as_tensor(x)
    if x.arity != 1:
        raise ArityError("coproduct takes an arity-1 element")
    out = {}
    for (m,), c in x.terms.items():
        for key, dc in _delta_monomial(m).terms.items():
            if opposite:
                key = key[::-1]
            accumulate(out, key, c * dc)
    return TensorElement._from_clean(out, arity=2)


def coproduct_iter(k, x):
    """``Delta^(k)`` with ``Delta^(0) = id`` and ``Delta^(k) = (id # Delta^(k-1)) Delta``."""
    if k < 0:
        raise ValueError("iteration count must be non-negative")
    x = as_tensor(x)
    if x.arity != 1:
        raise ArityError("iterated coproduct takes an arity-1 element")
    out = {}
    for (m,), c in x.terms.items():
        for key, dc in _delta_iter_monomial(k, m).terms.items():
            accumulate(out, key, c * dc)
    return TensorElement._from_clean(out, arity=k + 1)


def apply_legwise(x, maps):
    """Apply one linear map per leg and tensor the images together.

    ``maps[i]`` is ``None`` (identity) or a callable taking a PBWMonomial to
    a TensorElement; the result's arity is the sum of the image arities.
    """
    if len(maps) != x.arity:
        raise ArityError(f"{len(maps)} leg maps for an arity-{x.arity} element")
    caches = [{} for _ in maps]

    def image(i, m):
        cache = caches[i]
        if m not in cache:
            f = maps[i]
            if f is None:
                cache[m] = (((m,), Fraction(1)),)
            else:
                cache[m] = tuple(as_tensor(f(m)).terms.items())
        return cache[m]

    out = {}
    arity = None
    for key, coeff in x.terms.items():
        for combo in product(*(image(i, m) for i, m in enumerate(key))):
            c = coeff
            k = ()
            for part, pc in combo:
                c *= pc
                k += part
            accumulate(out, k, c)
            arity = len(k)
    if arity is None:
        arity = sum(1 if f is None else as_tensor(f(ONE_MONOMIAL)).arity for f in maps)
    return TensorElement._from_clean(out, arity=arity)


def apply_positional(x, plan):
    """Apply ``Delta^(k)`` to each leg, ``plan[i]`` being ``k`` or ``"id"``.

    ``0`` and ``"id"`` both mean the identity.
    """
    if len(plan) != x.arity:
        raise ArityError(f"plan of length {len(plan)} for arity {x.arity}")
    maps = []
    for entry in plan:
        k = 0 if entry in ("id", None) else int(entry)
        if k < 0:
            raise ValueError("coproduct order must be non-negative")
        maps.append(None if k == 0 else (lambda m, k=k: _delta_iter_monomial(k, m)))
    return apply_legwise(x, maps)


def permute_factors(x, s):
    """Move the content of leg ``i`` to leg ``s(i)``; no signs.

    ``s`` is a ``Permutation`` or a one-line tuple of images.
    """
    if not isinstance(s, Permutation):
        s = Permutation.from_one_line(s)
    if s.n != x.arity:
        raise ArityError(f"permutation on {s.n} legs applied to arity {x.arity}")
    images = s.one_line()
    out = {}
    for key, coeff in x.terms.items():
        new = [None] * x.arity
        for i, m in enumerate(key):
            new[images[i] - 1] = m
        out[tuple(new)] = coeff
    return TensorElement._from_clean(out, arity=x.arity)


def swap_legs(x, i):
    """Exchange legs ``i`` and ``i + 1``."""
    return permute_factors(x, Permutation(x.arity, (i,)))


def insert_unit(x, pos):
    """Insert a unit leg so that it becomes leg ``pos`` of the result."""
    x = as_tensor(x)
    if not 1 <= pos <= x.arity + 1:
        raise IndexError(f"position {pos} out of range for arity {x.arity}")
    j = pos - 1
    out = {k[:j] + (ONE_MONOMIAL,) + k[j:]: c for k, c in x.terms.items()}
    return TensorElement._from_clean(out, arity=x.arity + 1)


def evaluate(expr):
    """Evaluate an expression (or its text) of any arity to a TensorElement."""
    if isinstance(expr, str):
        expr = ex.parse_expression(expr)
    result = _eval(expr)
    if not isinstance(result, TensorElement):
        return TensorElement(1, {(ONE_MONOMIAL,): result})
    return result


def _lift(value, arity):
    if isinstance(value, TensorElement):
        return value
    return unit(arity).scale(value)


def _binary(a, b, op):
    if isinstance(a, TensorElement) or isinstance(b, TensorElement):
        arity = a.arity if isinstance(a, TensorElement) else b.arity
        a, b = _lift(a, arity), _lift(b, arity)
        if a.arity != b.arity:
            raise ArityError(f"arity mismatch: {a.arity} vs {b.arity}")
    return op(a, b)


def _eval(node):
    if isinstance(node, ex.Num):
        return node.value
    if isinstance(node, ex.Sym):
        return as_tensor(pbw.casimir() if node.name == "C" else pbw.generator(node.name))
    if isinstance(node, ex.Add):
        return _binary(_eval(node.left), _eval(node.right), lambda a, b: a + b)
    if isinstance(node, ex.Sub):
        return _binary(_eval(node.left), _eval(node.right), lambda a, b: a - b)
    if isinstance(node, ex.Neg):
        return -_eval(node.operand)
    if isinstance(node, ex.Mul):
        return _binary(_eval(node.left), _eval(node.right), lambda a, b: a * b)
    if isinstance(node, ex.Pow):
        return _eval(node.base) ** node.exponent
    if isinstance(node, ex.Bracket):
        sign = 1 if node.anti else -1
        return _binary(_eval(node.left), _eval(node.right), lambda a, b: a * b + sign * (b * a))
    if isinstance(node, ex.Tensor):
        return tensor_product(*(_lift(_eval(leg), 1) for leg in node.legs))
    raise TypeError(f"not an expression node: {node!r}")

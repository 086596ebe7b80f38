"""Sparse linear combinations with exact rational coefficients."""

from fractions import Fraction
from numbers import Rational


def as_scalar(value):
    """Coerce ``value`` to a ``Fraction``; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"exact rational expected, got {type(value).__name__}")


def is_scalar(value):
    return isinstance(value, (int, Rational)) and not isinstance(value, bool)


def accumulate(target, key, coeff):
    """Add ``coeff`` to ``target[key]`` dropping the entry if it cancels."""
    total = target.get(key, 0) + coeff
    if total:
        target[key] = total
    else:
        target.pop(key, None)


class LinearCombination:
    """Immutable finite map ``key -> Fraction`` with no zero entries.

    Subclasses fix the key type and the product.  Instances must never be
    mutated after construction; ``terms`` is exposed read-only by convention.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, coeff in dict(terms).items():
                coeff = as_scalar(coeff)
                if coeff:
                    clean[self._check_key(key)] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, terms, **attrs):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        for name, value in attrs.items():
            setattr(obj, name, value)
        return obj

    def _like(self, terms):
        """New instance of the same kind (and shape) over ``terms``."""
        return type(self)._from_clean(terms)

    def _check_key(self, key):
        return key

    def _check_compatible(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    @property
    def terms(self):
        return self._terms

    @property
    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def coefficient(self, key):
        return self._terms.get(key, Fraction(0))

    def sorted_terms(self):
        return sorted(self._terms.items())

    def __eq__(self, other):
        if is_scalar(other):
            other = self.scalar(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._shape() == other._shape() and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._shape(), frozenset(self._terms.items())))
        return self._hash

    def _shape(self):
        return None

    def scalar(self, value):
        """``value`` times the unit, in the same shape as ``self``."""
        raise NotImplementedError

    def __add__(self, other):
        if is_scalar(other):
            other = self.scalar(other)
        elif not isinstance(other, LinearCombination):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            accumulate(out, key, coeff)
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if is_scalar(other):
            other = self.scalar(other)
        elif not isinstance(other, LinearCombination):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor):
        factor = as_scalar(factor)
        if not factor:
            return self._like({})
        return self._like({k: c * factor for k, c in self._terms.items()})

    def __mul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        if not isinstance(other, LinearCombination):
            return NotImplemented
        self._check_compatible(other)
        return self._product(other)

    def __rmul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if is_scalar(other):
            return self.scale(Fraction(1) / as_scalar(other))
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = self.scalar(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def _product(self, other):
        raise NotImplementedError

    def commutator(self, other):
        return self * other - other * self

    def anticommutator(self, other):
        return self * other + other * self

"""Expression trees for the osp(1|2) notation and their text parser.

Grammar (whitespace is insignificant)::

    expr    := tensor (('+' | '-') tensor)*
    tensor  := term ('#' term)*
    term    := ['-'] factor ('*'? factor)*
    factor  := atom ('^' nat)*
    atom    := rational | ident | '[' expr ',' expr ']'
             | '{' expr ',' expr '}' | '(' expr ')'
    ident   := Ep | Em | Fp | Fm | H | P | C

``#`` is the tensor separator and binds tighter than ``+``/``-`` but
looser than multiplication, so ``Fp # P + 1 # Fp`` is the coproduct of
``Fp``.  A rational literal is ``int`` or ``int/int``.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

IDENTIFIERS = ("Em", "Fm", "H", "Fp", "Ep", "P", "C")


class ParseError(ValueError):
    def __init__(self, message, text, pos):
        line = text.count("\n", 0, pos) + 1
        column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class ArityError(ValueError):
    """Tensor legs do not line up."""


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Bracket:
    left: object
    right: object
    anti: bool = False


@dataclass(frozen=True)
class Tensor:
    legs: tuple


def arity(expr):
    """Static arity of ``expr``; ``None`` for pure scalars."""
    if isinstance(expr, Num):
        return None
    if isinstance(expr, Sym):
        return 1
    if isinstance(expr, Tensor):
        return sum(arity(leg) or 1 for leg in expr.legs)
    if isinstance(expr, (Neg,)):
        return arity(expr.operand)
    if isinstance(expr, Pow):
        return arity(expr.base)
    if isinstance(expr, (Add, Sub, Mul, Bracket)):
        a, b = arity(expr.left), arity(expr.right)
        if a is not None and b is not None and a != b:
            raise ArityError(f"arity mismatch: {a} vs {b}")
        return a if a is not None else b
    raise TypeError(f"not an expression node: {expr!r}")


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<ident>[A-Za-z_]\w*)|(?P<op>[-+*^#,\[\]{}()]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, value=None):
        tok = self.tokens[self.i]
        if value is not None and tok[1] != value:
            found = tok[1] or "end of input"
            raise ParseError(f"expected {value!r}, found {found!r}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self):
        node = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", self.text, pos)
        arity(node)
        return node

    def expr(self):
        node = self.tensor()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.tensor()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def tensor(self):
        legs = [self.term()]
        while self.peek()[1] == "#":
            self.take()
            legs.append(self.term())
        return legs[0] if len(legs) == 1 else Tensor(tuple(legs))

    def term(self):
        negate = False
        if self.peek()[1] == "-":
            self.take()
            negate = True
        node = self.factor()
        while True:
            kind, value, _ = self.peek()
            if value == "*":
                self.take()
                node = Mul(node, self.factor())
            elif kind in ("num", "ident") or value in ("[", "{", "("):
                node = Mul(node, self.factor())
            else:
                break
        return Neg(node) if negate else node

    def factor(self):
        node = self.atom()
        while self.peek()[1] == "^":
            self.take()
            kind, value, pos = self.take()
            if kind != "num" or "/" in value:
                raise ParseError("exponent must be a natural number", self.text, pos)
            node = Pow(node, int(value))
        return node

    def atom(self):
        kind, value, pos = self.take()
        if kind == "num":
            return Num(Fraction(value.replace(" ", "")))
        if kind == "ident":
            if value not in IDENTIFIERS:
                raise ParseError(f"unknown identifier {value!r}", self.text, pos)
            return Sym(value)
        if value in ("[", "{"):
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("]" if value == "[" else "}")
            return Bracket(left, right, anti=(value == "{"))
        if value == "(":
            node = self.expr()
            self.take(")")
            return node
        found = value or "end of input"
        raise ParseError(f"unexpected {found!r}", self.text, pos)


def parse_expression(text):
    """Parse ``text`` into an expression tree.

    >>> parse_expression("2*H")
    Mul(left=Num(value=Fraction(2, 1)), right=Sym(name='H'))
    """
    return _Parser(text).parse()

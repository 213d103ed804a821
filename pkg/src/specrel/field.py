"""Exact ordered-field scalars.

Two field modes are supported: the rationals, and the Euclidean closure of
the rationals (every nonnegative element has a square root).  Irrational
elements live in a tower of quadratic extensions

    K_0 = Q,  K_n = K_{n-1}(sqrt(r_n)),  r_n in K_{n-1}, r_n > 0 not a square,

and are stored as nested pairs ``(level, a, b)`` meaning ``a + b*sqrt(r_level)``
with ``a`` and ``b`` of strictly lower level and ``b != 0``.  Within a given
tower this representation is unique, so equality is structural.  Scalars from
different towers are compared by embedding both into a merged tower.

No floating point is used anywhere.
"""

from __future__ import annotations

import enum
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

__all__ = [
    "DivisionByZero",
    "FieldError",
    "FieldMode",
    "NegativeInput",
    "NotEuclidean",
    "Ordering",
    "ParseError",
    "Scalar",
    "arithmetic",
    "as_scalar",
    "compare",
    "format_scalar",
    "parse_scalar",
    "sqrt",
]


class FieldError(ArithmeticError):
    """Base class for field arithmetic failures."""


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class NegativeInput(FieldError, ValueError):
    pass


class NotEuclidean(FieldError):
    """A square root was requested that does not exist in the active field."""


class ParseError(ValueError):
    pass


class FieldMode(str, enum.Enum):
    RATIONAL = "rational"
    EUCLIDEAN = "euclidean"


class Ordering(enum.Enum):
    LT = "lt"
    EQ = "eq"
    GT = "gt"


_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# Tower arithmetic on raw data.  ``T`` is the tuple of radicands; radicand
# ``T[i]`` has level <= i and the generator sqrt(T[i]) has level i + 1.
# ---------------------------------------------------------------------------

def _lvl(x) -> int:
    return 0 if type(x) is Fraction else x[0]


def _iszero(x) -> bool:
    return type(x) is Fraction and not x


def _add(x, y):
    if type(x) is Fraction and type(y) is Fraction:
        return x + y
    lx, ly = _lvl(x), _lvl(y)
    if lx > ly:
        return (lx, _add(x[1], y), x[2])
    if ly > lx:
        return (ly, _add(x, y[1]), y[2])
    b = _add(x[2], y[2])
    a = _add(x[1], y[1])
    if _iszero(b):
        return a
    return (lx, a, b)


def _neg(x):
    if type(x) is Fraction:
        return -x
    return (x[0], _neg(x[1]), _neg(x[2]))


def _mul(x, y, T):
    if type(x) is Fraction and type(y) is Fraction:
        return x * y
    if _iszero(x) or _iszero(y):
        return _ZERO
    lx, ly = _lvl(x), _lvl(y)
    if lx > ly:
        return (lx, _mul(x[1], y, T), _mul(x[2], y, T))
    if ly > lx:
        return (ly, _mul(x, y[1], T), _mul(x, y[2], T))
    r = T[lx - 1]
    a1, b1, a2, b2 = x[1], x[2], y[1], y[2]
    a = _add(_mul(a1, a2, T), _mul(_mul(b1, b2, T), r, T))
    b = _add(_mul(a1, b2, T), _mul(b1, a2, T))
    if _iszero(b):
        return a
    return (lx, a, b)


def _norm(x, T):
    """a^2 - b^2 r for x = a + b sqrt(r); lies one level down."""
    a, b = x[1], x[2]
    r = T[x[0] - 1]
    return _add(_mul(a, a, T), _neg(_mul(_mul(b, b, T), r, T)))


def _inv(x, T):
    if type(x) is Fraction:
        return 1 / x
    n_inv = _inv(_norm(x, T), T)
    return (x[0], _mul(x[1], n_inv, T), _neg(_mul(x[2], n_inv, T)))


def _sign(x, T) -> int:
    if type(x) is Fraction:
        return (x > 0) - (x < 0)
    sa = _sign(x[1], T)
    sb = _sign(x[2], T)
    if sa == 0 or sa == sb:
        return sb if sa == 0 else sa
    # opposite signs: the larger magnitude wins; the norm is never zero
    return sa if _sign(_norm(x, T), T) > 0 else sb


def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sqrt_level(x, n: int, T):
    """Nonnegative square root of ``x >= 0`` inside K_n, or None."""
    if _iszero(x):
        return _ZERO
    if n == 0:
        return _rational_sqrt(x)
    r = T[n - 1]
    if _lvl(x) < n:
        s = _sqrt_level(x, n - 1, T)
        if s is not None:
            return s
        q = _mul(x, _inv(r, T), T)
        s = _sqrt_level(q, n - 1, T)
        if s is not None:
            return (n, _ZERO, s)
        return None
    nrm = _norm(x, T)
    if _sign(nrm, T) < 0:
        return None
    root_n = _sqrt_level(nrm, n - 1, T)
    if root_n is None:
        return None
    a, b = x[1], x[2]
    half = Fraction(1, 2)
    for cand in (_add(a, root_n), _add(a, _neg(root_n))):
        cand = _mul(cand, half, T)
        if _sign(cand, T) <= 0:
            continue
        c = _sqrt_level(cand, n - 1, T)
        if c is None:
            continue
        d = _mul(b, _inv(_mul(Fraction(2), c, T), T), T)
        root = (n, c, d)
        if _sign(root, T) < 0:
            root = _neg(root)
        return root
    return None


def _embed(x, images, T):
    if type(x) is Fraction:
        return x
    a = _embed(x[1], images, T)
    b = _embed(x[2], images, T)
    return _add(a, _mul(b, images[x[0] - 1], T))


def _generator(level: int):
    return (level, _ZERO, _ONE)


@lru_cache(maxsize=4096)
def _merge(T1: tuple, T2: tuple):
    """Smallest tower extending T1 into which T2 embeds (real embedding)."""
    k = 0
    while k < min(len(T1), len(T2)) and T1[k] == T2[k]:
        k += 1
    T = tuple(T1)
    images = [_generator(j + 1) for j in range(k)]
    for j in range(k, len(T2)):
        s = _embed(T2[j], images, T)
        root = _sqrt_level(s, len(T), T)
        if root is None:
            T = T + (s,)
            root = _generator(len(T))
        images.append(root)
    return T, tuple(images)


def _squarefree_split(n: int, limit: int = 1000) -> tuple[int, int]:
    """Return (m, f) with n = m^2 * f, pulling out square factors of small
    primes and a square cofactor.  ``f`` is squarefree whenever n has no
    repeated prime factor above ``limit``."""
    m, f = 1, 1
    p = 2
    while p <= limit and p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            m *= p
        if n % p == 0:
            n //= p
            f *= p
        p += 1
    r = math.isqrt(n)
    if r * r == n:
        return m * r, f
    return m, f * n


# ---------------------------------------------------------------------------
# Public scalar type
# ---------------------------------------------------------------------------

Number = Union[int, Fraction, "Scalar"]


class Scalar:
    """An exact element of Q or of its Euclidean closure."""

    __slots__ = ("_tower", "_data")

    def __init__(self, value: int | Fraction | Scalar = 0):
        if isinstance(value, Scalar):
            self._tower, self._data = value._tower, value._data
        elif isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            self._tower, self._data = (), Fraction(value)
        else:
            raise TypeError(f"cannot make a Scalar from {type(value).__name__}")

    @classmethod
    def _make(cls, tower, data) -> Scalar:
        s = object.__new__(cls)
        s._data = data
        s._tower = tower[: _lvl(data)] if tower else ()
        return s

    # -- introspection -----------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return not self._tower

    @property
    def depth(self) -> int:
        """Number of quadratic extensions needed to express this value."""
        return len(self._tower)

    def as_fraction(self) -> Fraction:
        if self._tower:
            raise NotEuclidean(f"{format_scalar(self)} is not rational")
        return self._data

    def is_zero(self) -> bool:
        return _iszero(self._data)

    def sign(self) -> int:
        return _sign(self._data, self._tower)

    # -- coercion ------------------------------------------------------------
    def _common(self, other: Scalar):
        T1, T2 = self._tower, other._tower
        if T1 == T2 or T2 == T1[: len(T2)]:
            return T1, self._data, other._data
        if T1 == T2[: len(T1)]:
            return T2, self._data, other._data
        T, images = _merge(T1, T2)
        return T, self._data, _embed(other._data, images, T)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other: Number) -> Scalar:
        other = as_scalar(other)
        if not self._tower and not other._tower:
            return Scalar._make((), self._data + other._data)
        T, x, y = self._common(other)
        return Scalar._make(T, _add(x, y))

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar._make(self._tower, _neg(self._data))

    def __pos__(self) -> Scalar:
        return self

    def __sub__(self, other: Number) -> Scalar:
        return self + (-as_scalar(other))

    def __rsub__(self, other: Number) -> Scalar:
        return as_scalar(other) + (-self)

    def __mul__(self, other: Number) -> Scalar:
        other = as_scalar(other)
        if not self._tower and not other._tower:
            return Scalar._make((), self._data * other._data)
        T, x, y = self._common(other)
        return Scalar._make(T, _mul(x, y, T))

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise DivisionByZero("division by zero")
        return Scalar._make(self._tower, _inv(self._data, self._tower))

    def __truediv__(self, other: Number) -> Scalar:
        return self * as_scalar(other).inverse()

    def __rtruediv__(self, other: Number) -> Scalar:
        return as_scalar(other) * self.inverse()

    def __pow__(self, n: int) -> Scalar:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (self ** -n).inverse()
        out, base = Scalar(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __abs__(self) -> Scalar:
        return -self if self.sign() < 0 else self

    # -- comparison ----------------------------------------------------------
    def _cmp(self, other) -> int:
        other = as_scalar(other)
        if not self._tower and not other._tower:
            a, b = self._data, other._data
            return (a > b) - (a < b)
        return (self - other).sign()

    def __eq__(self, other) -> bool:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        other = as_scalar(other)
        if self._tower == other._tower:
            return self._data == other._data
        return (self - other).is_zero()

    def __hash__(self) -> int:
        # equal irrationals may sit in different towers, so only rationals
        # get a discriminating hash
        if not self._tower:
            return hash(self._data)
        return hash("specrel.irrational")

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)

    def __reduce__(self):
        return (parse_scalar, (format_scalar(self), FieldMode.EUCLIDEAN))


def as_scalar(v: Number) -> Scalar:
    if isinstance(v, Scalar):
        return v
    return Scalar(v)


ZERO = Scalar(0)
ONE = Scalar(1)


def arithmetic(a: Number, b: Number, op: str) -> Scalar:
    """Apply ``op`` in {add, sub, mul, div, neg}; ``neg`` ignores ``b``."""
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def compare(a: Number, b: Number) -> Ordering:
    c = as_scalar(a)._cmp(b)
    return Ordering.LT if c < 0 else Ordering.GT if c > 0 else Ordering.EQ


def sqrt(x: Number, mode: FieldMode | str = FieldMode.EUCLIDEAN) -> Scalar:
    """The unique nonnegative r with r*r == x."""
    x = as_scalar(x)
    mode = FieldMode(mode)
    s = x.sign()
    if s < 0:
        raise NegativeInput(f"sqrt of negative value {format_scalar(x)}")
    if s == 0:
        return ZERO
    T = x._tower
    root = _sqrt_level(x._data, len(T), T)
    if root is not None:
        return Scalar._make(T, root)
    if mode is FieldMode.RATIONAL:
        raise NotEuclidean(f"sqrt({format_scalar(x)}) is not in the rational field")
    if not T:
        # canonical radicand: squarefree positive integer
        q = x._data
        m, f = _squarefree_split(q.numerator * q.denominator)
        return Scalar._make((Fraction(f),), (1, _ZERO, Fraction(m, q.denominator)))
    T2 = T + (x._data,)
    return Scalar._make(T2, _generator(len(T2)))


def in_field(x: Scalar, mode: FieldMode | str) -> bool:
    return FieldMode(mode) is FieldMode.EUCLIDEAN or x.is_rational


# ---------------------------------------------------------------------------
# Literal syntax:  integers, p/q, sqrt(...), combined with + - * / and parens.
# ---------------------------------------------------------------------------

def _fmt(x, T) -> str:
    if type(x) is Fraction:
        return str(x)
    a, b = x[1], x[2]
    rad = f"sqrt({_fmt(T[x[0] - 1], T)})"
    if type(b) is Fraction:
        if b == 1:
            term = rad
        elif b == -1:
            term = "-" + rad
        else:
            term = f"{b}*{rad}"
    else:
        term = f"({_fmt(b, T)})*{rad}"
    if _iszero(a):
        return term
    if term.startswith("-"):
        return f"{_fmt(a, T)} - {term[1:]}"
    return f"{_fmt(a, T)} + {term}"


def format_scalar(x: Number) -> str:
    x = as_scalar(x)
    return _fmt(x._data, x._tower)


_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt)|([-+*/()]))")


def _tokenize(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            bad = text[pos:].lstrip()[:1]
            hint = " (decimal literals are not accepted)" if bad == "." else ""
            raise ParseError(f"unexpected {bad!r} at offset {pos} in {text!r}{hint}")
        pos = m.end()
        out.append(m.group(1) or m.group(2) or m.group(3))
    return out


class _Parser:
    def __init__(self, text: str, mode: FieldMode):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.mode = mode

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'a token'} in {self.text!r}")
        self.i += 1
        return tok

    def expr(self) -> Scalar:
        v = self.term()
        while self.peek() in ("+", "-"):
            if self.take() == "+":
                v = v + self.term()
            else:
                v = v - self.term()
        return v

    def term(self) -> Scalar:
        v = self.unary()
        while self.peek() in ("*", "/"):
            if self.take() == "*":
                v = v * self.unary()
            else:
                d = self.unary()
                if d.is_zero():
                    raise ParseError(f"zero denominator in {self.text!r}")
                v = v / d
        return v

    def unary(self) -> Scalar:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        return self.atom()

    def atom(self) -> Scalar:
        tok = self.take()
        if tok == "(":
            v = self.expr()
            self.take(")")
            return v
        if tok == "sqrt":
            self.take("(")
            v = self.expr()
            self.take(")")
            try:
                return sqrt(v, self.mode)
            except FieldError as exc:
                raise ParseError(f"{exc} (field mode {self.mode.value})") from exc
        if tok.isdigit():
            return Scalar(int(tok))
        raise ParseError(f"unexpected {tok!r} in {self.text!r}")


def parse_scalar(text: str | int, mode: FieldMode | str = FieldMode.EUCLIDEAN) -> Scalar:
    """Parse a scalar literal exactly.  Floats are rejected."""
    if isinstance(text, bool) or isinstance(text, float):
        raise ParseError(f"non-exact literal {text!r}")
    if isinstance(text, int):
        return Scalar(text)
    if not isinstance(text, str):
        raise ParseError(f"scalar literal must be a string or integer, got {type(text).__name__}")
    p = _Parser(text, FieldMode(mode))
    if not p.toks:
        raise ParseError("empty scalar literal")
    v = p.expr()
    if p.peek() is not None:
        raise ParseError(f"trailing input {p.peek()!r} in {text!r}")
    return v

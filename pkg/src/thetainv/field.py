"""Exact arithmetic in the number field Q(i, sqrt5).

Elements are stored as four integer numerators over one positive common
denominator, in the basis 1, i, s5, i*s5 (s5 = sqrt(5)).  Everything is
kept in lowest terms so that ``==`` and ``hash`` are structural.
"""

from fractions import Fraction
from math import gcd
import re

__all__ = ["Scalar", "ZERO", "ONE", "I", "SQRT5", "sc_arith", "sc_conj", "as_scalar"]


def _lcm(a, b):
    return a * b // gcd(a, b)


class Scalar:
    """An element a + b*i + c*s5 + d*i*s5 of Q(i, sqrt5)."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, r=0, i=0, s5=0, is5=0):
        fr = [Fraction(x) for x in (r, i, s5, is5)]
        den = 1
        for f in fr:
            den = _lcm(den, f.denominator)
        self._set(tuple(f.numerator * (den // f.denominator) for f in fr), den)

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj._set(num, den)
        return obj

    def _set(self, num, den):
        if den < 0:
            num = tuple(-n for n in num)
            den = -den
        g = gcd(*num, den)
        if g != 1:
            num = tuple(n // g for n in num)
            den //= g
        self._num = num
        self._den = den
        self._hash = None

    # -- coordinates ---------------------------------------------------
    @property
    def coords(self):
        """Rational coordinates (r, i, s5, is5)."""
        d = self._den
        return tuple(Fraction(n, d) for n in self._num)

    @property
    def numerators(self):
        return self._num

    @property
    def denominator(self):
        return self._den

    def is_zero(self):
        return not any(self._num)

    def is_rational(self):
        return not any(self._num[1:])

    def is_real(self):
        """True when the i and i*s5 coordinates vanish."""
        return self._num[1] == 0 and self._num[3] == 0

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def __complex__(self):
        a, b, c, d = (float(x) for x in self.coords)
        s = 5 ** 0.5
        return complex(a + c * s, b + d * s)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        d1, d2 = self._den, other._den
        if d1 == d2:
            return Scalar._raw(tuple(x + y for x, y in zip(self._num, other._num)), d1)
        return Scalar._raw(
            tuple(x * d2 + y * d1 for x, y in zip(self._num, other._num)), d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(tuple(-x for x in self._num), self._den)

    def __sub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Scalar._raw(tuple(x * other for x in self._num), self._den)
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self._num
        e, f, g, h = other._num
        num = (
            a * e - b * f + 5 * (c * g - d * h),
            a * f + b * e + 5 * (c * h + d * g),
            a * g + c * e - b * h - d * f,
            a * h + d * e + b * g + c * f,
        )
        return Scalar._raw(num, self._den * other._den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(i, sqrt5)")
        a, b, c, d = self._num
        # x = u + v*i with u = a + c*s5, v = b + d*s5; |x|^2 = u^2 + v^2 = n0 + n1*s5
        n0 = a * a + 5 * c * c + b * b + 5 * d * d
        n1 = 2 * (a * c + b * d)
        norm = n0 * n0 - 5 * n1 * n1  # rational norm of n0 + n1*s5, nonzero
        # 1/x = conj(x) * (n0 - n1*s5) / norm, scaled by den
        conj = Scalar._raw((a, -b, c, -d), 1)
        return conj * Scalar._raw((n0 * self._den, 0, -n1 * self._den, 0), norm)

    def __truediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self):
        """Complex conjugation i -> -i, fixing sqrt5."""
        a, b, c, d = self._num
        return Scalar._raw((a, -b, c, -d), self._den)

    # -- comparison ----------------------------------------------------
    def __eq__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return False
        return self._den == other._den and self._num == other._num

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self._num, self._den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __reduce__(self):
        return (Scalar, tuple(self.coords))

    # -- display -------------------------------------------------------
    def __repr__(self):
        return f"Scalar({', '.join(repr(str(c)) for c in self.coords)})"

    def __str__(self):
        return format_scalar(self)

    @classmethod
    def parse(cls, text):
        """Parse strings like ``"(1+s5)/4"``, ``"-3+s5"``, ``"2 - 3*i*s5"``, ``"1/2*i"``.

        ``√5`` may be written for ``s5``.
        """
        return _parse_expr(text)


ZERO = Scalar()
ONE = Scalar(1)
I = Scalar(0, 1)
SQRT5 = Scalar(0, 0, 1)

_UNITS = ("", "i", "√5", "i√5")


def as_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(x)
    return NotImplemented


def format_scalar(x):
    """Symbolic rendering, e.g. ``(1+√5)/4`` or ``-3+√5``."""
    if x.is_zero():
        return "0"
    den = x.denominator
    parts = []
    for n, unit in zip(x.numerators, _UNITS):
        if n == 0:
            continue
        mag = abs(n)
        body = unit if (mag == 1 and unit) else f"{mag}{unit}"
        parts.append(("-" if n < 0 else "+", body))
    text = "".join(s + b for s, b in parts)
    if text.startswith("+"):
        text = text[1:]
    if den == 1:
        return text
    if len(parts) == 1:
        return f"{text}/{den}"
    return f"({text})/{den}"


def sc_arith(op, x, y):
    """Apply one of ``add``, ``sub``, ``mul``, ``div``; division by zero raises ZeroDivisionError."""
    x, y = _coerce(x), _coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def sc_conj(x):
    return _coerce(x).conj()


def _coerce(x):
    if isinstance(x, str):
        return Scalar.parse(x)
    y = as_scalar(x)
    if y is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a Scalar")
    return y


# -- tiny expression parser for the CLI -------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(s5|√5|sqrt5)|(i)|(.))")


def _tokenize(text):
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, root, imag, other = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif root is not None:
            out.append(("atom", SQRT5))
        elif imag is not None:
            out.append(("atom", I))
        elif other.strip():
            if other not in "+-*/()":
                raise ValueError(f"unexpected character {other!r} at position {m.start(4)}")
            out.append(("op", other))
        pos = m.end()
    return out


def _parse_expr(text):
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty scalar expression")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of expression {text!r}")
        tok = tokens[pos]
        pos += 1
        return tok

    def expr():
        val = term()
        while peek() in (("op", "+"), ("op", "-")):
            _, o = take()
            rhs = term()
            val = val + rhs if o == "+" else val - rhs
        return val

    def term():
        val = unary()
        while True:
            kind, v = peek()
            if (kind, v) in (("op", "*"), ("op", "/")):
                take()
                rhs = unary()
                val = val * rhs if v == "*" else val / rhs
            elif kind in ("num", "atom") or (kind, v) == ("op", "("):
                val = val * unary()  # implicit product, e.g. "3i"
            else:
                return val

    def unary():
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return atom()

    def atom():
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of expression {text!r}")
        kind, v = take()
        if kind == "num":
            return Scalar(v)
        if kind == "atom":
            return v
        if v == "(":
            val = expr()
            if take() != ("op", ")"):
                raise ValueError(f"unbalanced parentheses in {text!r}")
            return val
        raise ValueError(f"unexpected token {v!r} in {text!r}")

    val = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return val

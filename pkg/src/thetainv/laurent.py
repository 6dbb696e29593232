"""Sparse Laurent polynomials over Q(i, sqrt5) in one and three variables."""

import warnings
from fractions import Fraction

from .field import Scalar, ZERO, as_scalar

__all__ = ["LaurentPoly", "TriLaurent", "lp_mul", "lp_substitute", "tl_substitute3"]


class _Sparse:
    """Immutable map from exponent keys to nonzero Scalars.

    Zero coefficients are dropped eagerly, so equality is structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, c in items:
                k = self._key(k)
                c = as_scalar(c)
                if c is NotImplemented:
                    raise TypeError(f"bad coefficient {c!r}")
                c = clean.get(k, ZERO) + c
                if c.is_zero():
                    clean.pop(k, None)
                else:
                    clean[k] = c
        self._terms = clean
        self._hash = None

    @staticmethod
    def _key(k):
        raise NotImplementedError

    @classmethod
    def _from_clean(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def coeff(self, key):
        return self._terms.get(self._key(key), ZERO)

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, Scalar)):
            return self == type(self).constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            c = out.get(k, ZERO) + c
            if c.is_zero():
                out.pop(k, None)
            else:
                out[k] = c
        return self._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return self._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s):
        s = as_scalar(s)
        if s.is_zero():
            return self._from_clean({})
        return self._from_clean({k: c * s for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        out = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = self._addkeys(k1, k2)
                out[k] = out.get(k, ZERO) + c1 * c2
        return self._from_clean({k: c for k, c in out.items() if not c.is_zero()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def conj(self):
        return self._from_clean({k: c.conj() for k, c in self._terms.items()})

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return type(self).constant(other)
        return NotImplemented

    def rational_vector(self):
        """Map (key, basis index) -> Fraction, flattening over the Q-basis 1, i, s5, i*s5."""
        out = {}
        for k, c in self._terms.items():
            for j, q in enumerate(c.coords):
                if q:
                    out[(k, j)] = q
        return out


class LaurentPoly(_Sparse):
    """Element of Q(i,sqrt5)[t, 1/t]; keys are integer exponents."""

    __slots__ = ()

    @staticmethod
    def _key(k):
        return int(k)

    @staticmethod
    def _addkeys(a, b):
        return a + b

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, e, c=1):
        return cls({e: c})

    def min_degree(self):
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def max_degree(self):
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def bar(self):
        """t -> 1/t."""
        return self._from_clean({-e: c for e, c in self._terms.items()})

    def substitute(self, k):
        """t -> x**k."""
        return lp_substitute(self, k)

    def __repr__(self):
        return f"LaurentPoly({ {e: str(c) for e, c in self.items()} })"

    def __str__(self):
        if not self._terms:
            return "0"
        return _join(_mono(c, "t" if e else "", e) for e, c in sorted(self._terms.items(), reverse=True))


class TriLaurent(_Sparse):
    """Element of Q(i,sqrt5)[t1^±1, t2^±1, t3^±1]; keys are exponent triples."""

    __slots__ = ()

    @staticmethod
    def _key(k):
        a, b, c = k
        return (int(a), int(b), int(c))

    @staticmethod
    def _addkeys(a, b):
        return (a[0] + b[0], a[1] + b[1], a[2] + b[2])

    @classmethod
    def constant(cls, c):
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, e, c=1):
        return cls({tuple(e): c})

    def permute(self, perm):
        """Rename variables: t_j -> t_{perm[j]} (0-based)."""
        out = {}
        for k, c in self._terms.items():
            nk = [0, 0, 0]
            for j in range(3):
                nk[perm[j]] = k[j]
            out[tuple(nk)] = c
        return self._from_clean(out)

    def invert(self):
        """t_j -> 1/t_j for all j."""
        return self._from_clean({(-a, -b, -c): v for (a, b, c), v in self._terms.items()})

    def substitute3(self, k1, k2, k3):
        return tl_substitute3(self, k1, k2, k3)

    def __repr__(self):
        return f"TriLaurent({ {k: str(c) for k, c in self.items()} })"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in sorted(self._terms.items(), reverse=True):
            mono = "".join(
                f"t{j + 1}" + (f"^{e}" if e != 1 else "") for j, e in enumerate(k) if e
            )
            parts.append(_coeff_prefix(c, bool(mono)) + mono)
        return _join(parts)


def _coeff_prefix(c, has_mono):
    s = str(c)
    if not has_mono:
        return s
    if s == "1":
        return ""
    if s == "-1":
        return "-"
    if any(ch in s for ch in "+-/") and not (s.startswith("-") and s[1:].isdigit()):
        return f"({s})"
    return s


def _mono(c, var, e):
    if not var:
        return str(c)
    mono = var + (f"^{e}" if e != 1 else "")
    return _coeff_prefix(c, True) + mono


def lp_mul(f, g):
    return f * g


def lp_substitute(f, k):
    """Substitute t -> x**k, merging coefficients.  k = 0 collapses to a constant (warns)."""
    if k == 0:
        warnings.warn("substituting t -> x^0 collapses the polynomial to a constant", stacklevel=2)
    out = {}
    for e, c in f.terms.items():
        out[k * e] = out.get(k * e, ZERO) + c
    return LaurentPoly(out)


def tl_substitute3(F, k1, k2, k3):
    """Evaluate t1 = x**k1, t2 = x**k2, t3 = x**k3."""
    out = {}
    for (a, b, c), v in F.terms.items():
        e = k1 * a + k2 * b + k3 * c
        out[e] = out.get(e, ZERO) + v
    return LaurentPoly(out)


def _join(parts):
    out = ""
    for k, p in enumerate(parts):
        if k == 0:
            out = p
        elif p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out

"""Target spaces of the Theta invariant and the maps W^0 / W^1.

ThetaClass holds exponent triples modulo the diagonal Z-shift, in canonical
form (sorted ascending, minimum 0, permutation sign folded in when eps = 0).
SThetaElt holds the image in Q(i,sqrt5)[t1^±1, t2^±1, t3^±1], which is the
representation used for every equality and rank question.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .field import Scalar, ZERO, ONE, as_scalar
from .laurent import TriLaurent, _join
from .sl2 import theta_weight, TensorSqLaurent

__all__ = [
    "ThetaClass", "SThetaElt", "DecoratedTheta",
    "normalize_triple", "embed_class", "embed_triple", "w_scalar", "w_lie", "f_poly", "coker_project",
    "check_parity",
]

_PERMS = tuple(permutations(range(3)))


def _perm_sign(p):
    inv = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
    return -1 if inv % 2 else 1


_SIGNED_PERMS = tuple((p, _perm_sign(p)) for p in _PERMS)


def check_parity(eps):
    if eps not in (0, 1):
        raise ValueError(f"parity must be 0 or 1, got {eps!r}")
    return eps


class ThetaClass:
    """Linear combination of canonical exponent triples, for parity eps."""

    __slots__ = ("eps", "terms")

    def __init__(self, eps, terms=None):
        self.eps = check_parity(eps)
        clean = {}
        for triple, c in (terms or {}).items():
            c = as_scalar(c)
            key, sgn = _canonical(eps, *triple)
            if key is None:
                continue
            v = clean.get(key, ZERO) + (c if sgn == 1 else -c)
            if v.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = v
        self.terms = clean

    def items(self):
        return sorted(self.terms.items())

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if not isinstance(other, ThetaClass):
            raise TypeError(f"expected ThetaClass, got {type(other).__name__}")
        if other.eps != self.eps:
            raise ValueError("mixed-parity arithmetic")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return ThetaClass(self.eps, out)

    def __neg__(self):
        return ThetaClass(self.eps, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = as_scalar(s)
        return ThetaClass(self.eps, {k: c * s for k, c in self.terms.items()})

    def __rmul__(self, s):
        return self.scale(s)

    def __eq__(self, other):
        return isinstance(other, ThetaClass) and self.eps == other.eps and self.terms == other.terms

    def __hash__(self):
        return hash((self.eps, frozenset(self.terms.items())))

    def __repr__(self):
        body = ", ".join(f"{c}*{list(k)}" for k, c in self.items())
        return f"ThetaClass(eps={self.eps}, {{{body}}})"

    def __str__(self):
        if not self.terms:
            return "0"
        op = "∧" if self.eps == 0 else "·"
        parts = []
        for k, c in self.items():
            z = zero_sum_rep(k) if sum(k) % 3 == 0 else k
            mono = op.join(_tpow(e) for e in z)
            cs = str(c)
            cs = {"1": "", "-1": "-"}.get(cs, cs if cs.lstrip("-").isdigit() else f"({cs})")
            parts.append(f"{cs}[{mono}]")
        return _join(parts)


def _tpow(e):
    if e == 0:
        return "1"
    if e == 1:
        return "t"
    return f"t^{e}"


def _canonical(eps, p, q, r):
    vals = (int(p), int(q), int(r))
    order = sorted(range(3), key=lambda j: vals[j])
    srt = tuple(vals[j] for j in order)
    if eps == 0 and (srt[0] == srt[1] or srt[1] == srt[2]):
        return None, 0
    sgn = _perm_sign(tuple(order)) if eps == 0 else 1
    m = srt[0]
    return (0, srt[1] - m, srt[2] - m), sgn


def normalize_triple(eps, p, q, r, coeff=ONE):
    """Canonical class of coeff * [t^p, t^q, t^r] (wedge for eps=0, symmetric for eps=1)."""
    return ThetaClass(eps, {(p, q, r): coeff})


def zero_sum_rep(triple):
    """The unique diagonal translate of a triple with exponent sum 0."""
    s = sum(triple)
    if s % 3:
        raise ValueError(f"triple {triple} has no translate with exponent sum 0")
    k = s // 3
    return tuple(e - k for e in triple)


@dataclass(frozen=True)
class SThetaElt:
    """An element of S_Theta^eps, stored by its image polynomial."""

    eps: int
    image: TriLaurent

    def __post_init__(self):
        check_parity(self.eps)

    def _check(self, other):
        if not isinstance(other, SThetaElt):
            raise TypeError(f"expected SThetaElt, got {type(other).__name__}")
        if other.eps != self.eps:
            raise ValueError("mixed-parity arithmetic")

    def __add__(self, other):
        self._check(other)
        return SThetaElt(self.eps, self.image + other.image)

    def __sub__(self, other):
        self._check(other)
        return SThetaElt(self.eps, self.image - other.image)

    def __neg__(self):
        return SThetaElt(self.eps, -self.image)

    def scale(self, s):
        return SThetaElt(self.eps, self.image.scale(s))

    def __rmul__(self, s):
        return self.scale(s)

    def is_zero(self):
        return self.image.is_zero()

    def symmetry_ok(self):
        """Image is (anti)symmetric under variable permutations and fixed by inversion."""
        f = self.image
        for p, sgn in _SIGNED_PERMS:
            g = f.permute(p)
            want = f if (self.eps == 1 or sgn == 1) else -f
            if g != want:
                return False
        return f.invert() == f

    def __str__(self):
        return str(self.image)


@dataclass(frozen=True)
class DecoratedTheta:
    """Theta(P t^a, Q t^b, R t^c) with TensorSqLaurent decorations, extended trilinearly."""

    eps: int
    decorations: tuple

    def __post_init__(self):
        check_parity(self.eps)
        if len(self.decorations) != 3:
            raise ValueError("a Theta-graph has three edges")
        for d in self.decorations:
            if not isinstance(d, TensorSqLaurent):
                raise TypeError("decorations must be TensorSqLaurent")


def _embed_triple(eps, triple):
    p, q, r = triple
    out = {}
    for perm, sgn in _SIGNED_PERMS:
        s = sgn if eps == 0 else 1
        for sign in (1, -1):
            key = [0, 0, 0]
            key[perm[0]] = sign * p
            key[perm[1]] = sign * q
            key[perm[2]] = sign * r
            key = tuple(key)
            out[key] = out.get(key, 0) + s
    return out


@lru_cache(maxsize=4096)
def _embed_canonical(eps, triple):
    return TriLaurent({k: v for k, v in _embed_triple(eps, zero_sum_rep(triple)).items() if v})


def embed_triple(eps, p, q, r):
    """Image of the literal S_Theta triple [t^p, t^q, t^r] (no shift is applied)."""
    check_parity(eps)
    raw = _embed_triple(eps, (int(p), int(q), int(r)))
    return SThetaElt(eps, TriLaurent({k: v for k, v in raw.items() if v}))


def embed_class(c):
    """Image in the trivariate Laurent ring; each triple is taken at its zero-sum translate."""
    out = TriLaurent()
    for triple, coeff in c.terms.items():
        out = out + _embed_canonical(c.eps, triple).scale(coeff)
    return SThetaElt(c.eps, out)


def w_scalar(eps, a, b, c):
    """W(Theta(t^a, t^b, t^c)) = [t^(b-a), t^(a-c), t^(c-b)]."""
    return normalize_triple(eps, b - a, a - c, c - b, ONE)


def w_lie(d):
    """Sum over monomials of theta_weight(P, Q, R) * embed(w_scalar(eps, a, b, c))."""
    eps = d.eps
    D1, D2, D3 = (x.terms for x in d.decorations)
    acc = {}
    for a, P in D1.items():
        for b, Q in D2.items():
            for c, R in D3.items():
                cls = w_scalar(eps, a, b, c)
                if cls.is_zero():
                    continue
                wt = theta_weight(P, Q, R)
                if wt.is_zero():
                    continue
                for triple, coeff in cls.terms.items():
                    acc[triple] = acc.get(triple, ZERO) + wt * coeff
    return embed_class(ThetaClass(eps, acc))


def f_poly(p):
    """The 12-term polynomial f_p(t1, t2, t3), the image of W^0(Theta(1, t, t^p))."""
    return _f_poly(int(p))


@lru_cache(maxsize=256)
def _f_poly(p):
    def m(e1, e2, e3):
        return (e1, e2, e3)

    terms = [
        (m(1, -p, p - 1), 1),
        (m(1, p - 1, -p), -1),
        (m(-p, 1, p - 1), -1),
        (m(p - 1, 1, -p), 1),
        (m(-p, p - 1, 1), 1),
        (m(p - 1, -p, 1), -1),
        (m(-1, p, -p + 1), 1),
        (m(-1, -p + 1, p), -1),
        (m(p, -1, -p + 1), -1),
        (m(-p + 1, -1, p), 1),
        (m(p, -p + 1, -1), 1),
        (m(-p + 1, p, -1), -1),
    ]
    out = {}
    for k, v in terms:
        out[k] = out.get(k, 0) + v
    return TriLaurent(out)


def coker_project(eps, x):
    """Project away the image of the untwisted (t-free) decorations.

    For eps = 0 that image is zero; for eps = 1 it is spanned by the
    constant polynomial, so the constant term is dropped.
    """
    check_parity(eps)
    if x.eps != eps:
        raise ValueError("mixed-parity projection")
    if eps == 0:
        return x
    terms = x.image.terms
    terms.pop((0, 0, 0), None)
    return SThetaElt(eps, TriLaurent(terms))

"""sl2 with its trace form, the algebra g (x) g, Ad(g) and the Theta-graph weight.

Basis is (h, e, f) with h = diag(1, -1), e = E_12, f = E_21 and the trace
form B(X, Y) = Tr(XY).  A tensor sum_ij T[i][j] b_i (x) b_j corresponds to
the endomorphism x -> sum_ij T[i][j] B(b_j, x) b_i, whose matrix on
coordinates is T @ G with G the Gram matrix of B.
"""

from fractions import Fraction
from itertools import product

from .field import Scalar, ZERO, ONE
from .laurent import LaurentPoly
from .linalg import ExactMatrix

__all__ = [
    "LieElt", "TensorSq", "TensorSqLaurent", "SU2Matrix",
    "H", "E", "F", "BASIS", "GRAM", "GRAM_INV",
    "bracket", "bform", "dual_elt", "casimir", "tsq_mul", "ad_of", "ad_endomorphism",
    "end_trace", "triple_trace", "theta_weight", "tr_pair",
    "bracket_matrix", "bracket_dual_matrix", "bracket_relation_coeff",
    "lie_from_matrix", "lie_to_matrix",
]


class LieElt:
    """x_h*h + x_e*e + x_f*f."""

    __slots__ = ("coords",)

    def __init__(self, h=0, e=0, f=0):
        self.coords = tuple(_s(x) for x in (h, e, f))

    def __add__(self, other):
        return LieElt(*(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return LieElt(*(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return LieElt(*(-a for a in self.coords))

    def __mul__(self, s):
        return LieElt(*(a * s for a in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, s):
        return LieElt(*(a / s for a in self.coords))

    def __eq__(self, other):
        return isinstance(other, LieElt) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "LieElt(" + ", ".join(str(c) for c in self.coords) + ")"


def _s(x):
    return x if isinstance(x, Scalar) else Scalar(x)


H = LieElt(1, 0, 0)
E = LieElt(0, 1, 0)
F = LieElt(0, 0, 1)
BASIS = (H, E, F)


def lie_to_matrix(X):
    h, e, f = X.coords
    return ExactMatrix([[h, e], [f, -h]])


def lie_from_matrix(m):
    if not (m[0, 0] + m[1, 1]).is_zero():
        raise ValueError("matrix is not traceless")
    return LieElt(m[0, 0], m[0, 1], m[1, 0])


def bracket(X, Y):
    a1, b1, c1 = X.coords
    a2, b2, c2 = Y.coords
    # [h,e] = 2e, [h,f] = -2f, [e,f] = h
    return LieElt(b1 * c2 - c1 * b2, 2 * (a1 * b2 - b1 * a2), 2 * (c1 * a2 - a1 * c2))


def bform(X, Y):
    a1, b1, c1 = X.coords
    a2, b2, c2 = Y.coords
    return 2 * a1 * a2 + b1 * c2 + c1 * b2


GRAM = ExactMatrix([[bform(u, v) for v in BASIS] for u in BASIS])
GRAM_INV = GRAM.inverse()


def dual_elt(X):
    """The B-dual: dual_elt(b_i) is the dual-basis vector b_i^*, extended linearly."""
    v = X.coords
    return LieElt(*(sum((GRAM_INV[i, j] * v[i] for i in range(3)), ZERO) for j in range(3)))


class TensorSq:
    """Element sum_ij coeffs[i][j] b_i (x) b_j of g (x) g."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs):
        grid = tuple(tuple(_s(x) for x in row) for row in coeffs)
        if len(grid) != 3 or any(len(r) != 3 for r in grid):
            raise ValueError("TensorSq needs a 3x3 grid")
        self.coeffs = grid
        self._hash = None

    @classmethod
    def from_matrix(cls, m):
        return cls(m.entries)

    @classmethod
    def pure(cls, X, Y):
        return cls([[x * y for y in Y.coords] for x in X.coords])

    def matrix(self):
        return ExactMatrix(self.coeffs)

    def endomorphism(self):
        """Matrix on (h, e, f)-coordinates of the corresponding element of End(g)."""
        return self.matrix() @ GRAM

    @classmethod
    def from_endomorphism(cls, m):
        return cls.from_matrix(m @ GRAM_INV)

    def swap(self):
        return TensorSq(tuple(zip(*self.coeffs)))

    def is_zero(self):
        return all(c.is_zero() for r in self.coeffs for c in r)

    def __add__(self, other):
        return TensorSq([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return TensorSq([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TensorSq([[-a for a in r] for r in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, TensorSq):
            return tsq_mul(self, other)
        s = _s(other)
        return TensorSq([[a * s for a in r] for r in self.coeffs])

    def __rmul__(self, other):
        s = _s(other)
        return TensorSq([[a * s for a in r] for r in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, TensorSq) and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        return f"TensorSq({[[str(c) for c in r] for r in self.coeffs]})"


class TensorSqLaurent:
    """Finite sum of TensorSq * t**n; zero tensors are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for n, T in (terms or {}).items():
            if n in clean:
                T = clean[n] + T
            if T.is_zero():
                clean.pop(n, None)
            else:
                clean[int(n)] = T
        self.terms = clean

    @classmethod
    def monomial(cls, T, n=0):
        return cls({n: T})

    def items(self):
        return sorted(self.terms.items())

    def __eq__(self, other):
        return isinstance(other, TensorSqLaurent) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for n, T in other.terms.items():
            out[n] = out[n] + T if n in out else T
        return TensorSqLaurent(out)

    def shift(self, k):
        return TensorSqLaurent({n + k: T for n, T in self.terms.items()})

    def left_mul(self, a):
        return TensorSqLaurent({n: tsq_mul(a, T) for n, T in self.terms.items()})

    def right_mul(self, a):
        return TensorSqLaurent({n: tsq_mul(T, a) for n, T in self.terms.items()})

    def __repr__(self):
        return f"TensorSqLaurent({self.terms!r})"


class SU2Matrix(ExactMatrix):
    """2x2 matrix with det 1 and conj-transpose equal to the inverse (checked exactly)."""

    __slots__ = ()

    def __init__(self, entries):
        super().__init__(entries)
        if self.shape != (2, 2):
            raise ValueError("SU2Matrix must be 2x2")
        if self.det() != ONE:
            raise ValueError(f"determinant {self.det()} != 1")
        if not (self @ self.conj_transpose()).is_identity():
            raise ValueError("matrix is not unitary")

    @classmethod
    def coerce(cls, m):
        if isinstance(m, SU2Matrix):
            return m
        return cls(m.entries)

    def inverse(self):
        return ExactMatrix(self.conj_transpose().entries)


def casimir():
    """The unit of (g (x) g, tsq_mul): 1/2 h(x)h + e(x)f + f(x)e."""
    return _CASIMIR


_CASIMIR = TensorSq(GRAM_INV.entries)


def tsq_mul(U, V):
    """(X1 (x) Y1)(X2 (x) Y2) = B(Y1, X2) X1 (x) Y2."""
    return TensorSq((U.matrix() @ GRAM @ V.matrix()).entries)


def ad_endomorphism(g):
    """3x3 matrix of X -> g X g^{-1} on (h, e, f)-coordinates."""
    g = SU2Matrix.coerce(g)
    gi = g.conj_transpose()
    cols = [lie_from_matrix(g @ lie_to_matrix(b) @ gi).coords for b in BASIS]
    return ExactMatrix([[cols[j][i] for j in range(3)] for i in range(3)])


def ad_of(g):
    """Ad(g) as an element of g (x) g, i.e. (Ad(g) (x) 1)(casimir)."""
    return TensorSq.from_endomorphism(ad_endomorphism(g))


def end_trace(T):
    """Trace of the endomorphism corresponding to T (this is B extended to g (x) g)."""
    return T.endomorphism().trace()


def triple_trace(X, Y, Z):
    """Tr(X (x) Y (x) Z) = B([X, Y], Z)."""
    return bform(bracket(X, Y), Z)


# nonzero structure constants B([b_i, b_j], b_k), as (i, j, k, value)
_STRUCT = tuple(
    (i, j, k, v)
    for i, j, k in product(range(3), repeat=3)
    for v in [triple_trace(BASIS[i], BASIS[j], BASIS[k])]
    if not v.is_zero()
)
_STRUCT_INT = tuple((i, j, k, int(v.to_fraction())) for i, j, k, v in _STRUCT)


def theta_weight(P, Q, R):
    """(Tr (x) Tr) sigma_Theta (P (x) Q (x) R).

    sigma_Theta sends (xP(x)yP)(x)(xQ(x)yQ)(x)(xR(x)yR) to
    (xP(x)xQ(x)xR)(x)(yR(x)yQ(x)yP).
    """
    p, q, r = P.coeffs, Q.coeffs, R.coeffs
    total = ZERO
    for i, j, k, s1 in _STRUCT_INT:
        pi, qj, rk = p[i], q[j], r[k]
        for n, m, l, s2 in _STRUCT_INT:
            a, b, c = pi[l], qj[m], rk[n]
            if a and b and c:
                total = total + a * b * c * (s1 * s2)
    return total


def bracket_matrix():
    """The bracket b: g(x)g -> g as a 3x9 matrix (column index 3*i + j for b_i (x) b_j)."""
    cols = [bracket(BASIS[i], BASIS[j]).coords for i in range(3) for j in range(3)]
    return ExactMatrix([[cols[c][r] for c in range(9)] for r in range(3)])


def bracket_dual_matrix():
    """b*: g -> g(x)g defined by B2(b*(Z), X(x)Y) = B(Z, [X, Y]), as a 9x3 matrix."""
    g2 = GRAM.kron(GRAM)
    return g2.inverse() @ bracket_matrix().transpose() @ GRAM


def _transposition():
    rows = []
    for i in range(3):
        for j in range(3):
            rows.append([ONE if c == 3 * j + i else ZERO for c in range(9)])
    return ExactMatrix(rows)


def bracket_relation_coeff():
    """The scalar k with b* o b = k (id - tau) on g(x)g."""
    lhs = bracket_dual_matrix() @ bracket_matrix()
    rhs = ExactMatrix.identity(9) - _transposition()
    k = None
    for x, y in zip((c for r in lhs for c in r), (c for r in rhs for c in r)):
        if y.is_zero():
            if not x.is_zero():
                raise ArithmeticError("b* o b is not proportional to id - tau")
            continue
        ratio = x / y
        if k is None:
            k = ratio
        elif ratio != k:
            raise ArithmeticError("b* o b is not proportional to id - tau")
    if k is None:
        raise ArithmeticError("id - tau vanished identically")
    return k


def tr_pair(U, V):
    """Invariant trace pairing.

    * TensorSq x TensorSq -> Scalar: Tr((x1(x)y1)(x)(x2(x)y2)) = B(x1, x2) B(y1, y2),
      where x2^* is read as the functional B(x2, -).  Bilinear.
    * LaurentPoly x LaurentPoly -> LaurentPoly: Tr(t^a (x) t^b) = t^(a-b),
      conjugating the coefficients of V.
    * TensorSqLaurent x TensorSqLaurent -> LaurentPoly: the product of the two,
      sesquilinear in V.
    """
    if isinstance(U, TensorSq) and isinstance(V, TensorSq):
        return _tsq_pair(U, V, conj=False)
    if isinstance(U, LaurentPoly) and isinstance(V, LaurentPoly):
        return U * V.bar().conj()
    if isinstance(U, TensorSqLaurent) and isinstance(V, TensorSqLaurent):
        out = {}
        for a, P in U.terms.items():
            for b, Q in V.terms.items():
                out[a - b] = out.get(a - b, ZERO) + _tsq_pair(P, Q, conj=True)
        return LaurentPoly(out)
    raise TypeError(f"tr_pair arguments in different coefficient regimes: {type(U).__name__}, {type(V).__name__}")


def _tsq_pair(U, V, conj):
    # sum_{ijkl} U_ij V_kl G_ik G_jl  =  trace(U^T G V G)
    Vm = V.matrix().conj() if conj else V.matrix()
    return (U.matrix().transpose() @ GRAM @ Vm @ GRAM).trace()


def _check_brackets():
    for X, Y, Z in ((H, E, E * 2), (H, F, F * -2), (E, F, H)):
        m = lie_to_matrix(X) @ lie_to_matrix(Y) - lie_to_matrix(Y) @ lie_to_matrix(X)
        if lie_from_matrix(m) != Z or bracket(X, Y) != Z:
            raise AssertionError("sl2 bracket table is inconsistent")


_check_brackets()

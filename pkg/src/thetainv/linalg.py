"""Dense exact matrices over Q(i, sqrt5) and fraction-free rank computations."""

from fractions import Fraction
from math import lcm

from .field import Scalar, ZERO, ONE, as_scalar

__all__ = ["ExactMatrix", "exact_rank", "rank_over_Q", "rational_rank", "bareiss_rank"]


class ExactMatrix:
    """Immutable rows x cols grid of Scalars."""

    __slots__ = ("rows", "cols", "_e", "_hash")

    def __init__(self, entries):
        grid = tuple(tuple(_sc(x) for x in row) for row in entries)
        rows = len(grid)
        cols = len(grid[0]) if rows else 0
        if any(len(r) != cols for r in grid):
            raise ValueError("ragged matrix entries")
        self._init(grid, rows, cols)

    def _init(self, grid, rows, cols):
        self._e = grid
        self.rows = rows
        self.cols = cols
        self._hash = None

    @classmethod
    def _wrap(cls, grid, rows=None, cols=None):
        obj = cls.__new__(cls)
        if rows is None:
            rows = len(grid)
            cols = len(grid[0]) if rows else 0
        obj._init(grid, rows, cols)
        return obj

    @classmethod
    def identity(cls, n):
        return cls._wrap(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def zeros(cls, rows, cols):
        return cls._wrap(tuple((ZERO,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def diag(cls, values):
        vals = [_sc(v) for v in values]
        n = len(vals)
        return cls._wrap(tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def vstack(cls, blocks, cols=None):
        grid = tuple(row for b in blocks for row in b._e)
        if not grid:
            return cls.zeros(0, cols or 0)
        return cls._wrap(grid)

    @classmethod
    def from_blocks(cls, blocks):
        """Assemble from a 2-d list of equally-sized-per-row/column blocks."""
        grid = []
        for brow in blocks:
            height = brow[0].rows
            for r in range(height):
                grid.append(tuple(x for b in brow for x in b._e[r]))
        return cls._wrap(tuple(grid))

    @property
    def entries(self):
        return self._e

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def row(self, i):
        return self._e[i]

    def __iter__(self):
        return iter(self._e)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._e == other._e

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._e)
        return self._hash

    def __add__(self, other):
        _same_shape(self, other)
        return ExactMatrix._wrap(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self._e, other._e)),
            self.rows, self.cols,
        )

    def __sub__(self, other):
        _same_shape(self, other)
        return ExactMatrix._wrap(
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self._e, other._e)),
            self.rows, self.cols,
        )

    def __neg__(self):
        return ExactMatrix._wrap(tuple(tuple(-a for a in r) for r in self._e), self.rows, self.cols)

    def scale(self, s):
        s = _sc(s)
        return ExactMatrix._wrap(tuple(tuple(a * s for a in r) for r in self._e), self.rows, self.cols)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = tuple(zip(*other._e)) if other.rows else ((),) * other.cols
        out = []
        for r in self._e:
            row = []
            for c in cols:
                acc = ZERO
                for a, b in zip(r, c):
                    if a._num != (0, 0, 0, 0) and b._num != (0, 0, 0, 0):
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return ExactMatrix._wrap(tuple(out), self.rows, other.cols)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = ExactMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def transpose(self):
        return ExactMatrix._wrap(tuple(zip(*self._e)), self.cols, self.rows) if self.rows else ExactMatrix.zeros(self.cols, 0)

    @property
    def T(self):
        return self.transpose()

    def conj(self):
        return ExactMatrix._wrap(tuple(tuple(a.conj() for a in r) for r in self._e), self.rows, self.cols)

    def conj_transpose(self):
        return self.conj().transpose()

    def trace(self):
        acc = ZERO
        for i in range(min(self.rows, self.cols)):
            acc = acc + self._e[i][i]
        return acc

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return _bareiss(self._e, want_det=True)[1]

    def inverse(self):
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of a non-square matrix")
        aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self._e)]
        for c in range(n):
            piv = next((r for r in range(c, n) if not aug[r][c].is_zero()), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = aug[c][c].inverse()
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                if r != c and not aug[r][c].is_zero():
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return ExactMatrix._wrap(tuple(tuple(r[n:]) for r in aug), n, n)

    def is_identity(self):
        return self.rows == self.cols and self == ExactMatrix.identity(self.rows)

    def rank(self):
        return exact_rank(self)

    def kron(self, other):
        grid = []
        for r1 in self._e:
            for r2 in other._e:
                grid.append(tuple(a * b for a in r1 for b in r2))
        return ExactMatrix._wrap(tuple(grid), self.rows * other.rows, self.cols * other.cols)

    def __repr__(self):
        return f"ExactMatrix({[[str(x) for x in r] for r in self._e]})"

    def __str__(self):
        cells = [[str(x) for x in r] for r in self._e]
        if not cells:
            return "[]"
        w = max(len(c) for r in cells for c in r) if self.cols else 0
        return "\n".join("[ " + "  ".join(c.rjust(w) for c in r) + " ]" for r in cells)


def _sc(x):
    y = as_scalar(x)
    if y is NotImplemented:
        raise TypeError(f"matrix entry {x!r} is not a Scalar")
    return y


def _same_shape(a, b):
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def _bareiss(rows, want_det=False):
    """Fraction-free elimination with column skipping; returns (rank, det or None).

    Works for any exact ring element supporting +, -, * and exact division
    (Python ints or Scalars).
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    prev = 1
    rank = 0
    sign = 1
    for c in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if m[r][c]), None)
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
            sign = -sign
        p = m[rank][c]
        for r in range(rank + 1, nrows):
            a = m[r][c]
            row_r, row_k = m[r], m[rank]
            for j in range(c + 1, ncols):
                val = p * row_r[j] - a * row_k[j]
                row_r[j] = _exact_div(val, prev)
            row_r[c] = 0 if isinstance(p, int) else ZERO
        prev = p
        rank += 1
    det = None
    if want_det:
        if nrows == 0:
            det = ONE
        elif rank < nrows:
            det = ZERO
        else:
            det = m[nrows - 1][nrows - 1] * sign
    return rank, det


def _exact_div(x, d):
    if isinstance(x, int) and isinstance(d, int):
        q, rem = divmod(x, d)
        if rem:
            raise ArithmeticError("inexact Bareiss division")
        return q
    if isinstance(d, int) and d == 1:
        return x
    return x / d


def bareiss_rank(rows):
    return _bareiss(rows)[0]


def exact_rank(M):
    """Rank of an ExactMatrix over Q(i, sqrt5)."""
    if M.rows == 0 or M.cols == 0:
        return 0
    # eliminate along the shorter dimension
    rows = M.entries if M.rows <= M.cols else M.transpose().entries
    return _bareiss(rows)[0]


def rational_rank(vectors):
    """Rank over Q of rational vectors given as dicts key -> Fraction (or int)."""
    vectors = [v for v in vectors if any(v.values())]
    if not vectors:
        return 0
    keys = sorted({k for v in vectors for k in v})
    index = {k: j for j, k in enumerate(keys)}
    rows = []
    for v in vectors:
        den = lcm(*(Fraction(x).denominator for x in v.values()))
        row = [0] * len(keys)
        for k, x in v.items():
            x = Fraction(x)
            row[index[k]] = x.numerator * (den // x.denominator)
        rows.append(row)
    if len(rows) > len(keys):
        rows = [list(c) for c in zip(*rows)]
    return _bareiss(rows)[0]


def rank_over_Q(vectors):
    """Q-rank of a sequence of TriLaurent (or LaurentPoly) values.

    Each polynomial is flattened to a rational vector indexed by
    (monomial, field-basis element) with basis 1, i, sqrt5, i*sqrt5.
    """
    return rational_rank([v.rational_vector() for v in vectors])

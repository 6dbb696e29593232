"""Finitely presented groups, words, and exact matrix representations.

The main object is the presentation of pi_1 of the Poincare homology sphere
Sigma(2,3,5) together with its two irreducible SU(2) representations.
"""

from collections import deque
from dataclasses import dataclass, field
from math import comb

from .field import Scalar, ZERO, ONE, I, SQRT5
from .linalg import ExactMatrix
from .sl2 import SU2Matrix, ad_endomorphism

__all__ = [
    "Word", "GroupPresentation", "Rep",
    "presentation_235", "rho_235", "rho1_extension", "eval_word", "enumerate_image",
    "circle_weight", "sym_power_rep", "verify_relations", "compose_rep", "adjoint_rep",
    "sym_power_rep_of", "trivial_rep",
]


class Word:
    """Freely reduced word; letters are (generator index, +1 or -1)."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        out = []
        for g, e in letters:
            if e not in (1, -1):
                raise ValueError(f"letter exponent must be +-1, got {e}")
            if out and out[-1][0] == g and out[-1][1] == -e:
                out.pop()
            else:
                out.append((int(g), e))
        self.letters = tuple(out)

    @classmethod
    def gen(cls, g, power=1):
        e = 1 if power >= 0 else -1
        return cls([(g, e)] * abs(power))

    @classmethod
    def parse(cls, text, generators):
        """Parse ``"x1 x2^ h"`` style words; ``^`` marks an inverse, ``1`` is the identity.

        ``x3^5`` and ``x3^-2`` are accepted as powers.
        """
        index = {name: k for k, name in enumerate(generators)}
        letters = []
        for tok in text.replace("*", " ").split():
            if tok in ("1", "e"):
                continue
            name, _, power = tok.partition("^")
            if name not in index:
                raise ValueError(f"unknown generator {name!r} in word {text!r}")
            if power == "":
                p = -1 if tok.endswith("^") else 1
            else:
                try:
                    p = int(power)
                except ValueError:
                    raise ValueError(f"bad exponent in {tok!r}") from None
            e = 1 if p > 0 else -1
            letters.extend([(index[name], e)] * abs(p))
        return cls(letters)

    def format(self, generators):
        if not self.letters:
            return "1"
        return " ".join(generators[g] + ("" if e == 1 else "^") for g, e in self.letters)

    def inverse(self):
        return Word((g, -e) for g, e in reversed(self.letters))

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.letters * n)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __lt__(self, other):
        return self.letters < other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Word({list(self.letters)})"

    def is_reduced(self):
        return all(not (a[0] == b[0] and a[1] == -b[1]) for a, b in zip(self.letters, self.letters[1:]))


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple
    relators: tuple = ()

    def word(self, text):
        return Word.parse(text, self.generators)

    def format(self, w):
        return w.format(self.generators)

    def with_generator(self, name, extra_relators=()):
        gens = self.generators + (name,)
        return GroupPresentation(gens, self.relators + tuple(extra_relators))


def commutator(a, b):
    return a * b * a.inverse() * b.inverse()


def presentation_235():
    """<x1, x2, x3, h | h central, x1^2 = h, x2^3 = h^-1, x3^5 = h^-1, x1 x2 x3 = 1>."""
    x1, x2, x3, h = (Word.gen(k) for k in range(4))
    rels = (
        commutator(h, x1),
        commutator(h, x2),
        commutator(h, x3),
        x1 ** 2 * h.inverse(),
        x2 ** 3 * h,
        x3 ** 5 * h,
        x1 * x2 * x3,
    )
    return GroupPresentation(("x1", "x2", "x3", "h"), rels)


@dataclass(frozen=True)
class Rep:
    """Homomorphism from a presented group to d x d exact matrices.

    Every relator is checked against the identity on construction.
    """

    presentation: GroupPresentation
    images: tuple
    su2: bool = False
    name: str = ""
    _inverses: tuple = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if len(self.images) != len(self.presentation.generators):
            raise ValueError("one image per generator required")
        d = self.images[0].rows if self.images else 0
        for m in self.images:
            if m.shape != (d, d):
                raise ValueError("images must be square of a common size")
        if self.su2:
            object.__setattr__(self, "images", tuple(SU2Matrix.coerce(m) for m in self.images))
        object.__setattr__(self, "_inverses", tuple(_inv(m, self.su2) for m in self.images))
        bad = [k for k, ok in enumerate(verify_relations(self, self.presentation)) if not ok]
        if bad:
            names = ", ".join(self.presentation.format(self.presentation.relators[k]) for k in bad)
            raise ValueError(f"relators not satisfied: {names}")

    @property
    def dimension(self):
        return self.images[0].rows

    def image(self, g, e=1):
        return self.images[g] if e == 1 else self._inverses[g]

    def __call__(self, w):
        return eval_word(self, w)


def _inv(m, unitary):
    return ExactMatrix(m.conj_transpose().entries) if unitary else m.inverse()


def eval_word(rho, w):
    if isinstance(w, str):
        w = rho.presentation.word(w)
    out = ExactMatrix.identity(_dim(rho))
    for g, e in w:
        out = out @ rho.image(g, e)
    return out


def _dim(rho):
    return rho.images[0].rows if rho.images else 0


def verify_relations(rho, pres):
    """Per-relator booleans: does rho send the relator to the identity?"""
    results = []
    n = _dim(rho)
    for r in pres.relators:
        m = ExactMatrix.identity(n)
        for g, e in r:
            m = m @ (rho.images[g] if e == 1 else rho._inverses[g])
        results.append(m.is_identity())
    return results


def _alpha_beta(variant):
    if variant == 1:
        return (ONE + SQRT5) / 4, (-ONE + SQRT5) / 4
    if variant == 2:
        return (ONE - SQRT5) / 4, (ONE + SQRT5) / 4
    raise ValueError(f"variant must be 1 or 2, got {variant!r}")


def rho_235(variant=1):
    """One of the two irreducible SU(2) representations of pi_1 Sigma(2,3,5)."""
    a, b = _alpha_beta(variant)
    half = Scalar(1, 0) / 2
    x1 = ExactMatrix.diag([I, -I])
    x2 = ExactMatrix([[half - a * I, b], [-b, half + a * I]])
    x3 = ExactMatrix([[a - half * I, -b * I], [-b * I, a + half * I]])
    h = ExactMatrix.diag([-ONE, -ONE])
    return Rep(presentation_235(), (x1, x2, x3, h), su2=True, name=f"v{variant}")


def rho1_extension(rho):
    """Extend rho to pi x Z by sending the new central generator t to -I."""
    if not rho.su2:
        raise ValueError("rho1_extension needs an SU(2) representation")
    pres = rho.presentation
    t = Word.gen(len(pres.generators))
    comms = tuple(commutator(t, Word.gen(k)) for k in range(len(pres.generators)))
    ext = pres.with_generator("t", comms)
    minus = ExactMatrix.diag([-ONE, -ONE])
    return Rep(ext, rho.images + (minus,), su2=True, name=(rho.name + "+t") if rho.name else "ext")


def trivial_rep(pres, d=1):
    return Rep(pres, tuple(ExactMatrix.identity(d) for _ in pres.generators))


def enumerate_image(rho, cap=1000):
    """All distinct matrices in the image, by FIFO closure from the identity."""
    ident = ExactMatrix.identity(_dim(rho))
    gens = list(rho.images) + list(rho._inverses)
    seen = {ident: None}
    order = [ident]
    queue = deque([ident])
    while queue:
        m = queue.popleft()
        for g in gens:
            p = m @ g
            if p not in seen:
                if len(order) >= cap:
                    raise OverflowError(f"image exceeds cap={cap}; it may be infinite")
                seen[p] = None
                order.append(p)
                queue.append(p)
    if rho.su2:
        return [SU2Matrix.coerce(m) for m in order]
    return order


def circle_weight(g):
    """Weight of a circle decorated by Ad(g): |Tr g|^2 - 1."""
    tr = g.trace()
    return tr * tr.conj() - ONE


def sym_power_rep(m):
    """g -> matrix of (g.f)(v) = f(g^{-1} v) on x^m, x^{m-1}y, ..., y^m."""
    if m < 0:
        raise ValueError("degree must be nonnegative")

    def act(g):
        gi = ExactMatrix(g.conj_transpose().entries) if isinstance(g, SU2Matrix) else g.inverse()
        a, b = gi[0, 0], gi[0, 1]
        c, d = gi[1, 0], gi[1, 1]
        cols = []
        for k in range(m + 1):
            # (a x + b y)^(m-k) (c x + d y)^k, coefficients of x^(m-j) y^j
            p = _binom_poly(a, b, m - k)
            q = _binom_poly(c, d, k)
            col = [ZERO] * (m + 1)
            for j1, u in enumerate(p):
                for j2, v in enumerate(q):
                    col[j1 + j2] = col[j1 + j2] + u * v
            cols.append(col)
        return ExactMatrix([[cols[k][j] for k in range(m + 1)] for j in range(m + 1)])

    return act


def _binom_poly(a, b, n):
    # coefficients of y^j in (a x + b y)^n
    return [a ** (n - j) * b ** j * comb(n, j) for j in range(n + 1)]


def compose_rep(rho, fn, name=""):
    """The representation fn o rho (fn a multiplicative map on matrices)."""
    return Rep(rho.presentation, tuple(fn(m) for m in rho.images), su2=False, name=name)


def adjoint_rep(rho):
    return compose_rep(rho, ad_endomorphism, name=f"Ad({rho.name})")


def sym_power_rep_of(rho, m):
    return compose_rep(rho, sym_power_rep(m), name=f"Sym{m}({rho.name})")

"""Twisted group cohomology in degrees 0 and 1 via Fox calculus.

For a presentation <g_1..g_n | r_1..r_m> and a d-dimensional representation
rho, the cochain complex is

    C^0 = V  --d0-->  C^1 = V^n  --d1-->  C^2 = V^m

with d0 the stack of (rho(g_i) - I) and d1[j][i] = rho(d r_j / d g_i).
"""

from dataclasses import dataclass

from .field import ZERO, ONE
from .groups import Word, enumerate_image, sym_power_rep, eval_word, verify_relations
from .linalg import ExactMatrix, exact_rank
from .sl2 import ad_endomorphism

__all__ = [
    "GroupRingElt", "CochainMaps", "fox_derivative", "cochain_maps", "cohomology_dims",
    "invariants_dim", "decomposition_check", "character_table_235",
]


class GroupRingElt:
    """Finite sum of Scalar * Word in the group ring of the free group."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for w, c in (terms or {}).items():
            c = clean.get(w, ZERO) + c
            if c.is_zero():
                clean.pop(w, None)
            else:
                clean[w] = c
        self.terms = clean

    @classmethod
    def of(cls, w, c=ONE):
        return cls({w: c})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return GroupRingElt(out)

    def left_mul(self, u):
        return GroupRingElt({u * w: c for w, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, GroupRingElt) and self.terms == other.terms

    def __repr__(self):
        return "GroupRingElt(" + ", ".join(f"{c}*{w.letters}" for w, c in sorted(self.terms.items())) + ")"

    def evaluate(self, rho):
        d = rho.dimension
        acc = ExactMatrix.zeros(d, d)
        for w, c in self.terms.items():
            acc = acc + eval_word(rho, w).scale(c)
        return acc


def fox_derivative(w, gen):
    """d w / d g_gen, using d(uv) = du + u dv and d(x^-1)/dx = -x^-1."""
    out = {}
    prefix = []
    for g, e in w:
        if g == gen:
            if e == 1:
                term = Word(prefix)
                out[term] = out.get(term, ZERO) + ONE
            else:
                term = Word(prefix + [(g, -1)])
                out[term] = out.get(term, ZERO) - ONE
        prefix.append((g, e))
    return GroupRingElt(out)


@dataclass(frozen=True)
class CochainMaps:
    d0: ExactMatrix
    d1: ExactMatrix

    def __post_init__(self):
        if self.d1.rows and self.d0.cols:
            prod = self.d1 @ self.d0
            if any(not x.is_zero() for row in prod for x in row):
                raise ArithmeticError("d1 @ d0 != 0")


def cochain_maps(pres, rho):
    """d0 ((n*d) x d) and d1 ((m*d) x (n*d)); block (j, i) of d1 is rho(d r_j / d g_i)."""
    if not all(verify_relations(rho, pres)):
        raise ValueError("representation does not satisfy the presentation")
    d = rho.dimension
    n = len(pres.generators)
    ident = ExactMatrix.identity(d)
    d0 = ExactMatrix.vstack([rho.image(i) - ident for i in range(n)])
    if pres.relators:
        blocks = [
            [fox_derivative(r, i).evaluate(rho) for i in range(n)]
            for r in pres.relators
        ]
        d1 = ExactMatrix.from_blocks(blocks)
    else:
        d1 = ExactMatrix.zeros(0, n * d)
    return CochainMaps(d0, d1)


def cohomology_dims(cm, rho=None):
    """(h0, h1).  Accepts CochainMaps, or a (presentation, rep) pair."""
    if rho is not None:
        cm = cochain_maps(cm, rho)
    r0 = exact_rank(cm.d0)
    r1 = exact_rank(cm.d1) if cm.d1.rows else 0
    h0 = cm.d0.cols - r0
    h1 = (cm.d1.cols - r1) - r0
    return h0, h1


def invariants_dim(rho):
    """Dimension of the subspace fixed by every generator."""
    d = rho.dimension
    ident = ExactMatrix.identity(d)
    stacked = ExactMatrix.vstack([m - ident for m in rho.images])
    return d - exact_rank(stacked)


def character_table_235(rho, cap=1000):
    """Per image element: (chi_Ad, chi_Sym2, chi_Sym4)."""
    s2, s4 = sym_power_rep(2), sym_power_rep(4)
    rows = []
    for g in enumerate_image(rho, cap):
        rows.append((ad_endomorphism(g).trace(), s2(g).trace(), s4(g).trace()))
    return rows


def decomposition_check(rho, cap=1000):
    """chi_Ad(g)^2 == chi_V0 + chi_V2 + chi_V4 at every element of the image (V_m = Sym^m C^2)."""
    for ad, c2, c4 in character_table_235(rho, cap):
        if ad * ad != ONE + c2 + c4:
            return False
    return True

"""Value of Z_Theta on Theta-graph surgeries, the cyclic-cover rule, and rank certificates.

The surgery value is evaluated as the rule

    Z(Psi_1(Theta(g1 t^a1, g2 t^a2, g3 t^a3))) = 2 W(Theta(Ad rho(g1) t^a1, ...)),

taking the surgery theorem as given.  The hypothesis O(X, A) = 0 is assumed
and reported, never computed.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .field import ONE
from .groups import Word, rho_235, rho1_extension, eval_word
from .linalg import rank_over_Q
from .sl2 import ad_of, casimir, TensorSqLaurent, theta_weight
from .theta import DecoratedTheta, SThetaElt, w_lie, coker_project, check_parity

__all__ = [
    "SurgerySpec", "Certificate", "select_rep", "z_theta_surgery", "cyclic_lift_value",
    "independence_certificate", "STANDING_HYPOTHESIS", "surgery_coefficient",
]

STANDING_HYPOTHESIS = "O(X,A) = 0 (assumed, not computed)"


@lru_cache(maxsize=None)
def select_rep(variant=1, extended=False):
    rho = rho_235(variant)
    return rho1_extension(rho) if extended else rho


@dataclass(frozen=True)
class SurgerySpec:
    """Theta(g1 t^a1, g2 t^a2, g3 t^a3) with words in pi' (or pi' x Z when extended).

    The eps = 1 case uses the extension rho_1 (t -> -I); eps = 0 uses rho itself.
    """

    eps: int
    decorations: tuple
    variant: int = 1

    def __post_init__(self):
        check_parity(self.eps)
        if len(self.decorations) != 3:
            raise ValueError("a Theta-graph surgery needs three edge decorations")
        decs = []
        pres = self.rep.presentation
        for w, a in self.decorations:
            if isinstance(w, str):
                w = Word.parse(w, pres.generators)
            if not isinstance(w, Word):
                raise TypeError(f"decoration word must be a Word or string, got {w!r}")
            for g, _ in w:
                if not 0 <= g < len(pres.generators):
                    raise ValueError(f"generator index {g} out of range")
            decs.append((w, int(a)))
        object.__setattr__(self, "decorations", tuple(decs))

    @property
    def extended(self):
        return self.eps == 1

    @property
    def rep(self):
        return select_rep(self.variant, self.extended)

    def permuted(self, perm):
        return SurgerySpec(self.eps, tuple(self.decorations[p] for p in perm), self.variant)

    def describe(self):
        gens = self.rep.presentation.generators
        parts = []
        for w, a in self.decorations:
            word = w.format(gens)
            tp = "" if a == 0 else ("t" if a == 1 else f"t^{a}")
            if word == "1" and tp:
                parts.append(tp)
            elif tp:
                parts.append(f"{word.replace(' ', '')}·{tp}")
            else:
                parts.append(word.replace(" ", ""))
        return f"Θ{'⁰' if self.eps == 0 else '¹'}({', '.join(parts)})"


@dataclass(frozen=True)
class Certificate:
    inputs: tuple
    images: tuple
    rank_full: int
    rank_coker: int
    conclusion: str
    hypotheses: tuple = field(default=(STANDING_HYPOTHESIS,))

    def __post_init__(self):
        n = len(self.inputs)
        if not 0 <= self.rank_coker <= self.rank_full <= n:
            raise ValueError("ranks exceed the number of inputs")
        if (self.conclusion == "independent-in-cokernel") != (self.rank_coker == n):
            raise ValueError("conclusion inconsistent with ranks")


def _decoration(rho, w, a):
    return TensorSqLaurent.monomial(ad_of(eval_word(rho, w)), a)


def surgery_coefficient(spec):
    """2 * theta_weight of the Ad rho-decorations (the scalar in front of the W-class)."""
    rho = spec.rep
    P, Q, R = (ad_of(eval_word(rho, w)) for w, _ in spec.decorations)
    return 2 * theta_weight(P, Q, R)


def z_theta_surgery(spec):
    """Image of Z_Theta^eps(Psi_1(Theta(g1, g2, g3))) in S_Theta^eps."""
    rho = spec.rep
    d = DecoratedTheta(spec.eps, tuple(_decoration(rho, w, a) for w, a in spec.decorations))
    return w_lie(d).scale(2)


def cyclic_lift_value(g, h, p, q, r, eps=0, variant=1):
    """2r * W(Theta(c, Ad rho(g) t^p, Ad rho(h) t^q)) for the r-fold cyclic cover."""
    if r < 1:
        raise ValueError("cover degree r must be positive")
    spec = SurgerySpec(eps, ((Word(), 0), (g, p), (h, q)), variant)
    return z_theta_surgery(spec).scale(r)


def independence_certificate(specs):
    """Q-ranks of the surgery images, before and after projecting to the cokernel."""
    specs = tuple(specs)
    if not specs:
        raise ValueError("empty list of surgery specs")
    eps = specs[0].eps
    if any(s.eps != eps for s in specs):
        raise ValueError("parity mixture in certificate inputs")
    images = tuple(z_theta_surgery(s) for s in specs)
    rank_full = rank_over_Q([x.image for x in images])
    rank_coker = rank_over_Q([coker_project(eps, x).image for x in images])
    conclusion = "independent-in-cokernel" if rank_coker == len(specs) else "dependent-in-cokernel"
    return Certificate(specs, images, rank_full, rank_coker, conclusion)

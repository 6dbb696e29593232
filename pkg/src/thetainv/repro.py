"""Reproduction cases: each recomputes a published number and compares exactly."""

import time
from dataclasses import dataclass

from .field import Scalar, ONE, SQRT5, format_scalar
from .groups import Word, rho_235, enumerate_image, circle_weight, eval_word, adjoint_rep, sym_power_rep_of
from .cohomology import cohomology_dims, invariants_dim, decomposition_check
from .laurent import tl_substitute3
from .linalg import rank_over_Q
from .sl2 import ad_of, ad_endomorphism, casimir, theta_weight
from .surgery import SurgerySpec, z_theta_surgery, cyclic_lift_value, independence_certificate
from .theta import embed_class, w_scalar, f_poly

__all__ = ["CASES", "ReproReport", "run_repro", "run_all", "w_ad_identity_failures", "ratio_to"]


@dataclass(frozen=True)
class ReproReport:
    case: str
    expected: dict
    provenance: str
    computed: dict
    match: bool
    runtime: float = 0.0

    def __post_init__(self):
        if self.match != (self.expected == self.computed):
            raise ValueError("match flag disagrees with expected/computed")

    def to_json(self, with_runtime=True):
        out = {
            "case": self.case,
            "expected": _enc(self.expected),
            "provenance": self.provenance,
            "computed": _enc(self.computed),
            "match": self.match,
        }
        if with_runtime:
            out["runtime"] = round(self.runtime, 6)
        return out

    @classmethod
    def from_json(cls, obj, path="$"):
        from .serialize import SchemaError

        if not isinstance(obj, dict):
            raise SchemaError("expected a report object", path)
        try:
            return cls(obj["case"], _dec(obj["expected"]), obj["provenance"], _dec(obj["computed"]),
                       obj["match"], float(obj.get("runtime", 0.0)))
        except KeyError as exc:
            raise SchemaError(f"missing field {exc.args[0]!r}", path) from None
        except ValueError as exc:
            raise SchemaError(str(exc), path) from None

    def __eq__(self, other):
        # runtime is not part of the report's identity
        return isinstance(other, ReproReport) and self.to_json(False) == other.to_json(False)

    def __hash__(self):
        return hash((self.case, self.match))


def _enc(v):
    from .serialize import scalar_to_json

    if isinstance(v, Scalar):
        return {"scalar": scalar_to_json(v), "text": format_scalar(v)}
    if isinstance(v, dict):
        return {k: _enc(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_enc(x) for x in v]
    return v


def _dec(v):
    from .serialize import scalar_from_json

    if isinstance(v, dict):
        if set(v) == {"scalar", "text"}:
            return scalar_from_json(v["scalar"])
        return {k: _dec(x) for k, x in v.items()}
    if isinstance(v, list):
        return [_dec(x) for x in v]
    return v


def ratio_to(x, base):
    """The scalar c with x == c * base, or None when no such c exists."""
    if base.is_zero():
        return None
    key, b = next(iter(base.items()))
    c = x.coeff(key) / b
    return c if x == base.scale(c) else None


def w_ad_identity_failures(rho):
    """Pairs (x, y) of the image violating theta(c, Ad x, Ad y) = 2(TrAd x TrAd y - TrAd xy)."""
    elems = enumerate_image(rho)
    index = {m: k for k, m in enumerate(elems)}
    ads = [ad_of(g) for g in elems]
    tr = [ad_endomorphism(g).trace() for g in elems]
    c = casimir()
    bad = []
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            k = index[x @ y]
            if theta_weight(c, ads[i], ads[j]) != 2 * (tr[i] * tr[j] - tr[k]):
                bad.append((i, j))
    return len(elems) ** 2, bad


def _example_235():
    rho = rho_235(1)
    x3 = eval_word(rho, "x3")
    c = casimir()
    computed = {
        "casimir_weight": theta_weight(c, c, c),
        "twisted_weight": theta_weight(c, ad_of(x3), ad_of(x3 @ x3)),
        "w_alpha3": circle_weight(x3),
        "w_alpha3^2": circle_weight(x3 @ x3),
        "w_alpha3^3": circle_weight(x3 @ x3 @ x3),
    }
    expected = {
        "casimir_weight": Scalar(12),
        "twisted_weight": -3 + SQRT5,
        "w_alpha3": (ONE + SQRT5) / 2,
        "w_alpha3^2": (ONE - SQRT5) / 2,
        "w_alpha3^3": (ONE - SQRT5) / 2,
    }
    return expected, computed, "PUBLISHED"


def _prop_1ttp():
    display = [p for p in range(3, 13) if embed_class(w_scalar(0, 0, 1, p)).image == f_poly(p)]
    extremal = []
    for p in range(3, 13):
        g = tl_substitute3(f_poly(p), 0, 1, 3)
        extremal.append([g.max_degree(), g.min_degree()])
    computed = {
        "display_matches": display,
        "extremal_exponents": extremal,
        "rank_eps0_p3_to_20": rank_over_Q([f_poly(p) for p in range(3, 21)]),
        "rank_eps1_p1_to_15": rank_over_Q([embed_class(w_scalar(1, 0, 1, p)).image for p in range(1, 16)]),
    }
    expected = {
        "display_matches": list(range(3, 13)),
        "extremal_exponents": [[3 * p - 1, -(3 * p - 1)] for p in range(3, 13)],
        "rank_eps0_p3_to_20": 18,
        "rank_eps1_p1_to_15": 15,
    }
    return expected, computed, "PUBLISHED+DERIVED"


def _prop_w_ad():
    n, bad = w_ad_identity_failures(rho_235(1))
    return {"pairs": 14400, "failures": 0}, {"pairs": n, "failures": len(bad)}, "PUBLISHED"


def _acyclicity():
    computed = {}
    for v in (1, 2):
        rho = rho_235(v)
        computed[f"v{v}"] = list(cohomology_dims(rho.presentation, adjoint_rep(rho)))
    return {"v1": [0, 0], "v2": [0, 0]}, computed, "PUBLISHED"


def _v4():
    computed = {f"v{v}": invariants_dim(sym_power_rep_of(rho_235(v), 4)) for v in (1, 2)}
    return {"v1": 0, "v2": 0}, computed, "PUBLISHED"


def _decomposition():
    computed = {f"v{v}": decomposition_check(rho_235(v)) for v in (1, 2)}
    return {"v1": True, "v2": True}, computed, "PUBLISHED"


_PS = range(3, 9)


def _surgery_theta():
    untw, tw, ranks = [], [], []
    for p in _PS:
        f = f_poly(p)
        a = z_theta_surgery(SurgerySpec(0, (("1", 0), ("1", 1), ("1", p)))).image
        b = z_theta_surgery(SurgerySpec(0, (("1", 0), ("x3", 1), ("x3 x3", p)))).image
        untw.append(ratio_to(a, f))
        tw.append(ratio_to(b, f))
        ranks.append(rank_over_Q([a, b]))
    n = len(_PS)
    computed = {"untwisted_coeff": untw, "twisted_coeff": tw, "pair_rank": ranks}
    expected = {
        "untwisted_coeff": [Scalar(24)] * n,
        "twisted_coeff": [2 * (-3 + SQRT5)] * n,
        "pair_rank": [2] * n,
    }
    return expected, computed, "PUBLISHED"


def _cyclic_lift():
    g, h = Word.gen(2), Word.gen(2, 2)
    base = cyclic_lift_value(g, h, 1, 5, 1)
    ok = [r for r in range(1, 7) if cyclic_lift_value(g, h, 1, 5, r) == base.scale(r)]
    return {"r_matching": list(range(1, 7))}, {"r_matching": ok}, "PUBLISHED"


def _coker():
    computed = {}
    for eps, p0 in ((0, 3), (1, 1)):
        specs = [SurgerySpec(eps, (("1", 0), ("1", 1), ("1", p))) for p in range(p0, p0 + 10)]
        computed[f"eps{eps}"] = independence_certificate(specs).rank_coker
    return {"eps0": 10, "eps1": 10}, computed, "PUBLISHED"


CASES = {
    "example-235": _example_235,
    "prop-1ttp": _prop_1ttp,
    "prop-w-ad": _prop_w_ad,
    "acyclicity-adjoint": _acyclicity,
    "v4-invariants": _v4,
    "decomposition": _decomposition,
    "surgery-theta": _surgery_theta,
    "cyclic-lift": _cyclic_lift,
    "coker-independence": _coker,
}


def run_repro(case):
    if case not in CASES:
        raise KeyError(f"unknown repro case {case!r}; known: {', '.join(CASES)}")
    t0 = time.perf_counter()
    expected, computed, tag = CASES[case]()
    return ReproReport(case, expected, tag, computed, expected == computed, time.perf_counter() - t0)


def run_all():
    return [run_repro(c) for c in CASES]

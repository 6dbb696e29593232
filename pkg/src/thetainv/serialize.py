"""Stable JSON encoding of the domain types.

Every top-level document is ``{"type": <name>, "value": <payload>}``.
Rationals are written as ``"num/den"`` strings, so no precision is lost.
"""

import json
from fractions import Fraction

from .field import Scalar
from .groups import GroupPresentation, Word
from .laurent import LaurentPoly, TriLaurent
from .linalg import ExactMatrix
from .sl2 import TensorSq, TensorSqLaurent, SU2Matrix, LieElt
from .theta import ThetaClass, SThetaElt
from .surgery import SurgerySpec, Certificate

__all__ = ["SchemaError", "serialize", "parse", "to_json", "from_json", "dumps",
           "scalar_to_json", "scalar_from_json", "presentation_from_json", "spec_from_json"]


class SchemaError(ValueError):
    """Malformed document; ``path`` locates the offending node (JSONPath-like)."""

    def __init__(self, msg, path="$"):
        super().__init__(f"{path}: {msg}")
        self.path = path


def dumps(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False)


# -- scalars ------------------------------------------------------------

_KEYS = ("r", "i", "s5", "is5")


def _q(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def scalar_to_json(x):
    return {k: _q(c) for k, c in zip(_KEYS, x.coords)}


def _parse_q(s, path):
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise SchemaError(f"expected a 'num/den' string, got {s!r}", path)
    if isinstance(s, int):
        return Fraction(s)
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise SchemaError(f"bad rational {s!r}", path) from None
    if d == 0:
        raise SchemaError("zero denominator", path)
    return Fraction(n, d)


def scalar_from_json(obj, path="$"):
    if isinstance(obj, str):
        try:
            return Scalar.parse(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(str(exc), path) from None
    if not isinstance(obj, dict):
        raise SchemaError("expected a scalar object", path)
    extra = set(obj) - set(_KEYS)
    if extra:
        raise SchemaError(f"unexpected scalar keys {sorted(extra)}", path)
    return Scalar(*(_parse_q(obj.get(k, "0/1"), f"{path}.{k}") for k in _KEYS))


# -- encoders -----------------------------------------------------------

def _grid_to_json(rows):
    return [[scalar_to_json(x) for x in r] for r in rows]


def _grid_from_json(obj, path, shape=None):
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise SchemaError("expected a 2-d array", path)
    grid = [[scalar_from_json(x, f"{path}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(obj)]
    if shape is not None and (len(grid) != shape[0] or any(len(r) != shape[1] for r in grid)):
        raise SchemaError(f"expected shape {shape}", path)
    if grid and any(len(r) != len(grid[0]) for r in grid):
        raise SchemaError("ragged matrix", path)
    return grid


def _lp_to_json(f):
    return {str(e): scalar_to_json(c) for e, c in f.items()}


def _lp_from_json(obj, path):
    if not isinstance(obj, dict):
        raise SchemaError("expected an exponent map", path)
    terms = {}
    for k, v in obj.items():
        try:
            e = int(k)
        except ValueError:
            raise SchemaError(f"bad exponent key {k!r}", path) from None
        terms[e] = scalar_from_json(v, f"{path}[{k!r}]")
    return LaurentPoly(terms)


def _tl_to_json(F):
    return {",".join(map(str, k)): scalar_to_json(c) for k, c in F.items()}


def _tl_from_json(obj, path):
    if not isinstance(obj, dict):
        raise SchemaError("expected a monomial map", path)
    terms = {}
    for k, v in obj.items():
        parts = k.split(",")
        try:
            if len(parts) != 3:
                raise ValueError
            key = tuple(int(p) for p in parts)
        except ValueError:
            raise SchemaError(f"bad monomial key {k!r}; expected 'e1,e2,e3'", path) from None
        terms[key] = scalar_from_json(v, f"{path}[{k!r}]")
    return TriLaurent(terms)


def _theta_to_json(c):
    return {"eps": c.eps, "terms": [{"triple": list(k), "coeff": scalar_to_json(v)} for k, v in c.items()]}


def _eps_from(obj, path):
    eps = obj.get("eps") if isinstance(obj, dict) else None
    if eps not in (0, 1) or isinstance(eps, bool):
        raise SchemaError("eps must be 0 or 1", f"{path}.eps")
    return eps


def _theta_from_json(obj, path):
    eps = _eps_from(obj, path)
    terms = obj.get("terms")
    if not isinstance(terms, list):
        raise SchemaError("expected a list", f"{path}.terms")
    out = ThetaClass(eps)
    for n, t in enumerate(terms):
        p = f"{path}.terms[{n}]"
        tr = t.get("triple") if isinstance(t, dict) else None
        if not (isinstance(tr, list) and len(tr) == 3 and all(isinstance(e, int) and not isinstance(e, bool) for e in tr)):
            raise SchemaError("triple must be three integers", f"{p}.triple")
        out = out + ThetaClass(eps, {tuple(tr): scalar_from_json(t.get("coeff"), f"{p}.coeff")})
    return out


def presentation_to_json(pres):
    return {"gens": list(pres.generators), "rels": [pres.format(r) for r in pres.relators]}


def presentation_from_json(obj, path="$"):
    if not isinstance(obj, dict):
        raise SchemaError("expected a presentation object", path)
    gens = obj.get("gens")
    rels = obj.get("rels", [])
    if not (isinstance(gens, list) and all(isinstance(g, str) for g in gens)):
        raise SchemaError("gens must be a list of names", f"{path}.gens")
    if not (isinstance(rels, list) and all(isinstance(r, str) for r in rels)):
        raise SchemaError("rels must be a list of word strings", f"{path}.rels")
    words = []
    for n, r in enumerate(rels):
        try:
            words.append(Word.parse(r, gens))
        except ValueError as exc:
            raise SchemaError(str(exc), f"{path}.rels[{n}]") from None
    return GroupPresentation(tuple(gens), tuple(words))


def spec_to_json(s):
    gens = s.rep.presentation.generators
    return {
        "eps": s.eps,
        "rep": f"v{s.variant}",
        "decorations": [{"word": w.format(gens), "exp": a} for w, a in s.decorations],
    }


def spec_from_json(obj, path="$"):
    if not isinstance(obj, dict):
        raise SchemaError("expected a surgery spec object", path)
    eps = _eps_from(obj, path)
    rep = obj.get("rep", "v1")
    if rep not in ("v1", "v2"):
        raise SchemaError("rep must be 'v1' or 'v2'", f"{path}.rep")
    decs = obj.get("decorations")
    if not (isinstance(decs, list) and len(decs) == 3):
        raise SchemaError("decorations must be a list of three entries", f"{path}.decorations")
    out = []
    for n, d in enumerate(decs):
        p = f"{path}.decorations[{n}]"
        if not isinstance(d, dict) or not isinstance(d.get("word"), str):
            raise SchemaError("expected {\"word\": str, \"exp\": int}", p)
        a = d.get("exp", 0)
        if not isinstance(a, int) or isinstance(a, bool):
            raise SchemaError("exp must be an integer", f"{p}.exp")
        out.append((d["word"], a))
    try:
        return SurgerySpec(eps, tuple(out), int(rep[1]))
    except ValueError as exc:
        raise SchemaError(str(exc), f"{path}.decorations") from None


def _cert_to_json(c):
    return {
        "inputs": [spec_to_json(s) for s in c.inputs],
        "images": [{"eps": x.eps, "image": _tl_to_json(x.image)} for x in c.images],
        "rank_full": c.rank_full,
        "rank_coker": c.rank_coker,
        "conclusion": c.conclusion,
        "hypotheses": list(c.hypotheses),
    }


def _cert_from_json(obj, path):
    if not isinstance(obj, dict):
        raise SchemaError("expected a certificate object", path)
    inputs = tuple(spec_from_json(s, f"{path}.inputs[{n}]") for n, s in enumerate(obj.get("inputs", [])))
    images = tuple(
        SThetaElt(_eps_from(x, f"{path}.images[{n}]"), _tl_from_json(x.get("image"), f"{path}.images[{n}].image"))
        for n, x in enumerate(obj.get("images", []))
    )
    try:
        return Certificate(inputs, images, obj["rank_full"], obj["rank_coker"], obj["conclusion"],
                           tuple(obj.get("hypotheses", ())))
    except KeyError as exc:
        raise SchemaError(f"missing field {exc.args[0]!r}", path) from None
    except ValueError as exc:
        raise SchemaError(str(exc), path) from None


def _lie_to_json(X):
    return [scalar_to_json(c) for c in X.coords]


def _lie_from_json(obj, path):
    if not (isinstance(obj, list) and len(obj) == 3):
        raise SchemaError("expected three coordinates", path)
    return LieElt(*(scalar_from_json(c, f"{path}[{n}]") for n, c in enumerate(obj)))


def _tsql_to_json(T):
    return {str(n): _grid_to_json(P.coeffs) for n, P in T.items()}


def _tsql_from_json(obj, path):
    if not isinstance(obj, dict):
        raise SchemaError("expected an exponent map", path)
    terms = {}
    for k, v in obj.items():
        try:
            e = int(k)
        except ValueError:
            raise SchemaError(f"bad exponent key {k!r}", path) from None
        terms[e] = TensorSq(_grid_from_json(v, f"{path}[{k!r}]", (3, 3)))
    return TensorSqLaurent(terms)


def _su2_from(obj, path):
    try:
        return SU2Matrix(_grid_from_json(obj, path, (2, 2)))
    except ValueError as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(str(exc), path) from None


# (type, name, encoder, decoder); order matters for isinstance dispatch
_CODECS = [
    (Scalar, "Scalar", scalar_to_json, scalar_from_json),
    (LaurentPoly, "LaurentPoly", _lp_to_json, _lp_from_json),
    (TriLaurent, "TriLaurent", _tl_to_json, _tl_from_json),
    (SU2Matrix, "SU2Matrix", lambda m: _grid_to_json(m.entries), _su2_from),
    (ExactMatrix, "ExactMatrix", lambda m: _grid_to_json(m.entries),
     lambda o, p: ExactMatrix(_grid_from_json(o, p))),
    (TensorSq, "TensorSq", lambda t: _grid_to_json(t.coeffs),
     lambda o, p: TensorSq(_grid_from_json(o, p, (3, 3)))),
    (TensorSqLaurent, "TensorSqLaurent", _tsql_to_json, _tsql_from_json),
    (LieElt, "LieElt", _lie_to_json, _lie_from_json),
    (ThetaClass, "ThetaClass", _theta_to_json, _theta_from_json),
    (SThetaElt, "SThetaElt", lambda x: {"eps": x.eps, "image": _tl_to_json(x.image)},
     lambda o, p: SThetaElt(_eps_from(o, p), _tl_from_json(o.get("image"), f"{p}.image"))),
    (GroupPresentation, "GroupPresentation", presentation_to_json, presentation_from_json),
    (SurgerySpec, "SurgerySpec", spec_to_json, spec_from_json),
    (Certificate, "Certificate", _cert_to_json, _cert_from_json),
]
_BY_NAME = {name: dec for _, name, _, dec in _CODECS}


def to_json(value):
    """Tagged JSON-able object for a domain value."""
    from .repro import ReproReport

    if isinstance(value, ReproReport):
        return {"type": "ReproReport", "value": value.to_json()}
    for cls, name, enc, _ in _CODECS:
        if isinstance(value, cls):
            return {"type": name, "value": enc(value)}
    raise TypeError(f"no JSON encoding for {type(value).__name__}")


def from_json(obj):
    from .repro import ReproReport

    if not isinstance(obj, dict) or "type" not in obj or "value" not in obj:
        raise SchemaError("expected {\"type\": ..., \"value\": ...}")
    name = obj["type"]
    if name == "ReproReport":
        return ReproReport.from_json(obj["value"], "$.value")
    if name not in _BY_NAME:
        raise SchemaError(f"unknown type {name!r}", "$.type")
    return _BY_NAME[name](obj["value"], "$.value")


def serialize(value):
    return dumps(to_json(value))


def parse(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None
    return from_json(obj)

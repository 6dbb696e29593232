from itertools import combinations, combinations_with_replacement, permutations

import pytest
from hypothesis import given, settings, strategies as st

from thetainv.field import Scalar, ONE, SQRT5
from thetainv.laurent import LaurentPoly, TriLaurent, tl_substitute3
from thetainv.linalg import rank_over_Q
from thetainv.groups import rho_235, eval_word
from thetainv.sl2 import casimir, ad_of, tsq_mul, TensorSq, TensorSqLaurent
from thetainv.theta import (
    ThetaClass, SThetaElt, DecoratedTheta, normalize_triple, embed_class, embed_triple, w_scalar, w_lie,
    f_poly, coker_project, zero_sum_rep,
)
from conftest import tensor_sqs, image, LAW

C = casimir()


def sign(p):
    return -1 if sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j]) % 2 else 1


def substituted_fp(p):
    """The 12-term expansion of f_p(1, x, x^3), typed out term by term."""
    terms = [
        (3 * p - 1, 1), (3 * p - 2, -1), (2 * p + 1, -1), (2 * p - 3, 1),
        (p + 2, 1), (p - 3, -1), (-p + 3, -1), (-p - 2, 1),
        (-2 * p + 3, 1), (-2 * p - 1, -1), (-3 * p + 2, -1), (-3 * p + 1, 1),
    ]
    out = LaurentPoly()
    for e, c in terms:
        out = out + LaurentPoly.monomial(e, c)
    return out


def test_canonical_forms():
    assert normalize_triple(0, 2, 0, 1) == ThetaClass(0, {(0, 1, 2): 1})
    assert normalize_triple(0, 1, 0, 2) == ThetaClass(0, {(0, 1, 2): -1})
    assert normalize_triple(1, 1, 0, 2) == ThetaClass(1, {(0, 1, 2): 1})
    assert normalize_triple(0, 5, 6, 7) == normalize_triple(0, 0, 1, 2)
    assert normalize_triple(0, 3, 3, 1).is_zero()
    assert not normalize_triple(1, 3, 3, 1).is_zero()


def test_theta_class_arithmetic():
    a = normalize_triple(0, 0, 1, 5)
    assert (a + a.scale(-1)).is_zero()
    assert a.scale(2) == a + a
    with pytest.raises(ValueError):
        a + normalize_triple(1, 0, 1, 5)
    with pytest.raises(ValueError):
        ThetaClass(2)


def test_zero_sum_rep():
    assert zero_sum_rep((0, 1, 5)) == (-2, -1, 3)
    with pytest.raises(ValueError):
        zero_sum_rep((0, 0, 5))


def test_w_scalar_example():
    assert w_scalar(0, 0, 1, 5) == normalize_triple(0, 1, -5, 4)
    assert str(w_scalar(0, 0, 1, 5)) == "-[t^-5∧t∧t^4]"


@pytest.mark.parametrize("p", range(3, 13))
def test_f_poly_is_w_image(p):
    assert embed_class(w_scalar(0, 0, 1, p)).image == f_poly(p)
    assert len(f_poly(p).terms) == 12


@pytest.mark.parametrize("p", range(3, 13))
def test_f_poly_substitution_frozen(p):
    g = tl_substitute3(f_poly(p), 0, 1, 3)
    assert g == substituted_fp(p)
    assert (g.max_degree(), g.min_degree()) == (3 * p - 1, -(3 * p - 1))
    assert g.coeff(3 * p - 1) == 1 and g.coeff(-(3 * p - 1)) == 1


def test_f_poly_rank():
    assert rank_over_Q([f_poly(p) for p in range(3, 21)]) == 18


def test_eps1_family_rank():
    assert rank_over_Q([embed_class(w_scalar(1, 0, 1, p)).image for p in range(1, 16)]) == 15


def test_example_235_classes():
    # 12 and -3 + sqrt5 times the same class are Q-independent images
    x3 = eval_word(rho_235(1), "x3")
    deco = lambda P, a: TensorSqLaurent.monomial(P, a)
    for p in (3, 4, 9):
        u = w_lie(DecoratedTheta(0, (deco(C, 0), deco(C, 1), deco(C, p))))
        v = w_lie(DecoratedTheta(0, (deco(C, 0), deco(ad_of(x3), 1), deco(ad_of(x3 @ x3), p))))
        assert u.image == f_poly(p).scale(12)
        assert v.image == f_poly(p).scale(Scalar(-3, 0, 1))
        assert rank_over_Q([u.image, v.image]) == 2


def test_coker_project():
    x = embed_class(w_scalar(1, 0, 0, 0))
    assert x.image == TriLaurent.constant(12)
    assert coker_project(1, x).is_zero()
    y = embed_class(w_scalar(0, 0, 1, 4))
    assert coker_project(0, y) == y
    with pytest.raises(ValueError):
        coker_project(1, y)


def test_s_theta_parity_checks():
    a = embed_triple(0, 0, 1, 2)
    with pytest.raises(ValueError):
        a + embed_triple(1, 0, 1, 2)
    with pytest.raises(TypeError):
        a + 1


def test_decorated_theta_validation():
    with pytest.raises(ValueError):
        DecoratedTheta(0, (TensorSqLaurent.monomial(C),) * 2)
    with pytest.raises(TypeError):
        DecoratedTheta(0, (C, C, C))


@pytest.mark.parametrize("eps", [0, 1])
def test_embedding_independent_on_basis_box(eps):
    pick = combinations if eps == 0 else combinations_with_replacement
    triples = list(pick(range(9), 3))
    images = [embed_triple(eps, *t).image for t in triples]
    assert all(x.symmetry_ok() for x in map(lambda im: SThetaElt(eps, im), images))
    assert rank_over_Q(images) == len(triples)


def test_inversion_relation():
    assert embed_triple(0, 1, 2, 4) == embed_triple(0, -1, -2, -4)
    assert embed_triple(1, 1, 2, 4) == embed_triple(1, -1, -2, -4)


# -- laws -----------------------------------------------------------------

triples = st.tuples(st.integers(-8, 8), st.integers(-8, 8), st.integers(-8, 8))


@pytest.mark.law
@settings(max_examples=LAW)
@given(st.sampled_from([0, 1]), triples, st.integers(-10, 10), st.permutations(range(3)))
def test_w_scalar_well_defined(eps, abc, k, perm):
    a, b, c = abc
    base = w_scalar(eps, a, b, c)
    assert w_scalar(eps, a + k, b + k, c + k) == base
    q = [abc[j] for j in perm]
    img = embed_class(w_scalar(eps, *q)).image
    want = embed_class(base).image
    assert img == (want if eps == 1 else want.scale(sign(perm)))


@pytest.mark.law
@settings(max_examples=LAW)
@given(st.sampled_from([0, 1]), st.lists(st.tuples(triples, st.integers(-3, 3)), max_size=4))
def test_embed_class_symmetry(eps, parts):
    acc = ThetaClass(eps)
    for (p, q, r), c in parts:
        s = p + q + r
        acc = acc + normalize_triple(eps, p, q, r - s, Scalar(c))  # exponent sum 0, as for every W-image
    assert embed_class(acc).symmetry_ok()


def decorated(eps):
    mono = st.tuples(tensor_sqs, st.integers(-4, 4)).map(lambda x: TensorSqLaurent.monomial(*x))
    return st.tuples(mono, mono, mono)


@pytest.mark.law
@settings(max_examples=LAW)
@given(st.sampled_from([0, 1]), decorated(0), st.permutations(range(3)), st.integers(0, 119), st.integers(0, 119))
def test_w_lie_well_defined(eps, decs, perm, i, j):
    base = w_lie(DecoratedTheta(eps, decs))
    moved = w_lie(DecoratedTheta(eps, tuple(decs[k] for k in perm)))
    assert moved.image == (base.image if eps == 1 else base.image.scale(sign(perm)))
    elems = image(1)
    a, b = ad_of(elems[i]), ad_of(elems[j])
    acted = tuple(d.left_mul(a).right_mul(b) for d in decs)
    assert w_lie(DecoratedTheta(eps, acted)) == base
    assert w_lie(DecoratedTheta(eps, tuple(d.shift(3) for d in decs))) == base


@pytest.mark.law
@settings(max_examples=LAW)
@given(st.integers(3, 5000))
def test_f_poly_extremal(p):
    g = tl_substitute3(f_poly(p), 0, 1, 3)
    assert g.max_degree() == 3 * p - 1 and g.min_degree() == -(3 * p - 1)

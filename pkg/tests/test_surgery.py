import pytest
from hypothesis import given, settings, strategies as st

from thetainv.field import Scalar
from thetainv.groups import Word
from thetainv.linalg import rank_over_Q
from thetainv.surgery import (
    SurgerySpec, Certificate, z_theta_surgery, cyclic_lift_value, independence_certificate, surgery_coefficient,
    STANDING_HYPOTHESIS,
)
from thetainv.theta import f_poly, embed_class, w_scalar
from conftest import LAW

X3, X3SQ = Word.gen(2), Word.gen(2, 2)


def spec(eps, *decs, variant=1):
    return SurgerySpec(eps, tuple(decs), variant)


def sign(p):
    return -1 if sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j]) % 2 else 1


@pytest.mark.parametrize("p", range(3, 10))
def test_surgery_values(p):
    a = z_theta_surgery(spec(0, ("1", 0), ("1", 1), ("1", p)))
    b = z_theta_surgery(spec(0, ("1", 0), ("x3", 1), ("x3 x3", p)))
    assert a.image == f_poly(p).scale(24)
    assert b.image == f_poly(p).scale(Scalar(-6, 0, 2))
    assert rank_over_Q([a.image, b.image]) == 2


def test_surgery_coefficient():
    assert surgery_coefficient(spec(0, ("1", 0), ("1", 1), ("1", 5))) == 24
    assert surgery_coefficient(spec(0, ("1", 0), ("x3", 1), ("x3 x3", 5))) == Scalar(-6, 0, 2)
    assert surgery_coefficient(spec(0, ("1", 0), ("x3", 1), ("x3 x3", 5), variant=2)) == Scalar(-6, 0, -2)


def test_eps1_uses_extension():
    s = spec(1, ("1", 0), ("t", 1), ("1", 3))
    assert s.rep.presentation.generators[-1] == "t"
    # t acts as -I, which is trivial under Ad
    assert z_theta_surgery(s) == z_theta_surgery(spec(1, ("1", 0), ("1", 1), ("1", 3)))
    with pytest.raises(ValueError):
        spec(0, ("1", 0), ("t", 1), ("1", 3))


def test_spec_validation_and_describe():
    with pytest.raises(ValueError):
        SurgerySpec(0, (("1", 0),))
    with pytest.raises(ValueError):
        SurgerySpec(2, (("1", 0),) * 3)
    assert spec(0, ("1", 0), ("x3", 1), ("x3 x3", 5)).describe() == "Θ⁰(1, x3·t, x3x3·t^5)"


@pytest.mark.parametrize("eps, p0", [(0, 3), (1, 1)])
def test_coker_certificate(eps, p0):
    specs = [spec(eps, ("1", 0), ("1", 1), ("1", p)) for p in range(p0, p0 + 10)]
    cert = independence_certificate(specs)
    assert cert.rank_coker == 10 and cert.rank_full == 10
    assert cert.conclusion == "independent-in-cokernel"
    assert cert.hypotheses == (STANDING_HYPOTHESIS,)


def test_certificate_detects_dependence():
    s = spec(1, ("1", 0), ("1", 0), ("1", 0))  # constant image, killed by the projection
    cert = independence_certificate([s, spec(1, ("1", 0), ("1", 1), ("1", 2))])
    assert cert.rank_full == 2 and cert.rank_coker == 1
    assert cert.conclusion == "dependent-in-cokernel"


def test_certificate_errors():
    with pytest.raises(ValueError):
        independence_certificate([])
    with pytest.raises(ValueError):
        independence_certificate([spec(0, ("1", 0), ("1", 1), ("1", 3)), spec(1, ("1", 0), ("1", 1), ("1", 3))])
    with pytest.raises(ValueError):
        Certificate((), (), 1, 0, "independent-in-cokernel")


def test_cyclic_lift_rule():
    base = cyclic_lift_value(X3, X3SQ, 1, 5, 1)
    assert base == z_theta_surgery(spec(0, ("1", 0), ("x3", 1), ("x3 x3", 5)))
    for r in range(1, 7):
        assert cyclic_lift_value(X3, X3SQ, 1, 5, r) == base.scale(r)
    with pytest.raises(ValueError):
        cyclic_lift_value(X3, X3SQ, 1, 5, 0)


# -- laws -----------------------------------------------------------------

short_words = st.lists(st.tuples(st.integers(0, 3), st.sampled_from([1, -1])), max_size=5).map(Word)
decs = st.tuples(*[st.tuples(short_words, st.integers(-5, 5))] * 3)


@pytest.mark.law
@settings(max_examples=LAW)
@given(st.sampled_from([0, 1]), decs, short_words, st.integers(-6, 6), st.permutations(range(3)))
def test_surgery_invariances(eps, ds, g, k, perm):
    s = SurgerySpec(eps, ds)
    base = z_theta_surgery(s)
    assert base.symmetry_ok()
    left = SurgerySpec(eps, tuple((g * w, a) for w, a in ds))
    assert z_theta_surgery(left) == base
    shifted = SurgerySpec(eps, tuple((w, a + k) for w, a in ds))
    assert z_theta_surgery(shifted) == base
    moved = z_theta_surgery(s.permuted(perm))
    assert moved == (base if eps == 1 else base.scale(sign(perm)))


@pytest.mark.law
@settings(max_examples=LAW)
@given(short_words, short_words, st.integers(-6, 6), st.integers(-6, 6), st.integers(1, 8), st.sampled_from([0, 1]))
def test_cyclic_lift_linear_in_r(g, h, p, q, r, eps):
    assert cyclic_lift_value(g, h, p, q, r, eps) == cyclic_lift_value(g, h, p, q, 1, eps).scale(r)

from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from thetainv.field import Scalar
from thetainv.laurent import LaurentPoly, TriLaurent
from thetainv.linalg import ExactMatrix
from thetainv.sl2 import TensorSq, LieElt
from thetainv.groups import rho_235, enumerate_image

LAW = 1000

settings.register_profile(
    "exact",
    max_examples=LAW,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("exact")


def pytest_configure(config):
    config.addinivalue_line("markers", "law: randomized property law (>= 1000 examples)")


small_q = st.fractions(min_value=-6, max_value=6, max_denominator=4)
scalars = st.builds(Scalar, small_q, small_q, small_q, small_q)
nonzero_scalars = scalars.filter(lambda x: not x.is_zero())
tiny_ints = st.integers(-3, 3)
int_scalars = st.builds(Scalar, tiny_ints, tiny_ints, tiny_ints, tiny_ints)


def laurent_polys(max_terms=4, lo=-5, hi=5, coeffs=int_scalars):
    return st.dictionaries(st.integers(lo, hi), coeffs, max_size=max_terms).map(LaurentPoly)


def tri_laurents(max_terms=4):
    keys = st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4))
    return st.dictionaries(keys, int_scalars, max_size=max_terms).map(TriLaurent)


tensor_sqs = st.lists(st.lists(int_scalars, min_size=3, max_size=3), min_size=3, max_size=3).map(TensorSq)
lie_elts = st.builds(LieElt, int_scalars, int_scalars, int_scalars)


def int_matrices(max_rows=4, max_cols=4, lo=-3, hi=3):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    ).map(ExactMatrix)


@lru_cache(maxsize=None)
def image(variant=1):
    return tuple(enumerate_image(rho_235(variant)))


@pytest.fixture(scope="session", params=[1, 2], ids=["v1", "v2"])
def variant(request):
    return request.param

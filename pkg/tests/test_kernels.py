import numpy as np
import pytest

from chowlab import _kernels as K
from chowlab.chow import _dp_arrays
from chowlab.families import gen_boolean
from chowlab.poset import rank_array

from .conftest import random_corpus


def test_env_flag_selects_path(monkeypatch):
    monkeypatch.setenv("CHOWLAB_NO_NUMBA", "1")
    assert not K.use_numba()
    monkeypatch.setenv("CHOWLAB_NO_NUMBA", "0")
    assert K.use_numba() == K.HAVE_NUMBA
    monkeypatch.delenv("CHOWLAB_NO_NUMBA")
    assert K.use_numba() == K.HAVE_NUMBA


@pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba not installed")
def test_chain_sum_paths_agree():
    for label, P, r in random_corpus(60) + [("boolean(5)", *gen_boolean(5))]:
        ra = rank_array(P, r)
        args = (*_dp_arrays(P, ra), int(ra[P.index(P.top)]))
        t1, m1 = K.chain_sum_numba(*args)
        t2, m2 = K.chain_sum_numpy(*args)
        assert np.array_equal(t1, t2), label
        assert m1 == pytest.approx(m2)


@pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba not installed")
@pytest.mark.parametrize("bounds", [(1,), (2, 2), (1, 2, 3), (3, 1, 2, 1), (4, 4, 4), (0, 3)])
def test_scd_paths_agree(bounds):
    b = np.asarray(bounds, dtype=np.int64)
    s = K.strides_of(b)
    o1, f1 = K.scd_build_numba(b, s)
    o2, f2 = K.scd_build_numpy(b, s)
    assert np.array_equal(o1, o2) and np.array_equal(f1, f2)
    v1 = K.scd_verify_numba(b, s, o1, f1)
    v2 = K.scd_verify_numpy(b, s, o2, f2)
    assert list(v1) == list(v2) == [True] * 5


def test_verify_catches_broken_decompositions():
    bounds = (2, 2)
    order, offsets = K.scd_build(bounds)
    swapped = order.copy()
    swapped[[0, 1]] = swapped[[1, 0]]
    assert not all(K.scd_verify(bounds, swapped, offsets))
    merged = np.array([0, len(order)], dtype=np.int64)
    assert not all(K.scd_verify(bounds, order, merged))

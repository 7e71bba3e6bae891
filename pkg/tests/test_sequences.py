import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chowlab.scd import is_monomial_order_ideal, is_pure_ideal
from chowlab.sequences import (
    SearchCapExceeded,
    d_binomial_expansion,
    delta,
    hibi_check,
    is_log_concave,
    is_O_sequence,
    is_palindromic,
    is_pure_O_len3,
    is_SI_sequence,
    is_unimodal,
    logconcavity_from_delta,
    macaulay_next_bound,
    order_ideal_bruteforce,
    pure_ideal_bruteforce,
)


def test_basic_shapes():
    assert is_palindromic((1, 4, 1))
    assert not is_palindromic((1, 4, 2))
    assert is_unimodal((1, 3, 3, 1))
    v = is_unimodal((1, 3, 2, 3))
    assert not v and v.witness == 3
    assert is_log_concave((1, 4, 1))
    v = is_log_concave((1, 2, 5))
    assert not v and v.witness == 1


def test_delta():
    assert delta((1, 11, 11, 1)) == (1, 10)
    assert delta((1, 26, 66, 26, 1)) == (1, 25, 40)
    assert delta((1, 7, 9, 7, 1)) == (1, 6, 2)
    assert delta((1,)) == (1,)
    with pytest.raises(ValueError):
        delta((1, 2))
    with pytest.raises(ValueError):
        delta((2, 1, 2))


@pytest.mark.parametrize(
    "n, d, terms",
    [(5, 2, ((3, 2), (2, 1))), (6, 2, ((4, 2),)), (0, 3, ()), (1, 1, ((1, 1),)), (10, 3, ((5, 3),)), (11, 3, ((5, 3), (2, 2)))],
)
def test_binomial_expansion_examples(n, d, terms):
    assert d_binomial_expansion(n, d).terms == terms


@given(st.integers(0, 5000), st.integers(1, 7))
def test_binomial_expansion_is_valid(n, d):
    e = d_binomial_expansion(n, d)
    assert e.value() == n
    ks = [k for k, _ in e.terms]
    js = [j for _, j in e.terms]
    assert js == list(range(d, d - len(js), -1))
    assert all(a > b for a, b in zip(ks, ks[1:]))
    assert all(k >= j >= 1 for k, j in e.terms)


@pytest.mark.parametrize("n, d, bound", [(5, 2, 7), (3, 1, 6), (0, 2, 0), (4, 1, 10), (2, 2, 2)])
def test_macaulay_bound_examples(n, d, bound):
    assert macaulay_next_bound(n, d) == bound


def _monomials(nvars, k):
    return list(itertools.combinations_with_replacement(range(nvars), k))


@pytest.mark.parametrize("d", [1, 2, 3])
def test_macaulay_bound_matches_lex_segments(d):
    # the last n degree-d monomials in lex order form a compressed family;
    # count the degree d+1 monomials all of whose divisors lie in it
    for n in range(0, 12):
        nvars = n + 1
        best = 0
        mons_d1 = _monomials(nvars, d + 1)
        seg = set(sorted(_monomials(nvars, d), reverse=True)[:n])
        for m in mons_d1:
            if all(tuple(sorted(m[:i] + m[i + 1:])) in seg for i in range(d + 1)):
                best += 1
        assert macaulay_next_bound(n, d) == best


def test_O_sequences():
    assert is_O_sequence((1, 3, 6, 10))
    assert is_O_sequence((1, 2, 3, 4))
    v = is_O_sequence((1, 2, 4))
    assert not v and v.witness == 1
    assert is_O_sequence((1, 0, 0))
    assert not is_O_sequence((1, 0, 1))
    with pytest.raises(ValueError):
        is_O_sequence((2, 1))


def test_SI_sequences():
    assert is_SI_sequence((1, 4, 1))
    assert is_SI_sequence((1, 26, 66, 26, 1))
    assert not is_SI_sequence((1, 2, 1, 2, 1))
    assert not is_SI_sequence((1, 2, 5, 2, 1))  # delta (1,1,3) fails Macaulay
    assert not is_SI_sequence((2, 3, 2))


def test_pure_len3():
    assert is_pure_O_len3((1, 3, 2))
    assert not is_pure_O_len3((1, 5, 2))
    assert is_pure_O_len3((1, 5, 3))
    assert not is_pure_O_len3((1, 2, 4))


def test_hibi():
    assert hibi_check((1, 3, 4, 2))
    v = hibi_check((1, 3, 1, 2))
    assert not v and v.witness == (1, 2)


def test_logconcavity_from_delta():
    assert logconcavity_from_delta((1, 4, 1))
    assert logconcavity_from_delta((1, 11, 11, 1))
    assert not logconcavity_from_delta((1, 2, 5, 2, 1))  # delta (1,1,3) is not log-concave


def test_bruteforce_order_ideal():
    found = order_ideal_bruteforce((1, 2, 3), var_limit=2)
    assert found
    assert is_monomial_order_ideal(found.ideal)
    assert found.ideal.h_vector == (1, 2, 3)
    assert not order_ideal_bruteforce((1, 2, 4), var_limit=2)


def test_bruteforce_pure():
    found = pure_ideal_bruteforce((1, 3, 2), var_limit=3)
    assert found
    assert is_pure_ideal(found.ideal)
    assert found.ideal.h_vector == (1, 3, 2)
    assert not pure_ideal_bruteforce((1, 5, 2), var_limit=5)


def test_bruteforce_cap(monkeypatch):
    monkeypatch.setenv("CHOWLAB_SIZE_CAP", "3")
    with pytest.raises(SearchCapExceeded):
        pure_ideal_bruteforce((1, 5, 2), var_limit=5)


def test_pure_len3_matches_bruteforce_small():
    for h1 in range(1, 4):
        for h2 in range(0, comb(h1 + 1, 2) + 2):
            assert is_pure_O_len3((1, h1, h2)) == bool(pure_ideal_bruteforce((1, h1, h2), var_limit=h1))

import pytest

from chowlab.chow import chow_chain_sum
from chowlab.families import (
    gen_boolean,
    gen_chain,
    gen_nonlogconcave_counterexample,
    gen_nonpure_counterexample,
    gen_product_of_chains,
    gen_random_graded,
    generate,
    parse_family,
)
from chowlab.poset import dumps_poset, is_ranked, poset_rank, validate_weak_rank, whitney_numbers
from chowlab.scd import grid_whitney


def test_chain():
    P, r = gen_chain(3)
    assert P.elements == ("0", "1", "2", "3")
    assert r == {"0": 0, "1": 1, "2": 2, "3": 3}


def test_boolean():
    P, r = gen_boolean(3)
    assert len(P) == 8 and P.bottom == "{}" and P.top == "{1,2,3}"
    assert whitney_numbers(P, r) == (1, 3, 3, 1)


def test_boolean_cap(monkeypatch):
    with pytest.raises(ValueError):
        gen_boolean(7)
    monkeypatch.setenv("CHOWLAB_SIZE_CAP", "200")
    assert len(gen_boolean(7)[0]) == 128


@pytest.mark.parametrize("bounds", [(1, 2), (2, 2, 1), (3,)])
def test_product(bounds):
    P, r = gen_product_of_chains(*bounds)
    assert whitney_numbers(P, r) == grid_whitney(bounds)
    assert is_ranked(P, r)


def test_nonpure_shape():
    for m in (1, 2, 5):
        P, r = gen_nonpure_counterexample(m)
        assert len(P) == m + 6
        assert validate_weak_rank(P, r)
        assert poset_rank(P, r) == 5


@pytest.mark.parametrize("m", range(1, 21))
def test_nonpure_h_vector(m):
    from chowlab.scd import sfy_generate

    P, r = gen_nonpure_counterexample(m)
    assert sfy_generate(P, r).h_vector == (1, m + 3, 2)


def test_nonlogconcave_shape():
    P, r = gen_nonlogconcave_counterexample(7, 2)
    assert poset_rank(P, r) == 7 and is_ranked(P, r)
    w = whitney_numbers(P, r)
    assert w[2] == 4 + 8 and w[4] == 4 + 1 and w[6] == 4 + 1


def test_nonlogconcave_rejects_small_rank():
    with pytest.raises(ValueError):
        gen_nonlogconcave_counterexample(6, 2)


def test_random_is_deterministic_and_valid():
    for seed in range(40):
        for weak in (False, True):
            P, r = gen_random_graded(seed, 6, 4, weak=weak)
            Q, rq = gen_random_graded(seed, 6, 4, weak=weak)
            assert dumps_poset(P, r) == dumps_poset(Q, rq)
            assert validate_weak_rank(P, r)
            assert poset_rank(P, r) <= 6
            if not weak:
                assert is_ranked(P, r)
                assert max(whitney_numbers(P, r)) <= 4
            assert chow_chain_sum(P, r).degree == poset_rank(P, r) - 1


def test_random_weak_produces_unranked():
    assert any(not is_ranked(*gen_random_graded(s, 6, 4, weak=True)) for s in range(20))


def test_random_rank_one_is_a_chain():
    P, r = gen_random_graded(3, 1, 4)
    assert len(P) == 2 and P.covers == ((P.bottom, P.top),)


def test_parse_family():
    spec = parse_family("family:random(7, 5, max_width=3)")
    assert spec.name == "random" and spec.args == (7, 5) and spec.kwargs == (("max_width", 3),)
    assert str(parse_family("boolean(3)")) == "boolean(3)"
    with pytest.raises(ValueError):
        parse_family("moebius(3)")
    with pytest.raises(ValueError):
        parse_family("chain(n=3, 2)")


def test_generate():
    P, r = generate("product(1,2)")
    assert len(P) == 6
    P, r = generate("random(1,5,3,weak=1)")
    assert validate_weak_rank(P, r)
    with pytest.raises(ValueError):
        generate("chain(1,2,3)")

import itertools

import pytest

from chowlab.families import (
    gen_boolean,
    gen_chain,
    gen_nonlogconcave_counterexample,
    gen_nonpure_counterexample,
    gen_product_of_chains,
    gen_random_graded,
)
from chowlab.poset import build_poset


def diamond(k):
    atoms = [f"a{i}" for i in range(k)]
    covers = [("0", a) for a in atoms] + [(a, "1") for a in atoms]
    return build_poset(["0", *atoms, "1"], covers), {"0": 0, "1": 2, **{a: 1 for a in atoms}}


def named_corpus():
    """Small named posets; (label, poset, rank)."""
    out = []
    for n in range(1, 8):
        out.append((f"chain({n})", *gen_chain(n)))
    for n in range(1, 6):
        out.append((f"boolean({n})", *gen_boolean(n)))
    for bounds in [(1,), (1, 1), (1, 2), (2, 2), (1, 1, 1), (2, 3), (1, 1, 2), (3, 3), (1, 2, 3)]:
        out.append((f"product{bounds}", *gen_product_of_chains(*bounds)))
    for m in (1, 2, 3, 4):
        out.append((f"nonpure({m})", *gen_nonpure_counterexample(m)))
    for n, m in [(7, 1), (7, 2), (8, 1), (9, 1)]:
        out.append((f"nonlogconcave({n},{m})", *gen_nonlogconcave_counterexample(n, m)))
    for k in (2, 3, 4):
        out.append((f"diamond({k})", *diamond(k)))
    return out


def random_corpus(count, max_rank=7, max_width=4, seed=2024):
    return [
        (f"random({seed},{i})", *gen_random_graded([seed, i], max_rank, max_width, weak=bool(i % 2)))
        for i in range(count)
    ]


NAMED = named_corpus()


@pytest.fixture(params=NAMED, ids=[c[0] for c in NAMED])
def named(request):
    return request.param


@pytest.fixture(params=["numba", "numpy"])
def backend(request, monkeypatch):
    if request.param == "numpy":
        monkeypatch.setenv("CHOWLAB_NO_NUMBA", "1")
    else:
        monkeypatch.delenv("CHOWLAB_NO_NUMBA", raising=False)
    return request.param


def all_chains_bruteforce(P, rank, min_gap):
    """Chains from the bottom by checking every subset of non-bottom elements."""
    others = [e for e in P.elements if e != P.bottom]
    out = set()
    for k in range(len(others) + 1):
        for sub in itertools.combinations(others, k):
            seq = sorted(sub, key=lambda e: rank[e])
            prev = P.bottom
            good = True
            for e in seq:
                if not P.lt(prev, e) or rank[e] - rank[prev] < min_gap:
                    good = False
                    break
                prev = e
            if good:
                out.add(tuple(seq))
    return out


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")

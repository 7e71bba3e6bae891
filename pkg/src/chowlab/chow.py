"""Chow polynomials of weakly ranked posets.

Two independent computations are provided:

* :func:`chow_chain_sum` evaluates the sum over chains from the bottom of
  products of ``t + t^2 + ... + t^(d-1)`` (``d`` the rank gap), grouped by
  the last chain element so the work is linear in the number of comparable
  pairs rather than in the number of chains;
* :func:`chow_via_fy` counts Feichtner-Yuzvinsky monomials degree by degree.
"""

from __future__ import annotations

from collections.abc import Iterator

import numpy as np

from . import _kernels
from .monomials import Monomial, MonomialSet
from .polynomial import IntPolynomial
from .poset import Poset, WeakRank, enumerate_chains_from_bottom, rank_array

FYMonomial = Monomial


def gap_factor(d: int) -> IntPolynomial:
    """``t + t^2 + ... + t^(d-1)``; zero for ``d <= 1``."""
    return IntPolynomial([0] + [1] * (d - 1)) if d > 1 else IntPolynomial()


def _dp_arrays(P: Poset, r: np.ndarray):
    N = len(P)
    indptr = np.zeros(N + 1, dtype=np.int64)
    preds, gaps = [], []
    for x in range(N):
        rx = r[x]
        ys = sorted(y for y in P._below[x] if rx - r[y] >= 2)
        preds.extend(ys)
        gaps.extend(int(rx - r[y]) for y in ys)
        indptr[x + 1] = len(preds)
    return (
        np.asarray(P._topo, dtype=np.int64),
        indptr,
        np.asarray(preds, dtype=np.int64),
        np.asarray(gaps, dtype=np.int64),
    )


def _check_chow(h: IntPolynomial, n: int) -> IntPolynomial:
    if h.degree != n - 1 or not h.is_monic():
        raise AssertionError(f"Chow polynomial {h} is not monic of degree {n - 1}")
    return h


def chow_chain_sum(P: Poset, rank: WeakRank) -> IntPolynomial:
    """Chow polynomial from the chain-sum formula.

    Chains with a unit gap contribute zero and are skipped.  Runs in int64
    through :mod:`chowlab._kernels` and redoes the sum with Python integers
    when the coefficient mass could overflow.
    """
    r = rank_array(P, rank)
    n = int(r[P.index(P.top)])
    order, indptr, preds, gaps = _dp_arrays(P, r)
    coeffs, mass = _kernels.chain_sum(order, indptr, preds, gaps, n)
    if mass >= _kernels.INT64_SAFE:
        coeffs, _ = _kernels.chain_sum_numpy(order, indptr, preds, gaps, n, exact=True)
    return _check_chow(IntPolynomial(int(c) for c in coeffs), n)


def chow_chain_sum_by_chains(P: Poset, rank: WeakRank) -> IntPolynomial:
    """Literal chain-by-chain evaluation; exponential, for cross-checks."""
    n = rank[P.top]
    total = IntPolynomial()
    for chain in enumerate_chains_from_bottom(P, rank, min_gap=2):
        term = IntPolynomial([1])
        prev = 0
        for p in chain:
            term = term * gap_factor(rank[p] - prev)
            prev = rank[p]
        total = total + term
    return _check_chow(total, n)


def iter_fy_monomials(P: Poset, rank: WeakRank, max_degree: int | None = None) -> Iterator[Monomial]:
    """All FY monomials, lexicographic in (chain, exponents), empty one first."""
    r = rank_array(P, rank)
    above = P._above_sorted
    names = P.elements

    def rec(i, support, exps, deg):
        for j in above[i]:
            d = int(r[j] - r[i])
            for ell in range(1, d):
                if max_degree is not None and deg + ell > max_degree:
                    break
                s2, e2 = support + (names[j],), exps + (ell,)
                yield Monomial(s2, e2)
                yield from rec(j, s2, e2, deg + ell)

    if max_degree is None or max_degree >= 0:
        yield Monomial()
        yield from rec(P.index(P.bottom), (), (), 0)


def enumerate_fy_monomials(P: Poset, rank: WeakRank, max_degree: int | None = None) -> MonomialSet:
    return MonomialSet(iter_fy_monomials(P, rank, max_degree))


def chow_via_fy(P: Poset, rank: WeakRank, cross_check: bool = False) -> IntPolynomial:
    """Chow polynomial as the degree distribution of FY monomials.

    Counts without materialising monomials.  ``cross_check`` compares the
    result with :func:`chow_chain_sum` and raises on mismatch.
    """
    r = rank_array(P, rank)
    n = int(r[P.index(P.top)])
    above = P._above_sorted
    counts = [0] * max(n, 1)
    counts[0] = 1

    def rec(i, deg):
        for j in above[i]:
            d = int(r[j] - r[i])
            for ell in range(1, d):
                counts[deg + ell] += 1
                rec(j, deg + ell)

    rec(P.index(P.bottom), 0)
    h = _check_chow(IntPolynomial(counts), n)
    if cross_check:
        other = chow_chain_sum(P, rank)
        if other != h:
            raise AssertionError(f"FY count {h.coefficients} != chain sum {other.coefficients}")
    return h

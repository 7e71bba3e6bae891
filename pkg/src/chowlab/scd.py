"""Symmetric chain decompositions and the SFY monomial family.

Products of chains are decomposed by the recursive L-shape construction:
decompose the tail ``C_{r_2} x ... x C_{r_n}``, then split every
``C_{r_1} x S'`` into chains that climb column ``j`` and turn right along
row ``len(S') - j``.  FY is decomposed class by class, each class (monomials
supported on a fixed chain ``C``, possibly with the top added) being a
product of chains with the top coordinate last.
"""

from __future__ import annotations

from collections.abc import Hashable, Sequence
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .monomials import Monomial, MonomialSet
from .poset import Poset, WeakRank, rank_array
from .sequences import Verdict

GridPoint = tuple[int, ...]


@dataclass(frozen=True)
class ChainDecomposition:
    """Chains listed bottom-up, sorted by their first element where possible."""

    chains: tuple[tuple[Hashable, ...], ...]
    host_rank: int
    bounds: tuple[int, ...] | None = None
    verdicts: dict[str, bool] = field(default_factory=dict, compare=False)

    @property
    def starts(self) -> list:
        return [c[0] for c in self.chains]

    def __len__(self) -> int:
        return len(self.chains)

    def to_text(self) -> str:
        def fmt(x):
            if isinstance(x, tuple):
                return "(" + " ".join(str(v) for v in x) + ")"
            return str(x)

        return "".join(", ".join(fmt(x) for x in chain) + "\n" for chain in self.chains)


def _check_bounds(bounds: Sequence[int]) -> tuple[int, ...]:
    bounds = tuple(int(r) for r in bounds)
    if not bounds:
        raise ValueError("need at least one chain factor")
    if any(r < 0 for r in bounds):
        raise ValueError(f"chain ranks must be nonnegative, got {bounds}")
    return bounds


def _decode(points: np.ndarray, bounds: tuple[int, ...]) -> list[GridPoint]:
    strides = _kernels.strides_of(bounds)
    radix = np.asarray(bounds, dtype=np.int64) + 1
    digits = (points[:, None] // strides[None, :]) % radix[None, :]
    return [tuple(int(v) for v in row) for row in digits]


def scd_product_of_chains(bounds: Sequence[int]) -> ChainDecomposition:
    """Symmetric chain decomposition of ``C_{r_1} x ... x C_{r_n}``.

    Coordinates follow the argument order.  The result carries the five
    structural verdicts (partition, saturated, symmetric, formula, whitney)
    and raises ``AssertionError`` if any fails.
    """
    bounds = _check_bounds(bounds)
    order, offsets = _kernels.scd_build(bounds)
    ok = _kernels.scd_verify(bounds, order, offsets)
    verdicts = dict(zip(("partition", "saturated", "symmetric", "formula", "whitney"), (bool(v) for v in ok)))
    if not all(verdicts.values()):
        raise AssertionError(f"decomposition of {bounds} failed checks: {verdicts}")
    pts = _decode(order, bounds)
    chains = tuple(tuple(pts[offsets[c] : offsets[c + 1]]) for c in range(len(offsets) - 1))
    return ChainDecomposition(chains, sum(bounds), bounds, verdicts)


def verify_product_scd(bounds: Sequence[int]) -> dict[str, bool]:
    """Build and check the decomposition without materialising tuples."""
    bounds = _check_bounds(bounds)
    order, offsets = _kernels.scd_build(bounds)
    ok = _kernels.scd_verify(bounds, order, offsets)
    return dict(zip(("partition", "saturated", "symmetric", "formula", "whitney"), (bool(v) for v in ok)))


def initial_elements_formula(bounds: Sequence[int]) -> set[GridPoint]:
    """Points with ``a_s <= r_s`` and ``a_s <= sum_{i>s} (r_i - 2 a_i)`` for all ``s``.

    Enumerated from the last coordinate backwards so only feasible
    prefixes are expanded.
    """
    bounds = _check_bounds(bounds)
    out: set[GridPoint] = set()

    def rec(s, suffix, tail):
        if s < 0:
            out.add(tail)
            return
        for a in range(min(bounds[s], suffix) + 1):
            rec(s - 1, suffix + bounds[s] - 2 * a, (a,) + tail)

    rec(len(bounds) - 1, 0, ())
    return out


def grid_whitney(bounds: Sequence[int]) -> tuple[int, ...]:
    w = np.array([1], dtype=np.int64)
    for r in bounds:
        w = np.convolve(w, np.ones(r + 1, dtype=np.int64))
    return tuple(int(x) for x in w)


# -- SFY -------------------------------------------------------------------------


def sfy_generate(P: Poset, rank: WeakRank) -> MonomialSet:
    """FY monomials on chains strictly below the top obeying the SFY bound.

    ``l_k <= min(d_k - 1, rank(P) - rank(p_k) - 2 * sum_{i>k} l_i)``.
    Chains are grown downward from the top so the suffix sum is known when
    each exponent is chosen.
    """
    r = rank_array(P, rank)
    n = int(r[P.index(P.top)])
    names = P.elements
    bottom = P.index(P.bottom)
    top = P.index(P.top)
    below = [sorted(b) for b in P._below]
    out = [Monomial()]

    def rec(u, ell_u, later, support, exps):
        # u is the lowest chosen element, with exponent ell_u; later includes ell_u
        if ell_u <= r[u] - 1:
            out.append(Monomial(support[::-1], exps[::-1]))
        for p in below[u]:
            if p == bottom or r[u] - r[p] - 1 < ell_u:
                continue
            cap = min(int(r[p]) - 1, n - int(r[p]) - 2 * later)
            for ell in range(1, cap + 1):
                rec(p, ell, later + ell, support + (names[p],), exps + (ell,))

    for p in below[top]:
        if p == bottom:
            continue
        cap = min(int(r[p]) - 1, n - int(r[p]))
        for ell in range(1, cap + 1):
            rec(p, ell, ell, (names[p],), (ell,))
    # the recursion emits a monomial only once its bottom gap is known
    return MonomialSet(out)


def fy_classes(P: Poset, rank: WeakRank):
    """Yield ``(chain, bounds)`` for every nonempty FY class.

    ``chain`` is ``p_1 < ... < p_s`` below the top with all gaps from the
    bottom at least 2; ``bounds`` is ``(d_1 - 2, ..., d_s - 2, d_top - 1)``.
    """
    r = rank_array(P, rank)
    n = int(r[P.index(P.top)])
    top = P.index(P.top)
    above = P._above_sorted

    def rec(i, chain, bounds):
        yield chain, bounds + (n - int(r[i]) - 1,)
        for j in above[i]:
            if j == top:
                continue
            d = int(r[j] - r[i])
            if d >= 2:
                yield from rec(j, chain + (j,), bounds + (d - 2,))

    for chain, bounds in rec(P.index(P.bottom), (), ()):
        yield tuple(P.elements[i] for i in chain), bounds


def _point_to_monomial(point: GridPoint, chain: tuple[str, ...], top: str) -> Monomial:
    support = list(chain)
    exps = [a + 1 for a in point[:-1]]
    if point[-1] > 0:
        support.append(top)
        exps.append(point[-1])
    return Monomial(support, exps)


def scd_of_fy(P: Poset, rank: WeakRank) -> ChainDecomposition:
    """Symmetric chain decomposition of FY ordered by divisibility.

    Raises ``AssertionError`` if the chain starts differ from
    :func:`sfy_generate`.
    """
    r = rank_array(P, rank)
    n = int(r[P.index(P.top)])
    chains = []
    for chain, bounds in fy_classes(P, rank):
        dec = scd_product_of_chains(bounds)
        for c in dec.chains:
            chains.append(tuple(_point_to_monomial(pt, chain, P.top) for pt in c))
    result = ChainDecomposition(tuple(chains), n - 1)
    starts = MonomialSet(result.starts)
    if starts != sfy_generate(P, rank):
        raise AssertionError("chain starts of the FY decomposition differ from SFY")
    return result


def check_monomial_scd(dec: ChainDecomposition, family: MonomialSet) -> dict[str, bool]:
    """Partition / saturation / symmetry of a decomposition of ``family``."""
    flat = [m for c in dec.chains for m in c]
    partition = len(flat) == len(family) and set(flat) == set(family)
    saturated = all(
        b.degree == a.degree + 1 and a.divides(b) for c in dec.chains for a, b in zip(c, c[1:])
    )
    symmetric = all(c[0].degree + c[-1].degree == dec.host_rank for c in dec.chains)
    return {"partition": partition, "saturated": saturated, "symmetric": symmetric}


# -- order-ideal verifiers ---------------------------------------------------------


def is_monomial_order_ideal(S) -> Verdict:
    """Divisor-closure check; witness is ``(member, missing divisor)``."""
    members = set(S)
    for m in S:
        for dvs in m.lower_divisors():
            if dvs not in members:
                return Verdict(False, (m, dvs), f"{dvs} divides {m} but is missing")
    return Verdict(True)


def maximal_members(S) -> list[Monomial]:
    """Members not properly divided by another member (``S`` an order ideal)."""
    covered = set()
    for m in S:
        covered.update(m.lower_divisors())
    return [m for m in S if m not in covered]


def is_pure_ideal(S, expected_degree: int | None = None) -> Verdict:
    """Whether all divisibility-maximal members share one degree.

    The witness is the list of maximal members whose degree differs from
    the expected one (or from the top degree when none is given).
    """
    closed = is_monomial_order_ideal(S)
    if not closed:
        raise ValueError(f"not a monomial order ideal: {closed.reason}")
    maxi = maximal_members(S)
    if not maxi:
        return Verdict(True)
    target = expected_degree if expected_degree is not None else max(m.degree for m in maxi)
    wrong = [m for m in maxi if m.degree != target]
    if wrong:
        return Verdict(False, wrong, f"{len(wrong)} maximal member(s) not of degree {target}")
    return Verdict(True)

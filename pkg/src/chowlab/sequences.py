"""Properties of finite integer sequences.

Palindromicity, unimodality, log-concavity, Macaulay's O-sequence test,
SI-sequences, the length-3 pure O-sequence criterion, Hibi's inequalities,
and an exhaustive search for (pure) monomial order ideals with a given
h-vector.  Everything is exact integer arithmetic.
"""

from __future__ import annotations

import itertools
import os
from collections.abc import Sequence
from dataclasses import dataclass
from math import comb

from .monomials import Monomial, MonomialSet

DEFAULT_SIZE_CAP = 1_000_000


def size_cap() -> int:
    """Enumeration guard, overridable through ``CHOWLAB_SIZE_CAP``."""
    raw = os.environ.get("CHOWLAB_SIZE_CAP")
    return int(raw) if raw else DEFAULT_SIZE_CAP


@dataclass(frozen=True)
class Verdict:
    """Boolean outcome with an optional witness (an index or an object)."""

    ok: bool
    witness: object = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _seq(h) -> list[int]:
    return [int(x) for x in (h.coefficients if hasattr(h, "coefficients") else h)]


def is_palindromic(h) -> Verdict:
    a = _seq(h)
    for i in range(len(a) // 2):
        if a[i] != a[-1 - i]:
            return Verdict(False, i, f"a[{i}]={a[i]} != a[{len(a) - 1 - i}]={a[-1 - i]}")
    return Verdict(True)


def is_unimodal(h) -> Verdict:
    """Witness is the first index where the sequence rises after falling."""
    a = _seq(h)
    falling = False
    for i in range(1, len(a)):
        if a[i] < a[i - 1]:
            falling = True
        elif a[i] > a[i - 1] and falling:
            return Verdict(False, i, f"rises again at index {i}")
    return Verdict(True)


def is_log_concave(h) -> Verdict:
    a = _seq(h)
    for i in range(1, len(a) - 1):
        if a[i] * a[i] < a[i - 1] * a[i + 1]:
            return Verdict(False, i, f"a[{i}]^2={a[i] ** 2} < {a[i - 1] * a[i + 1]}")
    return Verdict(True)


def is_nonnegative(h) -> Verdict:
    for i, x in enumerate(_seq(h)):
        if x < 0:
            return Verdict(False, i, f"a[{i}]={x} < 0")
    return Verdict(True)


def delta(h) -> tuple[int, ...]:
    """Differential sequence ``(h0, h1-h0, ..., h_{e//2} - h_{e//2 - 1})``.

    Only defined for palindromic unimodal input; raises ``ValueError``
    otherwise.
    """
    a = _seq(h)
    if not a:
        raise ValueError("delta of an empty sequence")
    if not is_palindromic(a):
        raise ValueError(f"delta needs a palindromic sequence, got {a}")
    if not is_unimodal(a):
        raise ValueError(f"delta needs a unimodal sequence, got {a}")
    e = len(a) - 1
    return tuple([a[0]] + [a[i] - a[i - 1] for i in range(1, e // 2 + 1)])


# -- Macaulay ------------------------------------------------------------------


@dataclass(frozen=True)
class BinomialExpansion:
    """``n = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_delta, delta)``.

    ``terms`` holds ``(k_j, j)`` pairs with ``j`` running down from ``d``.
    """

    n: int
    d: int
    terms: tuple[tuple[int, int], ...]

    def value(self) -> int:
        return sum(comb(k, j) for k, j in self.terms)

    def __str__(self) -> str:
        return " + ".join(f"C({k},{j})" for k, j in self.terms) or "0"


def d_binomial_expansion(n: int, d: int) -> BinomialExpansion:
    """Greedy ``d``-binomial expansion of ``n`` (``n >= 0``, ``d >= 1``)."""
    if d < 1 or n < 0:
        raise ValueError("need n >= 0 and d >= 1")
    terms = []
    rest, j = n, d
    while rest > 0 and j >= 1:
        # largest k with C(k, j) <= rest; C(k, j) is increasing in k >= j
        k = j
        while comb(k + 1, j) <= rest:
            k += 1
        terms.append((k, j))
        rest -= comb(k, j)
        j -= 1
    assert rest == 0
    return BinomialExpansion(n, d, tuple(terms))


def macaulay_next_bound(n: int, d: int) -> int:
    """Largest possible ``h_{d+1}`` after ``h_d = n`` in an O-sequence (0 for n=0)."""
    return sum(comb(k + 1, j + 1) for k, j in d_binomial_expansion(n, d).terms)


def is_O_sequence(h) -> Verdict:
    """Macaulay's test; witness is the first ``i`` with ``h[i+1]`` over the bound."""
    a = _seq(h)
    if not a or a[0] != 1:
        raise ValueError(f"an O-sequence starts with 1, got {a}")
    neg = is_nonnegative(a)
    if not neg:
        return neg
    for i in range(1, len(a) - 1):
        bound = macaulay_next_bound(a[i], i)
        if a[i + 1] > bound:
            return Verdict(False, i, f"h[{i + 1}]={a[i + 1]} exceeds Macaulay bound {bound} from h[{i}]={a[i]}")
    return Verdict(True)


def is_SI_sequence(h) -> Verdict:
    a = _seq(h)
    for test in (is_nonnegative, is_palindromic, is_unimodal):
        v = test(a)
        if not v:
            return Verdict(False, v.witness, f"{test.__name__}: {v.reason}")
    g = delta(a)
    if g[0] != 1:
        return Verdict(False, 0, f"differential sequence starts with {g[0]}, not 1")
    v = is_O_sequence(g)
    if not v:
        return Verdict(False, v.witness, f"delta {g} is not an O-sequence: {v.reason}")
    return Verdict(True)


def is_pure_O_len3(h) -> bool:
    a = _seq(h)
    if len(a) != 3 or a[0] != 1:
        raise ValueError(f"expected (1, h1, h2), got {a}")
    h1, h2 = a[1], a[2]
    if h1 < 1:
        raise ValueError("need h1 >= 1")
    return (h1 + 1) // 2 <= h2 <= comb(h1 + 1, 2)


def hibi_check(h) -> Verdict:
    """``h[i] <= h[j]`` whenever ``i <= j <= e - i``; witness ``(i, j)``."""
    a = _seq(h)
    e = len(a) - 1
    for i in range(e + 1):
        for j in range(i, e - i + 1):
            if a[i] > a[j]:
                return Verdict(False, (i, j), f"h[{i}]={a[i]} > h[{j}]={a[j]}")
    return Verdict(True)


def logconcavity_from_delta(h) -> bool:
    """Whether the differential sequence is log-concave.

    When it is, log-concavity of ``h`` itself must follow; that implication
    is checked here and a violation raises ``AssertionError``.
    """
    g = delta(h)
    if not is_log_concave(g):
        return False
    if not is_log_concave(h):
        raise AssertionError(f"log-concave delta {g} but {list(_seq(h))} is not log-concave")
    return True


# -- brute-force order ideals --------------------------------------------------


class SearchCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchResult:
    found: bool
    ideal: MonomialSet | None
    nodes: int

    def __bool__(self) -> bool:
        return self.found


def _monomials_of_degree(nvars: int, k: int):
    return list(itertools.combinations_with_replacement(range(nvars), k))


def _lower(mono: tuple[int, ...]):
    """One-step divisors of a sorted exponent-multiset monomial."""
    out = set()
    for i in range(len(mono)):
        out.add(mono[:i] + mono[i + 1 :])
    return out


def _as_monomial(mono: tuple[int, ...]) -> Monomial:
    powers: dict[str, int] = {}
    for v in mono:
        powers[f"y{v + 1}"] = powers.get(f"y{v + 1}", 0) + 1
    return Monomial.from_powers(powers)


def order_ideal_bruteforce(h, var_limit: int, degree_limit: int | None = None, pure: bool = False) -> SearchResult:
    """Exhaustive search for a monomial order ideal with h-vector ``h``.

    Builds the ideal degree by degree: each level is a subset of the
    monomials all of whose one-step divisors lie in the previous level.
    The degree-1 level is fixed to the first ``h[1]`` variables, which is
    canonical up to variable permutation.  With ``pure=True`` every member
    of degree below ``e`` must divide a member of degree ``e``.

    Raises :class:`SearchCapExceeded` when the number of visited nodes
    passes :func:`size_cap`.
    """
    a = _seq(h)
    if not a or a[0] != 1:
        raise ValueError(f"h-vector must start with 1, got {a}")
    e = len(a) - 1
    if degree_limit is not None and e > degree_limit:
        raise ValueError(f"h has degree {e} > degree_limit {degree_limit}")
    if any(x < 0 for x in a):
        return SearchResult(False, None, 0)
    if e == 0:
        return SearchResult(True, MonomialSet([Monomial()]), 1)
    if a[1] > var_limit:
        return SearchResult(False, None, 0)
    if pure and a[-1] == 0:
        return SearchResult(False, None, 0)
    cap = size_cap()
    nodes = 0
    levels: list[tuple[tuple[int, ...], ...]] = [((),), tuple((v,) for v in range(a[1]))]
    nvars = a[1]

    def search(k):
        # levels[0..k-1] fixed; choose level k
        nonlocal nodes
        if k > e:
            if pure and not _is_pure_levels(levels, e):
                return False
            return True
        prev = set(levels[k - 1])
        cands = [m for m in _monomials_of_degree(nvars, k) if _lower(m) <= prev]
        if len(cands) < a[k]:
            return False
        for chosen in itertools.combinations(cands, a[k]):
            nodes += 1
            if nodes > cap:
                raise SearchCapExceeded(f"brute-force search passed {cap} nodes")
            if pure and k == e and not _covers_level(chosen, prev):
                continue
            levels.append(chosen)
            if search(k + 1):
                return True
            levels.pop()
        return False

    if search(2):
        ideal = MonomialSet(_as_monomial(m) for lvl in levels for m in lvl)
        return SearchResult(True, ideal, nodes)
    return SearchResult(False, None, nodes)


def _covers_level(top, prev) -> bool:
    covered = set()
    for m in top:
        covered |= _lower(m)
    return covered >= prev


def _is_pure_levels(levels, e) -> bool:
    for k in range(e):
        up = set()
        for m in levels[k + 1]:
            up |= _lower(m)
        if up != set(levels[k]):
            return False
    return True


def pure_ideal_bruteforce(h, var_limit: int, degree_limit: int | None = None) -> SearchResult:
    """Search for a pure monomial order ideal with h-vector ``h``."""
    return order_ideal_bruteforce(h, var_limit, degree_limit, pure=True)

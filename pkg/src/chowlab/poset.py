"""Finite bounded posets with a weak rank function.

A poset is stored by its Hasse diagram (cover pairs) plus the strict
down-set and up-set of every element.  Elements are opaque strings at the
API boundary and dense integers internally, assigned in input order.

A weak rank is a plain mapping ``element -> int`` with ``rank(bottom) == 0``
that strictly increases along covers.  Storing the single-argument rank is
lossless on a bounded poset: the two-argument weak rank is recovered as
``rank[y] - rank[x]`` and is additive by construction.
"""

from __future__ import annotations

import heapq
import json
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

WeakRank = Mapping[str, int]


class PosetError(ValueError):
    """Raised for malformed poset input (cycles, dangling ids, unbounded)."""


class Poset:
    """Immutable finite bounded poset.

    Build instances with :func:`build_poset`; the constructor trusts its input.
    """

    def __init__(self, elements, covers, below, above, topo, bottom, top):
        self.elements: tuple[str, ...] = elements
        self._index = {e: i for i, e in enumerate(elements)}
        # cover pairs as index pairs, sorted
        self._covers: tuple[tuple[int, int], ...] = covers
        self._below: tuple[frozenset[int], ...] = below
        self._above: tuple[frozenset[int], ...] = above
        self._topo: tuple[int, ...] = topo
        self._bottom = bottom
        self._top = top
        self._above_sorted = tuple(tuple(sorted(a)) for a in above)
        self._lower_covers = [[] for _ in elements]
        self._upper_covers = [[] for _ in elements]
        for i, j in covers:
            self._upper_covers[i].append(j)
            self._lower_covers[j].append(i)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"Poset({len(self)} elements, {len(self._covers)} covers)"

    @property
    def bottom(self) -> str:
        return self.elements[self._bottom]

    @property
    def top(self) -> str:
        return self.elements[self._top]

    @property
    def covers(self) -> tuple[tuple[str, str], ...]:
        e = self.elements
        return tuple((e[i], e[j]) for i, j in self._covers)

    def index(self, x: str) -> int:
        return self._index[x]

    def leq(self, x: str, y: str) -> bool:
        i, j = self._index[x], self._index[y]
        return i == j or i in self._below[j]

    def lt(self, x: str, y: str) -> bool:
        return self._index[x] in self._below[self._index[y]]

    def below(self, x: str) -> list[str]:
        """Elements strictly below ``x``, in input order."""
        return [self.elements[i] for i in sorted(self._below[self._index[x]])]

    def above(self, x: str) -> list[str]:
        """Elements strictly above ``x``, in input order."""
        return [self.elements[i] for i in self._above_sorted[self._index[x]]]

    def lower_covers(self, x: str) -> list[str]:
        return [self.elements[i] for i in self._lower_covers[self._index[x]]]

    def upper_covers(self, x: str) -> list[str]:
        return [self.elements[i] for i in self._upper_covers[self._index[x]]]

    def topological_order(self) -> list[str]:
        return [self.elements[i] for i in self._topo]

    def comparable_pairs(self) -> Iterator[tuple[str, str]]:
        """All strict pairs ``(x, y)`` with ``x < y``."""
        e = self.elements
        for j in self._topo:
            for i in sorted(self._below[j]):
                yield e[i], e[j]

    def closure_covers(self) -> set[tuple[str, str]]:
        """Cover relation recomputed from the order relation alone."""
        e = self.elements
        out = set()
        for j in range(len(e)):
            for i in self._below[j]:
                if not any(i in self._below[k] for k in self._below[j] if k != i):
                    out.add((e[i], e[j]))
        return out


def build_poset(elements: Iterable[str], cover_pairs: Iterable[Sequence[str]]) -> Poset:
    """Build a bounded poset from elements and (possibly redundant) cover pairs.

    Redundant pairs implied by transitivity are dropped.  Raises
    :class:`PosetError` on duplicate or dangling ids, cycles, or when the
    order does not have a unique minimum and maximum.
    """
    elements = tuple(str(e) for e in elements)
    index = {}
    for i, e in enumerate(elements):
        if e in index:
            raise PosetError(f"duplicate element id {e!r}")
        index[e] = i
    if len(elements) < 2:
        raise PosetError("a bounded poset needs at least two elements (bottom != top)")

    n = len(elements)
    up = [set() for _ in range(n)]
    down = [set() for _ in range(n)]
    for pair in cover_pairs:
        if len(pair) != 2:
            raise PosetError(f"cover pair must have two entries, got {pair!r}")
        a, b = (str(p) for p in pair)
        for x in (a, b):
            if x not in index:
                raise PosetError(f"cover pair references unknown element {x!r}")
        i, j = index[a], index[b]
        if i == j:
            raise PosetError(f"cycle detected: self-cover on {a!r}")
        up[i].add(j)
        down[j].add(i)

    # Kahn's algorithm, ties broken by input order
    indeg = [len(d) for d in down]
    ready = [i for i in range(n) if indeg[i] == 0]
    topo = []
    heapq.heapify(ready)
    while ready:
        i = heapq.heappop(ready)
        topo.append(i)
        for j in up[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(ready, j)
    if len(topo) != n:
        stuck = sorted(elements[i] for i in range(n) if indeg[i] > 0)
        raise PosetError(f"cycle detected among {stuck}")

    below = [frozenset()] * n
    for j in topo:
        acc = set()
        for i in down[j]:
            acc.add(i)
            acc |= below[i]
        below[j] = frozenset(acc)

    covers = []
    for j in range(n):
        implied = set()
        for i in down[j]:
            implied |= below[i]
        covers.extend((i, j) for i in down[j] if i not in implied)
    covers.sort()

    minimal = [i for i in range(n) if not below[i]]
    above_sets = [set() for _ in range(n)]
    for j in range(n):
        for i in below[j]:
            above_sets[i].add(j)
    maximal = [i for i in range(n) if not above_sets[i]]
    if len(minimal) != 1:
        raise PosetError(f"expected one minimal element, found {[elements[i] for i in minimal]}")
    if len(maximal) != 1:
        raise PosetError(f"expected one maximal element, found {[elements[i] for i in maximal]}")

    return Poset(
        elements,
        tuple(covers),
        tuple(below),
        tuple(frozenset(a) for a in above_sets),
        tuple(topo),
        minimal[0],
        maximal[0],
    )


def induced_subposet(P: Poset, keep: Iterable[str]) -> Poset:
    """Subposet on ``keep`` with the induced order; bottom and top must survive."""
    keep = set(keep)
    elems = [e for e in P.elements if e in keep]
    pairs = [(x, y) for x, y in P.comparable_pairs() if x in keep and y in keep]
    return build_poset(elems, pairs)


# -- weak rank ----------------------------------------------------------------


@dataclass
class RankReport:
    valid: bool
    violations: list[tuple[str, str]] = field(default_factory=list)
    missing: list[str] = field(default_factory=list)
    message: str = ""

    def __bool__(self) -> bool:
        return self.valid


def validate_weak_rank(P: Poset, rank: WeakRank) -> RankReport:
    """Check that ``rank`` is a weak rank on ``P``.

    Valid iff every element has a nonnegative integer rank, the bottom has
    rank 0 and rank strictly increases along every cover.
    """
    missing = [e for e in P.elements if e not in rank]
    if missing:
        return RankReport(False, missing=missing, message=f"rank undefined on {missing}")
    bad_values = [e for e in P.elements if not isinstance(rank[e], (int, np.integer)) or rank[e] < 0]
    if bad_values:
        return RankReport(False, message=f"ranks must be nonnegative integers: {bad_values}")
    problems = []
    if rank[P.bottom] != 0:
        problems.append(f"rank({P.bottom}) = {rank[P.bottom]} != 0")
    violations = [(x, y) for x, y in P.covers if rank[y] <= rank[x]]
    if violations:
        problems.append(f"rank not strictly increasing on covers {violations}")
    return RankReport(not problems, violations=violations, message="; ".join(problems))


def rank_array(P: Poset, rank: WeakRank) -> np.ndarray:
    """Rank as an int64 array aligned with ``P.elements``; raises if invalid."""
    report = validate_weak_rank(P, rank)
    if not report:
        raise PosetError(f"invalid weak rank: {report.message}")
    return np.array([int(rank[e]) for e in P.elements], dtype=np.int64)


def is_ranked(P: Poset, rank: WeakRank) -> bool:
    return all(rank[y] - rank[x] == 1 for x, y in P.covers)


def poset_rank(P: Poset, rank: WeakRank) -> int:
    return int(rank[P.top])


def whitney_numbers(P: Poset, rank: WeakRank) -> tuple[int, ...]:
    r = rank_array(P, rank)
    return tuple(int(c) for c in np.bincount(r, minlength=int(r[P.index(P.top)]) + 1))


def enumerate_chains_from_bottom(P: Poset, rank: WeakRank, min_gap: int = 1) -> Iterator[tuple[str, ...]]:
    """Yield every chain ``bottom < p_1 < ... < p_s`` with rank gaps >= ``min_gap``.

    The bottom itself is omitted from the yielded tuples, so the empty chain
    is ``()``.  Traversal is depth-first in input order.
    """
    if min_gap < 1:
        raise ValueError("min_gap must be >= 1")
    r = rank_array(P, rank)
    above = P._above_sorted
    names = P.elements

    def extend(i, prefix):
        yield prefix
        for j in above[i]:
            if r[j] - r[i] >= min_gap:
                yield from extend(j, prefix + (names[j],))

    yield from extend(P.index(P.bottom), ())


# -- file formats ---------------------------------------------------------------


def poset_to_dict(P: Poset, rank: WeakRank | None = None) -> dict:
    out = {"elements": list(P.elements), "covers": [list(c) for c in P.covers]}
    if rank is not None:
        out["rank"] = {e: int(rank[e]) for e in P.elements}
    return out


def dumps_poset(P: Poset, rank: WeakRank | None = None) -> str:
    """Canonical JSON text; byte-identical for equal inputs."""
    return json.dumps(poset_to_dict(P, rank), indent=1, ensure_ascii=False) + "\n"


def loads_poset(text: str) -> tuple[Poset, dict[str, int]]:
    data = json.loads(text)
    if not isinstance(data, dict) or "elements" not in data or "covers" not in data:
        raise PosetError("poset file needs 'elements' and 'covers' keys")
    P = build_poset(data["elements"], data["covers"])
    if "rank" not in data:
        raise PosetError("poset file has no 'rank' object")
    rank = {str(k): int(v) for k, v in data["rank"].items()}
    report = validate_weak_rank(P, rank)
    if not report:
        raise PosetError(f"invalid weak rank: {report.message}")
    return P, rank


def read_poset(path: str | Path) -> tuple[Poset, dict[str, int]]:
    return loads_poset(Path(path).read_text(encoding="utf-8"))


def write_poset(path: str | Path, P: Poset, rank: WeakRank) -> None:
    Path(path).write_text(dumps_poset(P, rank), encoding="utf-8")


def to_dot(P: Poset, rank: WeakRank, name: str = "hasse") -> str:
    """Hasse diagram in DOT; nodes labelled ``name:rank``, edges point upward."""
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for e in P.elements:
        lines.append(f"  {json.dumps(e)} [label={json.dumps(f'{e}:{rank[e]}')}];")
    for x, y in P.covers:
        lines.append(f"  {json.dumps(x)} -> {json.dumps(y)};")
    lines.append("}")
    return "\n".join(lines) + "\n"

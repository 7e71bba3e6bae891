"""Generators for named poset families and a seeded random graded poset.

Every generator returns ``(poset, rank)``; outputs depend only on the
arguments.  Family specs such as ``nonpure(m=5)`` or
``family:product(1,2,2)`` are parsed by :func:`parse_family`.
"""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass

import numpy as np

from .chow import chow_chain_sum
from .poset import Poset, build_poset
from .sequences import size_cap

BOTTOM, TOP = "0", "1"


def gen_chain(n: int) -> tuple[Poset, dict[str, int]]:
    """Chain ``0 < 1 < ... < n`` with the identity rank."""
    if n < 1:
        raise ValueError("chain rank must be >= 1")
    names = [str(i) for i in range(n + 1)]
    return build_poset(names, zip(names, names[1:])), {s: i for i, s in enumerate(names)}


def _subset_name(s) -> str:
    return "{" + ",".join(str(v) for v in s) + "}"


def gen_boolean(n: int) -> tuple[Poset, dict[str, int]]:
    """Subsets of ``{1..n}`` under inclusion, ranked by size.

    ``n <= 6`` unless ``CHOWLAB_SIZE_CAP`` is set and admits ``2**n`` elements.
    """
    lifted = "CHOWLAB_SIZE_CAP" in os.environ and 2**n <= size_cap()
    if n < 1 or (n > 6 and not lifted):
        raise ValueError(f"boolean lattice needs 1 <= n <= 6, got {n}")
    subsets = [c for k in range(n + 1) for c in itertools.combinations(range(1, n + 1), k)]
    covers = []
    for s in subsets:
        for v in range(1, n + 1):
            if v not in s:
                covers.append((_subset_name(s), _subset_name(tuple(sorted(s + (v,))))))
    P = build_poset([_subset_name(s) for s in subsets], covers)
    return P, {_subset_name(s): len(s) for s in subsets}


def gen_product_of_chains(*bounds: int) -> tuple[Poset, dict[str, int]]:
    """``C_{r_1} x ... x C_{r_k}`` with the componentwise order."""
    if len(bounds) == 1 and isinstance(bounds[0], (list, tuple)):
        bounds = tuple(bounds[0])
    if not bounds or any(r < 1 for r in bounds):
        raise ValueError(f"chain product needs ranks >= 1, got {bounds}")
    size = int(np.prod([r + 1 for r in bounds]))
    if size > size_cap():
        raise ValueError(f"product has {size} elements, over the size cap {size_cap()}")
    pts = list(itertools.product(*(range(r + 1) for r in bounds)))
    name = lambda p: "(" + ",".join(map(str, p)) + ")"  # noqa: E731
    covers = []
    for p in pts:
        for k, r in enumerate(bounds):
            if p[k] < r:
                q = p[:k] + (p[k] + 1,) + p[k + 1 :]
                covers.append((name(p), name(q)))
    return build_poset([name(p) for p in pts], covers), {name(p): sum(p) for p in pts}


def gen_nonpure_counterexample(m: int) -> tuple[Poset, dict[str, int]]:
    """Weakly ranked poset of rank 5: ``m`` elements at rank 4 beside a chain b1..b4."""
    if m < 1:
        raise ValueError("m must be >= 1")
    a = [f"a{i}" for i in range(1, m + 1)]
    b = [f"b{i}" for i in range(1, 5)]
    covers = [(BOTTOM, x) for x in a] + [(BOTTOM, "b1")] + list(zip(b, b[1:]))
    covers += [(x, TOP) for x in a] + [("b4", TOP)]
    rank = {BOTTOM: 0, TOP: 5, **{x: 4 for x in a}, **{x: i for i, x in enumerate(b, 1)}}
    return build_poset([BOTTOM, *a, *b, TOP], covers), rank


WIDE_LEFT_LEVELS = (2, 4, 6)


def gen_nonlogconcave_counterexample(n: int, m: int) -> tuple[Poset, dict[str, int]]:
    """Ranked poset of rank ``n`` made of two branches between bottom and top.

    The left branch has levels 1..n-1, singletons except levels 2, 4 and 6
    which hold ``m**2`` elements each; the right branch is a chain except
    level 2, which holds ``m**3`` elements.  Consecutive levels of a branch
    are completely joined.
    """
    if n < 7 or m < 1:
        raise ValueError("need n >= 7 and m >= 1")
    if 3 * m**2 + m**3 + 2 * n > size_cap():
        raise ValueError(f"m={m} exceeds the size cap {size_cap()}")
    left = []
    right = []
    for k in range(1, n):
        left.append([f"a{k}_{j}" for j in range(1, m * m + 1)] if k in WIDE_LEFT_LEVELS else [f"a{k}"])
        right.append([f"b{k}_{j}" for j in range(1, m**3 + 1)] if k == 2 else [f"b{k}"])
    elements = [BOTTOM]
    covers = []
    rank = {BOTTOM: 0, TOP: n}
    for branch in (left, right):
        prev = [BOTTOM]
        for k, level in enumerate(branch, 1):
            elements.extend(level)
            covers.extend((x, y) for x in prev for y in level)
            rank.update((y, k) for y in level)
            prev = level
        covers.extend((x, TOP) for x in prev)
    elements.append(TOP)
    return build_poset(elements, covers), rank



def sweep_log_concavity(n: int, m_max: int = 40) -> tuple[int, tuple[int, ...]] | None:
    """Smallest ``m`` whose counterexample poset has ``h_2**2 < h_1 * h_3``.

    Returns ``(m, coefficients)`` or ``None`` if no ``m <= m_max`` works.
    """
    for m in range(1, m_max + 1):
        h = chow_chain_sum(*gen_nonlogconcave_counterexample(n, m)).coefficients
        if h[2] ** 2 < h[1] * h[3]:
            return m, h
    return None

def gen_random_graded(seed: int, max_rank: int, max_width: int, weak: bool = False) -> tuple[Poset, dict[str, int]]:
    """Seeded random bounded poset with at most ``max_rank`` as (weak) rank.

    Levels 1..L-1 get 1..``max_width`` elements; consecutive levels are
    joined by random covers, then every element without a lower (upper)
    cover is attached to a uniformly chosen element one level down (up).
    The rank is the level.  With ``weak=True`` some covers skipping a level
    are added and the levels are pushed through a random strictly
    increasing map, so the result is weakly ranked but usually not ranked.
    """
    if max_rank < 1 or max_width < 1:
        raise ValueError("max_rank and max_width must be >= 1")
    rng = np.random.default_rng(seed)
    L = int(rng.integers(1, max_rank + 1))
    levels = [[BOTTOM]]
    for k in range(1, L):
        w = int(rng.integers(1, max_width + 1))
        levels.append([f"x{k}_{j}" for j in range(w)])
    levels.append([TOP])
    p = float(rng.uniform(0.25, 0.75))
    covers = set()
    for k in range(L):
        for x in levels[k]:
            for y in levels[k + 1]:
                if rng.random() < p:
                    covers.add((x, y))
    for k in range(1, L + 1):
        for y in levels[k]:
            if not any((x, y) in covers for x in levels[k - 1]):
                covers.add((levels[k - 1][int(rng.integers(len(levels[k - 1])))], y))
    for k in range(L):
        for x in levels[k]:
            if not any((x, y) in covers for y in levels[k + 1]):
                covers.add((x, levels[k + 1][int(rng.integers(len(levels[k + 1])))]))
    level_rank = list(range(L + 1))
    if weak:
        for k in range(L - 1):
            for x in levels[k]:
                for y in levels[k + 2]:
                    if rng.random() < 0.15:
                        covers.add((x, y))
        n = int(rng.integers(L, max_rank + 1))
        inner = sorted(int(v) for v in rng.choice(np.arange(1, n), size=L - 1, replace=False)) if L > 1 else []
        level_rank = [0, *inner, n]
    elements = [x for lvl in levels for x in lvl]
    rank = {x: level_rank[k] for k, lvl in enumerate(levels) for x in lvl}
    return build_poset(elements, sorted(covers, key=lambda c: (elements.index(c[0]), elements.index(c[1])))), rank


# -- family specs ----------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    name: str
    args: tuple[int, ...] = ()
    kwargs: tuple[tuple[str, int], ...] = ()

    def __str__(self) -> str:
        parts = [str(a) for a in self.args] + [f"{k}={v}" for k, v in self.kwargs]
        return f"{self.name}({','.join(parts)})"


_SPEC = re.compile(r"^(?:family:)?\s*(?P<name>[a-z_]+)\s*(?:\((?P<args>[^)]*)\))?\s*$")

FAMILIES = {
    "chain": gen_chain,
    "boolean": gen_boolean,
    "product": gen_product_of_chains,
    "nonpure": gen_nonpure_counterexample,
    "nonlogconcave": gen_nonlogconcave_counterexample,
    "random": gen_random_graded,
}


def parse_family(text: str) -> FamilySpec:
    """Parse ``name(1,2,k=3)`` with an optional ``family:`` prefix."""
    m = _SPEC.match(text.strip())
    if not m or m["name"] not in FAMILIES:
        raise ValueError(f"unknown family spec {text!r}; known: {', '.join(FAMILIES)}")
    args, kwargs = [], []
    raw = (m["args"] or "").strip()
    for part in filter(None, (p.strip() for p in raw.split(","))):
        if "=" in part:
            k, v = (s.strip() for s in part.split("=", 1))
            kwargs.append((k, int(v)))
        else:
            if kwargs:
                raise ValueError(f"positional argument after keyword in {text!r}")
            args.append(int(part))
    return FamilySpec(m["name"], tuple(args), tuple(kwargs))


def generate(spec: FamilySpec | str) -> tuple[Poset, dict[str, int]]:
    if isinstance(spec, str):
        spec = parse_family(spec)
    fn = FAMILIES[spec.name]
    kwargs = dict(spec.kwargs)
    if spec.name == "product":
        return fn(*spec.args, *kwargs.values())
    if spec.name == "random" and "weak" in kwargs:
        kwargs["weak"] = bool(kwargs["weak"])
    try:
        return fn(*spec.args, **kwargs)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {spec}: {exc}") from None

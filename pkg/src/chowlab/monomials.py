"""Monomials in poset-element variables and finite sets of them."""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator


class Monomial:
    """``x[p1]^l1 * ... * x[ps]^ls`` with positive exponents.

    Display order is the order given (chain order for FY monomials);
    equality and hashing ignore it.
    """

    __slots__ = ("support", "exponents", "_key")

    def __init__(self, support: Iterable[str] = (), exponents: Iterable[int] = ()):
        support = tuple(support)
        exponents = tuple(int(e) for e in exponents)
        if len(support) != len(exponents):
            raise ValueError("support and exponents differ in length")
        if len(set(support)) != len(support):
            raise ValueError(f"repeated variable in {support}")
        if any(e <= 0 for e in exponents):
            raise ValueError(f"exponents must be positive, got {exponents}")
        self.support = support
        self.exponents = exponents
        self._key = frozenset(zip(support, exponents))

    @classmethod
    def from_powers(cls, powers: dict[str, int]) -> Monomial:
        items = [(v, e) for v, e in powers.items() if e]
        return cls([v for v, _ in items], [e for _, e in items])

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def powers(self) -> dict[str, int]:
        return dict(zip(self.support, self.exponents))

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __len__(self) -> int:
        return len(self.support)

    def divides(self, other: Monomial) -> bool:
        op = other.powers()
        return all(op.get(v, 0) >= e for v, e in zip(self.support, self.exponents))

    def times(self, var: str, k: int = 1) -> Monomial:
        if var in self.support:
            i = self.support.index(var)
            exps = list(self.exponents)
            exps[i] += k
            return Monomial(self.support, exps)
        return Monomial(self.support + (var,), self.exponents + (k,))

    def lower_divisors(self) -> Iterator[Monomial]:
        """Divisors of one degree less: lower one exponent, dropping zeros."""
        for i, e in enumerate(self.exponents):
            if e == 1:
                yield Monomial(self.support[:i] + self.support[i + 1 :], self.exponents[:i] + self.exponents[i + 1 :])
            else:
                yield Monomial(self.support, self.exponents[:i] + (e - 1,) + self.exponents[i + 1 :])

    def __str__(self) -> str:
        if not self.support:
            return "1"
        return " * ".join(f"x[{v}]^{e}" for v, e in zip(self.support, self.exponents))

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


_FACTOR = re.compile(r"^x\[(?P<var>[^\]]+)\](?:\^(?P<exp>\d+))?$")


def parse_monomial(text: str) -> Monomial:
    text = text.strip()
    if text == "1":
        return Monomial()
    support, exps = [], []
    for part in text.split("*"):
        m = _FACTOR.match(part.strip())
        if not m:
            raise ValueError(f"cannot parse monomial factor {part!r}")
        support.append(m["var"])
        exps.append(int(m["exp"] or 1))
    return Monomial(support, exps)


class MonomialSet:
    """Finite set of monomials, iterated in insertion order."""

    def __init__(self, monomials: Iterable[Monomial] = ()):
        seen: dict[Monomial, None] = {}
        for m in monomials:
            seen.setdefault(m, None)
        self._items = tuple(seen)
        self._set = frozenset(self._items)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, m) -> bool:
        return m in self._set

    def __eq__(self, other) -> bool:
        if isinstance(other, MonomialSet):
            return self._set == other._set
        return NotImplemented

    def __hash__(self):
        return hash(self._set)

    def __repr__(self) -> str:
        return f"MonomialSet({len(self)} monomials, h={self.h_vector})"

    @property
    def h_vector(self) -> tuple[int, ...]:
        if not self._items:
            return ()
        top = max(m.degree for m in self._items)
        h = [0] * (top + 1)
        for m in self._items:
            h[m.degree] += 1
        return tuple(h)

    def of_degree(self, k: int) -> list[Monomial]:
        return [m for m in self._items if m.degree == k]

    def to_text(self) -> str:
        return "".join(f"{m}\n" for m in self._items)

    @classmethod
    def from_text(cls, text: str) -> MonomialSet:
        return cls(parse_monomial(line) for line in text.splitlines() if line.strip())

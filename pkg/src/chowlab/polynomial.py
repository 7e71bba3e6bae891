"""Dense polynomials with exact integer coefficients."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from math import comb, gcd


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial ``sum(c[k] * t**k)``; trailing zeros are stripped on construction."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Iterable[int] = ()):
        c = [int(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __iter__(self):
        return iter(self.coefficients)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-x for x in self.coefficients])

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial([other * x for x in self.coefficients])
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def derivative(self) -> IntPolynomial:
        return IntPolynomial([k * c for k, c in enumerate(self.coefficients)][1:])

    def content(self) -> int:
        g = 0
        for c in self.coefficients:
            g = gcd(g, c)
        return g

    def primitive(self) -> IntPolynomial:
        """Divide out the content and make the leading coefficient positive."""
        g = self.content()
        if g == 0:
            return self
        if self.leading < 0:
            g = -g
        return IntPolynomial([c // g for c in self.coefficients])

    def to_csv(self) -> str:
        return ",".join(str(c) for c in self.coefficients)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms)


def parse_sequence(text: str) -> list[int]:
    """Parse ``"1,4,1"`` (spaces tolerated) into a list of ints."""
    parts = [p.strip() for p in text.replace(";", ",").split(",")]
    if not parts or any(p == "" for p in parts):
        raise ValueError(f"not a comma-separated integer sequence: {text!r}")
    return [int(p) for p in parts]


def is_palindromic_coeffs(c) -> bool:
    c = list(c)
    return c == c[::-1]


def gamma_vector(p) -> tuple[int, ...]:
    """Coefficients ``g`` with ``p(t) = sum g[i] t^i (1+t)^(d-2i)``.

    ``d`` is the index of the last entry.  Raises ``ValueError`` when ``p``
    is not palindromic, where no such expansion exists.
    """
    c = list(p.coefficients if isinstance(p, IntPolynomial) else p)
    if not c:
        raise ValueError("gamma vector of the zero polynomial is undefined")
    if not is_palindromic_coeffs(c):
        raise ValueError(f"gamma vector needs a palindromic sequence, got {c}")
    d = len(c) - 1
    rest = c[:]
    gamma = []
    for i in range(d // 2 + 1):
        g = rest[i]
        gamma.append(g)
        if g:
            for j in range(d - 2 * i + 1):
                rest[i + j] -= g * comb(d - 2 * i, j)
    if any(rest):
        raise AssertionError(f"gamma expansion left remainder {rest}")
    return tuple(gamma)


def is_gamma_positive(p) -> bool:
    try:
        return all(g >= 0 for g in gamma_vector(p))
    except ValueError:
        return False


# -- exact real root counting ---------------------------------------------------


def _pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Remainder of ``|lc(b)|**(deg a - deg b + 1) * a`` divided by ``b``.

    Scaling by the absolute value keeps the sign of the true remainder,
    which matters for Sturm sequences.
    """
    r = list(a.coefficients)
    db = b.degree
    lb = b.leading
    delta = a.degree - db + 1
    scale = abs(lb) ** delta
    r = [c * scale for c in r]
    bc = b.coefficients
    for k in range(len(r) - 1, db - 1, -1):
        q = r[k]
        if q == 0:
            continue
        # exact: every step keeps r divisible by lb
        q, rem = divmod(q, lb)
        assert rem == 0
        for j, y in enumerate(bc):
            r[k - db + j] -= q * y
    return IntPolynomial(r[:db])


def sturm_sequence(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain of ``p`` over the integers, each term made primitive."""
    seq = [p.primitive(), p.derivative().primitive()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        r = _pseudo_remainder(seq[-2], seq[-1])
        if r.is_zero():
            break
        g = r.content()
        seq.append(IntPolynomial([-c // g for c in r.coefficients]))
    return [s for s in seq if not s.is_zero()]


def _sign_changes(signs) -> int:
    s = [x for x in signs if x != 0]
    return sum(1 for a, b in zip(s, s[1:]) if (a > 0) != (b > 0))


def count_distinct_real_roots(p: IntPolynomial) -> int:
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    if p.degree == 0:
        return 0
    seq = sturm_sequence(p)
    at_pos_inf = [s.leading for s in seq]
    at_neg_inf = [s.leading * (-1) ** s.degree for s in seq]
    return _sign_changes(at_neg_inf) - _sign_changes(at_pos_inf)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Z[t] via the primitive remainder sequence."""
    a, b = a.primitive(), b.primitive()
    while not b.is_zero():
        r = _pseudo_remainder(a, b) if a.degree >= b.degree else a
        a, b = b, r.primitive()
    return a.primitive()


def count_real_roots(p: IntPolynomial) -> int:
    """Number of real roots of ``p`` counted with multiplicity.

    Sums distinct-root counts over ``p, gcd(p, p'), gcd of that with its
    derivative, ...``; a root of multiplicity ``k`` shows up in exactly the
    first ``k`` of these.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    total = 0
    g = p.primitive()
    while g.degree > 0:
        total += count_distinct_real_roots(g)
        g = poly_gcd(g, g.derivative())
    return total

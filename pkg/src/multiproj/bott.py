"""Cohomology of twisted differential forms on a single projective space.

``bott_h`` evaluates the classical closed form for h^q(P^n, Om^p(a)).
``bott_chi`` is an independent route to the Euler characteristic that never
touches that closed form; the two are kept separate on purpose so one can
check the other.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Optional

from .errors import DomainError

__all__ = [
    "Factor",
    "SupportSet",
    "bott_h",
    "bott_vector",
    "bott_chi",
    "chi_line",
    "poly_binomial",
    "support",
]


@dataclass(frozen=True, order=True)
class Factor:
    """The sheaf Om^p(a) on P^n."""

    n: int
    p: int
    a: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"projective dimension must be >= 1, got {self.n}")
        if not 0 <= self.p <= self.n:
            raise DomainError(f"need 0 <= p <= n, got p={self.p}, n={self.n}")

    @classmethod
    def tangent(cls, n: int, q: int, b: int) -> "Factor":
        """Wedge^q T(b) on P^n, rewritten as Om^(n-q)(n+1+b)."""
        if not 0 <= q <= n:
            raise DomainError(f"need 0 <= q <= n, got q={q}, n={n}")
        return cls(n, n - q, n + 1 + b)

    def normalized(self) -> "Factor":
        # Om^n(a) is the line bundle O(a-n-1); keep a single spelling for it.
        if self.p == self.n:
            return Factor(self.n, 0, self.a - self.n - 1)
        return self

    def twist(self, t: int) -> "Factor":
        return Factor(self.n, self.p, self.a + t)

    def dual(self) -> "Factor":
        # (Om^p(a))^v = Wedge^p T(-a) = Om^(n-p)(n+1-a)
        return Factor(self.n, self.n - self.p, self.n + 1 - self.a).normalized()

    @property
    def is_line(self) -> bool:
        return self.p in (0, self.n)

    @property
    def rank(self) -> int:
        return comb(self.n, self.p)


def bott_h(f: Factor, q: int) -> int:
    """h^q(P^n, Om^p(a)), exactly.

    The cases below are mutually exclusive: the untwisted point (a == 0,
    q == p) is tested first, and the h^0 / h^n regions require a strict
    inequality that excludes a == 0 whenever they would otherwise overlap it.
    """
    n, p, k = f.n, f.p, f.a
    if not 0 <= q <= n:
        raise DomainError(f"degree {q} outside [0, {n}]")
    if k == 0 and q == p:
        return 1
    if q == 0 and k > p:
        return comb(k + n - p, k) * comb(k - 1, p)
    if q == n and k < p - n:
        return comb(-k + p, -k) * comb(-k - 1, n - p)
    return 0


def bott_vector(f: Factor) -> list[int]:
    """[h^0, ..., h^n] for one factor."""
    return [bott_h(f, q) for q in range(f.n + 1)]


def poly_binomial(m: int, k: int) -> int:
    """C(m, k) extended to every integer m by the falling factorial."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= m - i
    return num // factorial(k)


def chi_line(n: int, m: int) -> int:
    """chi(P^n, O(m)) = C(m+n, n) as a polynomial in m."""
    return poly_binomial(m + n, n)


def bott_chi(f: Factor) -> int:
    """Euler characteristic of Om^p(a) from the wedge powers of the Euler sequence.

    In K-theory Om^p(k) = sum_i (-1)^i C(n+1, p-i) O(k-p+i), so only line
    bundle Euler characteristics are needed.
    """
    n, p, k = f.n, f.p, f.a
    return sum(
        (-1) ** i * comb(n + 1, p - i) * chi_line(n, k - p + i) for i in range(p + 1)
    )


@dataclass(frozen=True)
class SupportSet:
    """A set of integers of the form [lo, hi]; ``None`` marks an open end.

    UP c is [c, +inf), DOWN c is (-inf, c], POINT c is [c, c]. Anything with
    lo > hi is empty.
    """

    lo: Optional[int] = None
    hi: Optional[int] = None

    @classmethod
    def up(cls, c: int) -> "SupportSet":
        return cls(c, None)

    @classmethod
    def down(cls, c: int) -> "SupportSet":
        return cls(None, c)

    @classmethod
    def point(cls, c: int) -> "SupportSet":
        return cls(c, c)

    @classmethod
    def empty(cls) -> "SupportSet":
        return cls(1, 0)

    @property
    def is_empty(self) -> bool:
        return self.lo is not None and self.hi is not None and self.lo > self.hi

    @property
    def is_finite(self) -> bool:
        return self.is_empty or (self.lo is not None and self.hi is not None)

    @property
    def kind(self) -> str:
        if self.is_empty:
            return "EMPTY"
        if self.lo is None and self.hi is None:
            return "ALL"
        if self.hi is None:
            return "UP"
        if self.lo is None:
            return "DOWN"
        if self.lo == self.hi:
            return "POINT"
        return "INTERVAL"

    def __contains__(self, t: int) -> bool:
        if self.is_empty:
            return False
        return (self.lo is None or t >= self.lo) and (self.hi is None or t <= self.hi)

    def __and__(self, other: "SupportSet") -> "SupportSet":
        if self.is_empty or other.is_empty:
            return SupportSet.empty()
        lo = _pick(max, self.lo, other.lo)
        hi = _pick(min, self.hi, other.hi)
        if lo is not None and hi is not None and lo > hi:
            return SupportSet.empty()
        return SupportSet(lo, hi)

    def points(self) -> range:
        if self.is_empty:
            return range(0)
        if not self.is_finite:
            raise DomainError(f"cannot enumerate unbounded support {self.kind}")
        return range(self.lo, self.hi + 1)

    def __str__(self):
        kind = self.kind
        if kind in ("UP", "POINT"):
            return f"{kind} {self.lo}"
        if kind == "DOWN":
            return f"DOWN {self.hi}"
        if kind == "INTERVAL":
            return f"INTERVAL [{self.lo},{self.hi}]"
        return kind


def _pick(fn, x, y):
    if x is None:
        return y
    if y is None:
        return x
    return fn(x, y)


def support(f: Factor, q: int) -> SupportSet:
    """All t with h^q(Om^p(a+t)) > 0.

    Read off the case split in ``bott_h``: h^0 lives on k > p (k >= 0 when
    p == 0), h^n on k < p - n (k <= 0 when p == n), and an interior h^p only
    at k == 0. Both binomial products are strictly positive on their regions.
    """
    n, p, a = f.n, f.p, f.a
    if q == 0:
        return SupportSet.up(-a if p == 0 else p + 1 - a)
    if q == n:
        return SupportSet.down(-a if p == n else p - n - 1 - a)
    if q == p:
        return SupportSet.point(-a)
    return SupportSet.empty()

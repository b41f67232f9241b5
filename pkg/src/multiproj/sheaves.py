"""Direct sums of box products of twisted forms on P^n1 x ... x P^ns.

Every sheaf handled here is a finite direct sum of atoms, an atom being
Om^p1(a1) # ... # Om^ps(as) with one factor per projective space. The class
is closed under twisting by line bundles and under duals, and cohomology is
exact on it through the Kunneth formula.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import reduce
from itertools import product
from math import prod
from typing import Iterable, Sequence

from .bott import Factor, bott_chi, bott_vector
from .errors import DomainError, InexpressibleProduct

__all__ = [
    "Space",
    "Atom",
    "SheafSum",
    "CohTable",
    "line",
    "tensor_line",
    "tensor",
    "dual",
    "cohomology",
    "chi",
    "fingerprint",
    "rank",
]


@dataclass(frozen=True)
class Space:
    dims: tuple[int, ...]

    def __init__(self, dims: Iterable[int]):
        dims = tuple(int(n) for n in dims)
        if not dims:
            raise DomainError("a space needs at least one projective factor")
        if any(n < 1 for n in dims):
            raise DomainError(f"factor dimensions must be >= 1, got {dims}")
        object.__setattr__(self, "dims", dims)

    @property
    def s(self) -> int:
        return len(self.dims)

    @property
    def d(self) -> int:
        return sum(self.dims)

    def canonical(self) -> tuple[int, ...]:
        """Multidegree of the canonical bundle."""
        return tuple(-n - 1 for n in self.dims)

    def __str__(self):
        return " x ".join(f"P^{n}" for n in self.dims)


def _mul_poly(u: Sequence[int], v: Sequence[int]) -> list[int]:
    out = [0] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        if x:
            for j, y in enumerate(v):
                out[i + j] += x * y
    return out


class Atom(tuple):
    """A tuple of normalized ``Factor`` values, one per projective factor.

    Ordering is the tuple ordering of factors; since factor i always has the
    same n, this is lexicographic in (p, a).
    """

    def __new__(cls, factors: Iterable[Factor]):
        return super().__new__(cls, (f.normalized() for f in factors))

    @classmethod
    def line(cls, dims: Sequence[int], degrees: Sequence[int]) -> "Atom":
        if len(dims) != len(degrees):
            raise DomainError(f"multidegree {tuple(degrees)} has wrong length for {len(dims)} factors")
        return cls(Factor(n, 0, a) for n, a in zip(dims, degrees))

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(f.n for f in self)

    @property
    def is_line(self) -> bool:
        return all(f.p == 0 for f in self)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(f.a for f in self)

    @property
    def rank(self) -> int:
        return prod(f.rank for f in self)

    def twist(self, m: Sequence[int]) -> "Atom":
        if len(m) != len(self):
            raise DomainError(f"multidegree {tuple(m)} has wrong length for {len(self)} factors")
        return Atom(f.twist(t) for f, t in zip(self, m))

    def dual(self) -> "Atom":
        return Atom(f.dual() for f in self)

    def tensor(self, other: "Atom") -> "Atom":
        if self.dims != other.dims:
            raise DomainError("atoms live on different spaces")
        out = []
        for f, g in zip(self, other):
            if g.p == 0:
                out.append(f.twist(g.a))
            elif f.p == 0:
                out.append(g.twist(f.a))
            else:
                raise InexpressibleProduct(
                    f"Om^{f.p} (x) Om^{g.p} on P^{f.n} is not a sum of atoms"
                )
        return Atom(out)

    def cohomology(self) -> list[int]:
        """[h^0, ..., h^d] by convolving the per-factor Bott vectors."""
        return reduce(_mul_poly, (bott_vector(f) for f in self))

    def chi(self) -> int:
        return prod(bott_chi(f) for f in self)

    def __repr__(self):
        return "Atom(" + "#".join(_factor_str(f) for f in self) + ")"


def _factor_str(f: Factor) -> str:
    return f"O({f.a})" if f.p == 0 else f"Om^{f.p}({f.a})"


class CohTable(dict):
    """Degree -> h^q. Only nonzero entries are stored; missing keys read as 0."""

    def __missing__(self, key):
        return 0


@dataclass(frozen=True)
class SheafSum:
    """Formal direct sum of atoms with positive multiplicities, in canonical order."""

    space: Space
    terms: tuple[tuple[Atom, int], ...] = ()

    @classmethod
    def of(cls, space: Space, atoms: Iterable[Atom | tuple[Atom, int]]) -> "SheafSum":
        counts: Counter = Counter()
        for item in atoms:
            if isinstance(item, Atom):
                atom, mult = item, 1
            else:
                atom, mult = item
                atom = Atom(atom)
            if atom.dims != space.dims:
                raise DomainError(f"atom {atom!r} does not live on {space}")
            if mult < 0:
                raise DomainError("multiplicities must be nonnegative")
            counts[atom] += mult
        terms = tuple(sorted((a, m) for a, m in counts.items() if m > 0))
        return cls(space, terms)

    @classmethod
    def zero(cls, space: Space) -> "SheafSum":
        return cls(space, ())

    def atoms(self) -> list[Atom]:
        """Atoms with repetition."""
        return [a for a, m in self.terms for _ in range(m)]

    def multiplicity(self, atom: Atom) -> int:
        return dict(self.terms).get(atom, 0)

    @property
    def is_line_sum(self) -> bool:
        return all(a.is_line for a, _ in self.terms)

    def __add__(self, other: "SheafSum") -> "SheafSum":
        if other.space != self.space:
            raise DomainError("cannot add sheaves on different spaces")
        return SheafSum.of(self.space, self.terms + other.terms)

    def __mul__(self, k: int) -> "SheafSum":
        return SheafSum.of(self.space, ((a, m * k) for a, m in self.terms))

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        from .expr import format_sheaf

        return format_sheaf(self)


def line(space: Space, *degrees: int) -> SheafSum:
    """O(a1, ..., as) as a one-term sum."""
    if len(degrees) == 1 and not isinstance(degrees[0], int):
        degrees = tuple(degrees[0])
    return SheafSum.of(space, [Atom.line(space.dims, degrees)])


def tensor_line(S: SheafSum, m: Sequence[int]) -> SheafSum:
    if len(m) != S.space.s:
        raise DomainError(f"multidegree {tuple(m)} has wrong length for {S.space}")
    return SheafSum.of(S.space, ((a.twist(m), k) for a, k in S.terms))


def tensor(S: SheafSum, T: SheafSum) -> SheafSum:
    """S (x) T, defined when no factor pairs two non-line forms."""
    if S.space != T.space:
        raise DomainError("cannot tensor sheaves on different spaces")
    return SheafSum.of(
        S.space, ((a.tensor(b), m * k) for a, m in S.terms for b, k in T.terms)
    )


def dual(S: SheafSum) -> SheafSum:
    return SheafSum.of(S.space, ((a.dual(), m) for a, m in S.terms))


def cohomology(S: SheafSum) -> CohTable:
    total = [0] * (S.space.d + 1)
    for atom, mult in S.terms:
        for q, h in enumerate(atom.cohomology()):
            total[q] += mult * h
    return CohTable((q, h) for q, h in enumerate(total) if h)


def chi(S: SheafSum) -> int:
    return sum((-1) ** q * h for q, h in cohomology(S).items())


def fingerprint(S: SheafSum) -> tuple[int, ...]:
    """chi(S(m)) for m in the box prod{0..n_i}, lexicographic.

    The multigraded Hilbert polynomial has degree <= n_i in variable i, so
    these values pin down the class of S in K_0.
    """
    box = product(*(range(n + 1) for n in S.space.dims))
    return tuple(
        sum(m * a.twist(pt).chi() for a, m in S.terms) for pt in box
    )


def rank(S: SheafSum) -> int:
    return sum(m * a.rank for a, m in S.terms)

"""The standard d-block collection of line bundles and its dual collection.

Block j of the standard collection on X = P^n1 x ... x P^ns holds the line
bundles O(a) with -n_i <= a_i <= 0 and sum(a) = j - d. The dual collection
sends O(t) in block d-k to the atom Wedge^{-t_1} T(t_1) # ... which is built
in closed form here and then checked against the orthogonality pattern
rather than derived by mutating triangles.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

from .bott import Factor
from .errors import InexpressibleProduct
from .sheaves import Atom, Space

__all__ = [
    "BlockCollection",
    "DualCollection",
    "Violation",
    "box_points",
    "standard_blocks",
    "verify_block_axioms",
    "dual_atom",
    "dual_collection",
    "verify_duality",
    "ext_lines",
]


def box_points(dims: Sequence[int]) -> list[tuple[int, ...]]:
    """All a with -n_i <= a_i <= 0, in lexicographic order."""
    return list(product(*(range(-n, 1) for n in dims)))


@dataclass(frozen=True)
class BlockCollection:
    space: Space
    blocks: tuple[tuple[Atom, ...], ...]

    @property
    def type(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def members(self) -> list[tuple[int, Atom]]:
        """(block index, atom) in collection order."""
        return [(j, a) for j, b in enumerate(self.blocks) for a in b]

    def __len__(self):
        return sum(self.type)


def standard_blocks(X: Space) -> BlockCollection:
    blocks = [[] for _ in range(X.d + 1)]
    for a in box_points(X.dims):
        blocks[sum(a) + X.d].append(Atom.line(X.dims, a))
    return BlockCollection(X, tuple(tuple(b) for b in blocks))


@dataclass(frozen=True)
class Violation:
    condition: str
    source: Atom
    target: Atom
    degree: int
    dim: int
    detail: str = ""


def ext_lines(src: Atom, dst: Atom) -> list[int]:
    """[dim Ext^q(src, dst)] for line bundles, i.e. h^q(dst - src)."""
    if not (src.is_line and dst.is_line):
        raise InexpressibleProduct("Ext is only computed between line-bundle members")
    return dst.tensor(src.dual()).cohomology()


def verify_block_axioms(C: BlockCollection) -> list[Violation]:
    """Every violated block/exceptional-collection condition; empty means pass.

    Conditions, as reported in ``Violation.condition``:

    * ``intra-block``: members of one block are Ext-orthogonal both ways;
    * ``ordering``: Ext^*(later, earlier) = 0 across blocks;
    * ``strong``: Ext^q(earlier, later) = 0 for q > 0;
    * ``exceptional``: Hom(E, E) is one-dimensional, no higher self-Ext.
    """
    out: list[Violation] = []
    members = C.members()
    for _, a in members:
        if not a.is_line:
            raise InexpressibleProduct(f"member {a!r} is not a line bundle")
    for x, (bx, a) in enumerate(members):
        for y, (by, b) in enumerate(members):
            ext = ext_lines(a, b)
            if x == y:
                for q, h in enumerate(ext):
                    if h != (1 if q == 0 else 0):
                        out.append(Violation("exceptional", a, b, q, h))
            elif bx == by:
                out.extend(Violation("intra-block", a, b, q, h) for q, h in enumerate(ext) if h)
            elif bx > by:
                out.extend(Violation("ordering", a, b, q, h) for q, h in enumerate(ext) if h)
            else:
                out.extend(Violation("strong", a, b, q, h) for q, h in enumerate(ext) if q > 0 and h)
    return out


def dual_atom(dims: Sequence[int], t: Sequence[int]) -> Atom:
    """Wedge^{-t_1} T(t_1) # ... # Wedge^{-t_s} T(t_s)."""
    return Atom(Factor.tangent(n, -ti, ti) for n, ti in zip(dims, t))


@dataclass(frozen=True)
class DualCollection:
    """For each k, the pairs (E, R^(k) E) with E running over block d-k."""

    space: Space
    entries: tuple[tuple[tuple[Atom, Atom], ...], ...] = field(default=())

    def pairs(self):
        """(k, E, R^(k) E) triples."""
        for k, row in enumerate(self.entries):
            for E, R in row:
                yield k, E, R

    def replace(self, E: Atom, R: Atom) -> "DualCollection":
        rows = tuple(
            tuple((e, R if e == E else r) for e, r in row) for row in self.entries
        )
        return DualCollection(self.space, rows)


def dual_collection(X: Space) -> DualCollection:
    blocks = standard_blocks(X).blocks
    rows = []
    for k in range(X.d + 1):
        rows.append(tuple((E, dual_atom(X.dims, E.degrees)) for E in blocks[X.d - k]))
    return DualCollection(X, tuple(rows))


def verify_duality(X: Space, D: Optional[DualCollection] = None) -> list[Violation]:
    """Check Ext^alpha(R^(k) E, E') against the delta pattern.

    Ext^alpha(R, O(a)) = h^alpha(R^v (x) O(a)) since R is locally free; the
    product is an atom twisted by a line bundle, so it stays in the class.
    Expected: 1 when E' == E and alpha == k, else 0.
    """
    if D is None:
        D = dual_collection(X)
    members = standard_blocks(X).members()
    out: list[Violation] = []
    for k, E, R in D.pairs():
        Rv = R.dual()
        for _, F in members:
            for alpha, h in enumerate(Rv.tensor(F).cohomology()):
                want = 1 if (F == E and alpha == k) else 0
                if h != want:
                    out.append(Violation("duality", R, F, alpha, h, f"k={k}, expected {want}"))
    return out

"""E1 pages of the two Beilinson-type spectral sequences on X.

Both pages sit in the square -d <= p <= 0, 0 <= q <= d. Column p is built
from block p+d of the standard collection. With E = O(t) in that block and
R = R^(-p) E its dual-collection partner:

* variant I:  cell (p, q) holds E with multiplicity dim Ext^q(R, F)
  = h^q(R^v (x) F);
* variant II: cell (p, q) holds R^v with multiplicity dim Ext^q(E^v, F)
  = h^q(F (x) E).

Differentials are not computed. Convergence to F is checked in K-theory.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .blocks import dual_collection, standard_blocks
from .errors import DomainError, InexpressibleProduct
from .sheaves import Atom, SheafSum, Space, cohomology, fingerprint, tensor_line

__all__ = [
    "E1Page",
    "e1_page",
    "kclass_check",
    "KCheck",
    "CornerReport",
    "corner_summand",
]


@dataclass
class E1Page:
    variant: str
    space: Space
    source: SheafSum
    cells: dict[tuple[int, int], list[tuple[Atom, int]]] = field(default_factory=dict)

    def add(self, p: int, q: int, label: Atom, mult: int):
        if mult:
            self.cells.setdefault((p, q), []).append((label, mult))

    def drop(self, p: int, q: int) -> "E1Page":
        cells = {k: list(v) for k, v in self.cells.items() if k != (p, q)}
        return E1Page(self.variant, self.space, self.source, cells)

    def signed_sum(self) -> list[tuple[Atom, int]]:
        """(label, (-1)^(p+q) * multiplicity) over every cell entry."""
        return [
            (label, (-1) ** (p + q) * m)
            for (p, q), entries in sorted(self.cells.items())
            for label, m in entries
        ]


def e1_page(X: Space, F: SheafSum, variant: str) -> E1Page:
    variant = variant.upper()
    if variant not in ("I", "II"):
        raise DomainError(f"variant must be I or II, got {variant!r}")
    if F.space != X:
        raise DomainError("sheaf lives on a different space")
    if variant == "I" and not F.is_line_sum:
        raise InexpressibleProduct("variant I needs F to be a sum of line bundles")
    d = X.d
    page = E1Page(variant, X, F)
    duals = dual_collection(X)
    for k, E, R in duals.pairs():
        p = -k
        if variant == "II":
            label = R.dual()
            h = cohomology(tensor_line(F, E.degrees))
        else:
            label = E
            Rv = R.dual()
            h = cohomology(SheafSum.of(X, ((Rv.tensor(a), m) for a, m in F.terms)))
        for q in range(d + 1):
            page.add(p, q, label, h[q])
    return page


@dataclass(frozen=True)
class KCheck:
    ok: bool
    residual: tuple[int, ...]


def kclass_check(page: E1Page) -> KCheck:
    """Compare sum (-1)^(p+q) [cell] with [F] through fingerprints."""
    target = fingerprint(page.source)
    total = [0] * len(target)
    for label, coeff in page.signed_sum():
        for i, v in enumerate(fingerprint(SheafSum.of(page.space, [label]))):
            total[i] += coeff * v
    residual = tuple(t - f for t, f in zip(total, target))
    return KCheck(not any(residual), residual)


@dataclass(frozen=True)
class CornerReport:
    hypotheses_hold: bool
    failures: tuple[tuple[int, Atom, int, int], ...]  # (p, E, degree, dim)
    predicted: Optional[SheafSum]
    confirmed: Optional[bool]


def corner_summand(X: Space, F: SheafSum) -> CornerReport:
    """Predict the trivial summand O^h0(F) when the corner vanishing holds.

    Hypotheses: H^{-p-1}(F (x) E) = 0 for every E in block p+d, -d <= p <= -1.
    Under them the (0, 0) cell of the variant II page survives to E_inf and
    splits off. Since F is given in normal form, the prediction is also
    compared against the multiplicity of O in F.
    """
    d = X.d
    blocks = standard_blocks(X).blocks
    failures = []
    for p in range(-d, 0):
        for E in blocks[p + d]:
            h = cohomology(tensor_line(F, E.degrees))[-p - 1]
            if h:
                failures.append((p, E, -p - 1, h))
    if failures:
        return CornerReport(False, tuple(failures), None, None)
    h0 = cohomology(F)[0]
    trivial = Atom.line(X.dims, [0] * X.s)
    predicted = SheafSum.of(X, [(trivial, h0)])
    return CornerReport(True, (), predicted, F.multiplicity(trivial) >= h0)

"""Dimension counts for the symmetry components of (K^n)^(tensor d).

Closed forms are cross-checked against the hook content formula and, when
n^d is small enough, against exact ranks of the projectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .combinat import Partition, dim_irrep, dim_schur, format_partition, partitions


def dim_W(shape: Partition, n: int) -> int:
    return dim_irrep(shape) * dim_schur(shape, n)


def dim_Wi_standard(n: int, d: int) -> int:
    """Dimension of one cyclic eigencomponent of W_(d-1,1): (d-1) C(n+d-2, d)."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    return (d - 1) * comb(n + d - 2, d)


def codims(n: int, d: int) -> tuple[int, int]:
    """Codimensions of one vanishing subspace and of their common intersection."""
    if d < 3:
        raise ValueError(f"need d >= 3, got {d}")
    sym = comb(n + d - 1, d)
    std = comb(n + d - 2, d)
    return sym + (d - 2) * (d - 1) * std, sym + (d - 1) ** 2 * std


@dataclass
class DimensionTable:
    n: int
    d: int
    rows: list = field(default_factory=list)  # (shape, dim_irrep, dim_schur, dim_W)
    dim_Wi_standard: int = 0
    codim_theorem: int | None = None
    codim_common: int | None = None

    @property
    def total(self) -> int:
        return sum(r[3] for r in self.rows)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "components": [
                {"label": format_partition(s), "dim_irrep": a, "dim_schur": b, "dim_W": c}
                for s, a, b, c in self.rows
            ],
            "total": self.total,
            "dim_Wi_standard": self.dim_Wi_standard,
            "codim_theorem": self.codim_theorem,
            "codim_common": self.codim_common,
        }

    def to_text(self) -> str:
        lines = [f"n={self.n}  d={self.d}", f"{'lambda':<14}{'dim V':>8}{'dim S':>10}{'dim W':>10}"]
        for s, a, b, c in self.rows:
            lines.append(f"{format_partition(s):<14}{a:>8}{b:>10}{c:>10}")
        lines.append(f"{'total':<14}{'':>8}{'':>10}{self.total:>10}")
        lines.append(f"dim W^m_(d-1,1) = {self.dim_Wi_standard}")
        if self.codim_theorem is not None:
            lines.append(f"codim (one vanishing subspace) = {self.codim_theorem}")
            lines.append(f"codim (common subspace)        = {self.codim_common}")
        return "\n".join(lines)


def dimension_table(n: int, d: int) -> DimensionTable:
    table = DimensionTable(n, d)
    for shape in partitions(d):
        table.rows.append((shape, dim_irrep(shape), dim_schur(shape, n), dim_W(shape, n)))
    if d >= 2:
        table.dim_Wi_standard = dim_Wi_standard(n, d)
    if d >= 3:
        table.codim_theorem, table.codim_common = codims(n, d)
    return table

"""Isotypic decomposition of hypermatrices and the cyclic splitting of W_(d-1,1).

Isotypic components are cut out by the central idempotents

    P_lam = dim(V_lam)/d! * sum_sigma chi_lam(sigma) sigma,

and the standard component W_(d-1,1) is further split into eigenspaces of the
canonical d-cycle sigma = (1 2 ... d) with the projectors

    Pi_m = 1/d * sum_j w^(-m j) sigma^j,      sigma Pi_m = w^m Pi_m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Sequence, Union

from .combinat import (
    Partition,
    Permutation,
    all_permutations,
    character,
    check_partition,
    cycle_type,
    dim_irrep,
    format_partition,
    partitions,
)
from .exactnum import omega_pow
from .hypermatrix import GroupAlgebraElement, Hypermatrix, InvalidInputError, act_algebra
from .linalg import rank

Label = Union[Partition, tuple[Partition, int]]

MAX_RANK_ENTRIES = 4096


class MembershipError(ValueError):
    """The hypermatrix does not lie in the required symmetry component."""


class ResourceLimitError(RuntimeError):
    """Requested computation exceeds the desk-scale size guard."""


def standard_shape(d: int) -> Partition:
    return (d - 1, 1)


def format_label(label: Label) -> str:
    if label and isinstance(label[0], tuple):
        shape, m = label
        return f"{format_partition(shape)}#{m}"
    return format_partition(label)


def parse_label(text: str) -> Label:
    if "#" in text:
        shape, m = text.split("#")
        return (check_partition(int(t) for t in shape.split(",")), int(m))
    return check_partition(int(t) for t in text.split(","))


# ---------------------------------------------------------------------------
# projectors


@lru_cache(maxsize=None)
def isotypic_projector(shape: Partition) -> GroupAlgebraElement:
    shape = check_partition(shape)
    d = sum(shape)
    if d < 1:
        raise InvalidInputError("need a partition of positive weight")
    scale = Fraction(dim_irrep(shape), factorial(d))
    chi = {}
    terms = {}
    for sigma in all_permutations(d):
        mu = cycle_type(sigma)
        if mu not in chi:
            chi[mu] = character(shape, mu)
        if chi[mu]:
            terms[sigma] = scale * chi[mu]
    return GroupAlgebraElement(d, terms, order=1)


def canonical_cycle(d: int) -> Permutation:
    """sigma = (1 2 ... d)."""
    if d < 2:
        raise InvalidInputError(f"need d >= 2 for a d-cycle, got {d}")
    return Permutation(tuple(range(2, d + 1)) + (1,))


def _check_d_cycle(cycle: Permutation) -> None:
    if cycle_type(cycle) != (cycle.degree,):
        raise InvalidInputError(f"{cycle!r} is not a {cycle.degree}-cycle")


@lru_cache(maxsize=None)
def eigenprojector(d: int, m: int, cycle: Permutation | None = None) -> GroupAlgebraElement:
    """Projector onto {G : cycle G = w^m G}."""
    if not 0 <= m < d:
        raise InvalidInputError(f"eigenvalue exponent {m} out of range 0..{d - 1}")
    sigma = canonical_cycle(d) if cycle is None else cycle
    if sigma.degree != d:
        raise InvalidInputError("cycle has the wrong degree")
    _check_d_cycle(sigma)
    terms = {}
    power = Permutation.identity(d)
    for j in range(d):
        terms[power] = omega_pow(d, -m * j) / d
        power = sigma * power
    return GroupAlgebraElement(d, terms, order=d)


def cyclic_sum(d: int, cycle: Permutation | None = None) -> GroupAlgebraElement:
    """gamma = (1) + sigma + ... + sigma^(d-1)."""
    sigma = canonical_cycle(d) if cycle is None else cycle
    return GroupAlgebraElement(d, {sigma**j: 1 for j in range(d)})


# ---------------------------------------------------------------------------
# decompositions


def project_isotypic(F: Hypermatrix, shape: Sequence[int]) -> Hypermatrix:
    shape = check_partition(shape)
    if sum(shape) != F.d:
        raise InvalidInputError(f"partition {shape} has weight {sum(shape)}, hypermatrix has d={F.d}")
    return act_algebra(isotypic_projector(shape), F)


@dataclass
class DecompositionReport:
    """Symmetry components of one hypermatrix, keyed by label."""

    source: Hypermatrix
    components: dict = field(default_factory=dict)

    def total(self) -> Hypermatrix:
        out = Hypermatrix.zeros(self.source.n, self.source.d, self.source.root_order)
        for h in self.components.values():
            out = out + h
        return out

    def recomposes(self) -> bool:
        return self.total() == self.source

    def nonzero_labels(self) -> list:
        return [lab for lab, h in self.components.items() if not h.is_zero()]

    def to_json_obj(self) -> dict:
        return {
            "components": [
                {"label": format_label(lab), "hypermatrix": h.to_json_obj()}
                for lab, h in self.components.items()
            ]
        }


def decompose_isotypic(F: Hypermatrix) -> DecompositionReport:
    report = DecompositionReport(F)
    for shape in partitions(F.d):
        report.components[shape] = project_isotypic(F, shape)
    return report


def decompose_standard(F: Hypermatrix, cycle: Permutation | None = None) -> list[Hypermatrix]:
    """Split F in W_(d-1,1) as H_1 + ... + H_(d-1) with cycle H_m = w^m H_m."""
    if F.d < 3:
        raise InvalidInputError(f"the cyclic splitting needs d >= 3, got d={F.d}")
    if project_isotypic(F, standard_shape(F.d)) != F:
        raise MembershipError("hypermatrix is not in the standard isotypic component W_(d-1,1)")
    return [act_algebra(eigenprojector(F.d, m, cycle), F) for m in range(1, F.d)]


def decompose_full(F: Hypermatrix, cycle: Permutation | None = None) -> DecompositionReport:
    """Isotypic decomposition with the (d-1,1) part replaced by its eigencomponents."""
    iso = decompose_isotypic(F)
    if F.d < 3:
        return iso
    std = standard_shape(F.d)
    report = DecompositionReport(F)
    for shape, h in iso.components.items():
        if shape == std:
            for m, hm in enumerate(decompose_standard(h, cycle), start=1):
                report.components[(std, m)] = hm
        else:
            report.components[shape] = h
    return report


@dataclass
class MembershipReport:
    status: dict  # partition -> "pure" | "absent" | "mixed"
    eigencomponents: list[int]  # exponents m with a nonzero (d-1,1) eigencomponent

    @property
    def pure_type(self) -> Partition | None:
        return next((s for s, st in self.status.items() if st == "pure"), None)

    def to_json_obj(self) -> dict:
        return {
            "status": {format_partition(s): st for s, st in self.status.items()},
            "pure_type": format_partition(self.pure_type) if self.pure_type is not None else None,
            "standard_eigencomponents": self.eigencomponents,
        }


def membership(F: Hypermatrix) -> MembershipReport:
    status = {}
    eig: list[int] = []
    for shape, h in decompose_isotypic(F).components.items():
        if h == F and not F.is_zero():
            status[shape] = "pure"
        elif h.is_zero():
            status[shape] = "absent"
        else:
            status[shape] = "mixed"
        if F.d >= 3 and shape == standard_shape(F.d) and not h.is_zero():
            eig = [m for m, hm in enumerate(decompose_standard(h), start=1) if not hm.is_zero()]
    return MembershipReport(status, eig)


# ---------------------------------------------------------------------------
# ranks of projectors as endomorphisms of the n^d entry space


def operator_matrix(gamma: GroupAlgebraElement, n: int) -> list[list]:
    """Matrix of F -> gamma F on row-major entry coordinates."""
    d = gamma.d
    size = n**d
    if size > MAX_RANK_ENTRIES:
        raise ResourceLimitError(f"n^d = {size} exceeds the rank guard {MAX_RANK_ENTRIES}")
    index = list(product(range(n), repeat=d))
    pos = {idx: k for k, idx in enumerate(index)}
    rational = all(c.is_rational() for c in gamma.terms.values())
    rows: list[list] = [[0] * size for _ in range(size)]
    for sigma, c in gamma.terms.items():
        coeff = c.coeffs[0] if rational else c
        img = [j - 1 for j in sigma.images]
        for k, idx in enumerate(index):
            src = pos[tuple(idx[p] for p in img)]
            rows[k][src] = rows[k][src] + coeff
    return rows


def label_operator(label: Label) -> GroupAlgebraElement:
    if label and isinstance(label[0], tuple):
        shape, m = label
        shape = check_partition(shape)
        d = sum(shape)
        if shape != standard_shape(d):
            raise InvalidInputError("eigencomponents are defined only for the (d-1,1) component")
        return eigenprojector(d, m) * isotypic_projector(shape)
    return isotypic_projector(check_partition(label))


def subspace_rank(label: Label, n: int) -> int:
    """Dimension of the component named by ``label`` inside (K^n)^(tensor d)."""
    gamma = label_operator(label)
    return rank(operator_matrix(gamma, n))

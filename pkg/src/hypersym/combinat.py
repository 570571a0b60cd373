"""Partitions, permutations and irreducible characters of S_d.

Partitions are plain tuples of positive integers in weakly decreasing order.
Characters come from the Murnaghan-Nakayama rule on beta-sets: removing a
border strip of length k is the same as sliding one bead k places down,
with sign (-1)^(beads jumped over).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _iter_permutations
from math import factorial, prod
from typing import Iterator, Sequence

Partition = tuple[int, ...]


def check_partition(parts: Sequence[int], weight: int | None = None) -> Partition:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition must be weakly decreasing: {parts}")
    if weight is not None and sum(parts) != weight:
        raise ValueError(f"partition {parts} does not have weight {weight}")
    return parts


def partitions(d: int) -> list[Partition]:
    """All partitions of d in reverse-lexicographic order, (d) first."""
    if d < 0:
        raise ValueError(f"d must be non-negative, got {d}")

    def gen(rest: int, cap: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return list(gen(d, d))


def conjugate(shape: Partition) -> Partition:
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > c) for c in range(shape[0]))


def format_partition(shape: Partition) -> str:
    return ",".join(str(p) for p in shape)


def parse_partition(text: str) -> Partition:
    return check_partition(int(t) for t in text.split(",") if t.strip())


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..d}; ``images[j-1]`` is sigma(j)."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(tuple(range(1, d + 1)))

    @classmethod
    def from_cycles(cls, d: int, *cycles: Sequence[int]) -> "Permutation":
        images = list(range(1, d + 1))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(j) = self(other(j))
        if other.degree != self.degree:
            raise ValueError("cannot compose permutations of different degree")
        return Permutation(tuple(self.images[o - 1] for o in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for j, s in enumerate(self.images, start=1):
            inv[s - 1] = j
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        for _ in range(k):
            result = result * self
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def __repr__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return f"Permutation.identity({self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)
        return f"<{body} in S_{self.degree}>"


def cycle_type(sigma: Permutation) -> Partition:
    return tuple(sorted((len(c) for c in sigma.cycles()), reverse=True))


@lru_cache(maxsize=None)
def all_permutations(d: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(p) for p in _iter_permutations(range(1, d + 1)))


def z_constant(mu: Partition) -> int:
    """Centralizer order prod i^m_i m_i! of a permutation of cycle type mu."""
    out = 1
    for part in set(mu):
        m = mu.count(part)
        out *= part**m * factorial(m)
    return out


def class_size(mu: Sequence[int]) -> int:
    mu = check_partition(mu)
    return factorial(sum(mu)) // z_constant(mu)


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama


def _beta_set(shape: Partition, length: int) -> tuple[int, ...]:
    padded = shape + (0,) * (length - len(shape))
    return tuple(p + length - 1 - i for i, p in enumerate(padded))


def _shape_from_beta(beta: Sequence[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    parts = tuple(b - (length - 1 - i) for i, b in enumerate(beta))
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(shape: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not shape else 0
    k, rest = mu[0], mu[1:]
    beta = _beta_set(shape, len(shape))
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = [c for c in beta if c != b] + [target]
        total += (-1) ** height * _mn(_shape_from_beta(new_beta), rest)
    return total


def character(shape: Sequence[int], mu: Sequence[int]) -> int:
    """chi_shape evaluated on the conjugacy class of cycle type mu."""
    shape, mu = check_partition(shape), check_partition(mu)
    if sum(shape) != sum(mu):
        raise ValueError(f"weight mismatch: {shape} vs {mu}")
    # strip longest cycles first; any order is valid, this one recurses least
    return _mn(shape, tuple(sorted(mu, reverse=True)))


def character_table(d: int) -> tuple[list[Partition], list[Partition], list[list[int]]]:
    parts = partitions(d)
    return parts, parts, [[character(lam, mu) for mu in parts] for lam in parts]


# ---------------------------------------------------------------------------
# dimension formulas


def hook_lengths(shape: Partition) -> list[int]:
    conj = conjugate(shape)
    return [
        (row_len - c - 1) + (conj[c] - r - 1) + 1
        for r, row_len in enumerate(shape)
        for c in range(row_len)
    ]


def dim_irrep(shape: Sequence[int]) -> int:
    shape = check_partition(shape)
    return factorial(sum(shape)) // prod(hook_lengths(shape))


def dim_schur(shape: Sequence[int], n: int) -> int:
    """Dimension of the Schur functor S_shape applied to an n-dimensional space."""
    shape = check_partition(shape)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if len(shape) > n:
        return 0
    contents = [n + c - r for r, row_len in enumerate(shape) for c in range(row_len)]
    num = prod(contents)
    den = prod(hook_lengths(shape))
    assert num % den == 0
    return num // den

"""Random hypermatrices for property tests and experiments."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

from .combinat import Partition, Permutation, partitions
from .exactnum import Cyclo, totient
from .hypermatrix import Hypermatrix, act_algebra
from .symmetry import eigenprojector, project_isotypic, standard_shape


def random_rational(rng: random.Random, bound: int = 100, avoid: int | None = None) -> Fraction:
    """num/den with |num| <= bound and 1 <= den <= bound; ``avoid`` excludes a prime from den."""
    while True:
        den = rng.randint(1, bound)
        if avoid is None or den % avoid:
            return Fraction(rng.randint(-bound, bound), den)


def random_cyclo(rng: random.Random, order: int, bound: int = 20) -> Cyclo:
    return Cyclo(order, [random_rational(rng, bound) for _ in range(totient(order))])


def random_hypermatrix(
    rng: random.Random, n: int, d: int, bound: int = 100, avoid: int | None = None, root_order: int | None = None
) -> Hypermatrix:
    return Hypermatrix.from_entries(
        n, d, [random_rational(rng, bound, avoid) for _ in range(n**d)], root_order
    )


def random_vector(rng: random.Random, n: int, bound: int = 20) -> list[Fraction]:
    return [random_rational(rng, bound) for _ in range(n)]


def random_permutation(rng: random.Random, d: int) -> Permutation:
    images = list(range(1, d + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def random_in_components(rng: random.Random, n: int, d: int, shapes: Iterable[Partition], **kw) -> Hypermatrix:
    """Sum of independent random projections onto the listed isotypic components."""
    out = Hypermatrix.zeros(n, d)
    for shape in shapes:
        out = out + project_isotypic(random_hypermatrix(rng, n, d, **kw), shape)
    return out


def random_eigencomponent(rng: random.Random, n: int, d: int, m: int, **kw) -> Hypermatrix:
    """Random element of W^m_(d-1,1), by projecting twice."""
    G = project_isotypic(random_hypermatrix(rng, n, d, **kw), standard_shape(d))
    return act_algebra(eigenprojector(d, m), G)


def without_symmetric_part(F: Hypermatrix) -> Hypermatrix:
    return F - project_isotypic(F, (F.d,))


def vanishing_subspace_sample(rng: random.Random, n: int, d: int, m: int, **kw) -> Hypermatrix:
    """Random F in (sum of W_lam, lam != (d), (d-1,1)) + W^m_(d-1,1)."""
    others: Sequence[Partition] = [s for s in partitions(d) if s not in ((d,), standard_shape(d))]
    return random_in_components(rng, n, d, others, **kw) + random_eigencomponent(rng, n, d, m, **kw)

"""Compare three computations of dim W^m_(d-1,1) over a grid of (n, d).

closed form (d-1) C(n+d-2, d), hook content for the shape (d-1,1), and the
exact rank of the eigenprojector restricted to W_(d-1,1) when n^d is small.

    python3 scripts/dimension_triangulation.py --n-max 4 --d-max 5
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from hypersym.combinat import dim_schur
from hypersym.dims import codims, dim_Wi_standard
from hypersym.symmetry import MAX_RANK_ENTRIES, standard_shape, subspace_rank


@dataclass
class GridConfig:
    n_min: int = 2
    n_max: int = 4
    d_min: int = 3
    d_max: int = 5
    rank_limit: int = MAX_RANK_ENTRIES


def rows(cfg: GridConfig):
    for d in range(cfg.d_min, cfg.d_max + 1):
        for n in range(cfg.n_min, cfg.n_max + 1):
            closed = dim_Wi_standard(n, d)
            hook = dim_schur(standard_shape(d), n)
            ranks = None
            if n**d <= cfg.rank_limit:
                ranks = [subspace_rank((standard_shape(d), m), n) for m in range(1, d)]
            yield n, d, closed, hook, ranks, codims(n, d)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    for name, value in vars(GridConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=int, default=value)
    cfg = GridConfig(**vars(ap.parse_args()))
    print(f"{'n':>3}{'d':>3}{'closed':>9}{'hook':>7}{'ranks':>18}{'codims':>14}  agree")
    t0 = time.perf_counter()
    bad = 0
    for n, d, closed, hook, ranks, cd in rows(cfg):
        agree = closed == hook and (ranks is None or set(ranks) == {closed})
        bad += not agree
        shown = "skipped" if ranks is None else ",".join(map(str, ranks))
        print(f"{n:>3}{d:>3}{closed:>9}{hook:>7}{shown:>18}{str(cd):>14}  {'yes' if agree else 'NO'}")
    print(f"{bad} disagreements, {time.perf_counter() - t0:.1f}s")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()

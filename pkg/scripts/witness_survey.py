"""Survey of finite-field witnesses for the vanishing subspaces.

For random F in (skew part) + W^m_(d-1,1), record the smallest extension
degree k such that the reduced diagonal system has a zero over GF(p^k).

    python3 scripts/witness_survey.py --n 3 --d 3 --samples 40 --primes 7 13 19
"""

from __future__ import annotations

import argparse
import json
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass, field

from hypersym.sampling import vanishing_subspace_sample
from hypersym.vanishing import chern_top, witness_search_ff


@dataclass
class SurveyConfig:
    n: int = 3
    d: int = 3
    samples: int = 40
    primes: list[int] = field(default_factory=lambda: [7, 13, 19])
    max_degree: int = 3
    max_points: int = 200_000  # skip extension degrees whose projective plane is larger
    bound: int = 50
    seed: int = 0
    output: str | None = None


def smallest_degree(F, p: int, max_degree: int, max_points: int) -> tuple[int | str | None, bool]:
    """Smallest k with a zero over GF(p^k), and whether it satisfies every slot."""
    for k in range(1, max_degree + 1):
        q = p**k
        if (q**F.n - 1) // (q - 1) > max_points:
            return f">{k - 1}", False
        rep = witness_search_ff(F, p, degree=k)
        if rep.witness is not None:
            return k, rep.details["all_slots_zero"]
    return None, False


def run(cfg: SurveyConfig) -> dict:
    rng = random.Random(cfg.seed)
    table = {}
    t0 = time.perf_counter()
    for p in cfg.primes:
        if (p - 1) % cfg.d:
            print(f"skipping p={p}: not 1 mod {cfg.d}")
            continue
        counts: Counter = Counter()
        for _ in range(cfg.samples):
            m = rng.randrange(1, cfg.d)
            F = vanishing_subspace_sample(rng, cfg.n, cfg.d, m, bound=cfg.bound, avoid=p)
            k, every_slot = smallest_degree(F, p, cfg.max_degree, cfg.max_points)
            counts[k] += 1
            if isinstance(k, int) and not every_slot:
                counts["last-slot-only"] += 1
        table[p] = {str(k): v for k, v in sorted(counts.items(), key=str)}
    return {
        "config": asdict(cfg),
        "expected_zero_count": chern_top(cfg.n, cfg.d),
        "smallest_degree_histogram": table,
        "seconds": round(time.perf_counter() - t0, 2),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    defaults = SurveyConfig()
    for name, value in asdict(defaults).items():
        flag = "--" + name.replace("_", "-")
        if isinstance(value, list):
            ap.add_argument(flag, type=int, nargs="+", default=value)
        else:
            ap.add_argument(flag, type=type(value) if value is not None else str, default=value)
    cfg = SurveyConfig(**vars(ap.parse_args()))
    result = run(cfg)
    text = json.dumps(result, indent=2)
    print(text)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text + "\n")


if __name__ == "__main__":
    main()

"""Tabulate decided instances by case tag and (dim_H, dim_H') over several q.

    python3 scripts/dichotomy_census.py --q 3 5 7 9 --cap 60 --out census.json
"""

import argparse
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass, field

from gpperiods.decider import EnumBounds, decide_period, enumerate_cases


@dataclass
class CensusConfig:
    qs: list = field(default_factory=lambda: [3, 5])
    cap: int | None = 60
    shapes: tuple = ("split3", "quad_times_f", "cubic_field")


def run(cfg: CensusConfig) -> dict:
    out = {"config": asdict(cfg), "by_q": {}}
    for q in cfg.qs:
        t0 = time.perf_counter()
        tags = Counter()
        for inp in enumerate_cases(q, cfg.shapes, EnumBounds(max_per_algebra=cfg.cap)):
            r = decide_period(inp)
            tags[f"{r.case_tag} ({r.dim_H},{r.dim_Hprime}) {r.eps_source}"] += 1
        out["by_q"][q] = {"seconds": round(time.perf_counter() - t0, 2), "total": sum(tags.values()),
                          "tags": dict(sorted(tags.items()))}
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, nargs="+", default=[3, 5])
    ap.add_argument("--cap", type=int, default=60, help="instances per algebra, 0 for all")
    ap.add_argument("--out")
    a = ap.parse_args()
    res = run(CensusConfig(a.q, a.cap or None))
    for q, row in res["by_q"].items():
        print(f"q = {q}: {row['total']} instances in {row['seconds']}s")
        for tag, n in row["tags"].items():
            print(f"  {n:6d}  {tag}")
    if a.out:
        with open(a.out, "w") as fh:
            json.dump(res, fh, indent=2)


if __name__ == "__main__":
    main()

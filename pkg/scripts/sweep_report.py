"""Run the identity registry and print a summary table (optionally JSON)."""
import argparse
import json
from dataclasses import dataclass
from typing import Optional

from kbonacci import identities


@dataclass
class SweepConfig:
    k_max: Optional[int] = None
    n_max: Optional[int] = None
    as_json: bool = False


def run(cfg: SweepConfig) -> int:
    reports = identities.sweep(k_max=cfg.k_max, n_max=cfg.n_max)
    if cfg.as_json:
        print(json.dumps([r.to_json_obj(timing=False) for r in reports], indent=2))
    else:
        print(f"{'id':<20} {'points':>7} {'fail':>5} {'ext':>4} {'ms':>8}")
        for r in reports:
            print(f"{r.id:<20} {r.size:>7} {len(r.failures):>5} {'y' if r.extension_used else '-':>4} {r.ms:>8.1f}")
        total = sum(r.size for r in reports)
        print(f"{len(reports)} identities, {total} points, {sum(not r.passed for r in reports)} failing")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int)
    ap.add_argument("--n-max", type=int)
    ap.add_argument("--json", action="store_true")
    a = ap.parse_args()
    raise SystemExit(run(SweepConfig(a.k_max, a.n_max, a.json)))

"""Show where the literal closed forms differ from the exact values.

1. The root power sum with exponent n instead of n+k-2.
2. The three partition expressions for Lucas branches evaluated verbatim
   (empty partition sums at small n) versus the default composed mode.
"""
import argparse
from dataclasses import dataclass

from kbonacci import binet, partitions
from kbonacci.sequences import gok_fib, kso_fib, kso_lucas


@dataclass
class LiteralConfig:
    k_max: int = 5
    n_max: int = 25


def power_sum_exponent(cfg: LiteralConfig) -> None:
    print("power sum with exponent n:")
    for k in range(2, cfg.k_max + 1):
        rs = binet.core_roots(k)
        rows = []
        for n in range(1, 9):
            raw = sum(lam ** n / binet._horner(binet._poly_coeffs(rs.t), lam)[1] for lam in rs.roots).real
            rows.append(f"{n}:{round(raw)}/{kso_fib(k, None, k, n)}/{gok_fib(k, n)}")
        print(f"  k={k}  n:literal/last-branch/single-sequence  " + " ".join(rows))


def partition_forms(cfg: LiteralConfig) -> None:
    forms = {
        "weighted": partitions.lucas_from_weighted_partitions,
        "via-fib": partitions.lucas_from_fib_partitions,
        "tail": partitions.lucas_from_tail_partitions,
    }
    for name, fn in forms.items():
        bad = []
        for k in range(2, cfg.k_max + 1):
            for i in range(1, k + 1):
                for n in range(1, cfg.n_max + 1):
                    exact = kso_lucas(k, i, n)
                    assert fn(k, i, n) == exact
                    lit = fn(k, i, n, literal=True)
                    if lit != exact:
                        bad.append((k, i, n, lit, exact))
        print(f"{name}: {len(bad)} literal mismatches (k,i,n,literal,exact)")
        for row in bad[:12]:
            print("   ", row)
        if len(bad) > 12:
            print(f"    ... {len(bad) - 12} more")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=5)
    ap.add_argument("--n-max", type=int, default=25)
    a = ap.parse_args()
    cfg = LiteralConfig(a.k_max, a.n_max)
    power_sum_exponent(cfg)
    partition_forms(cfg)

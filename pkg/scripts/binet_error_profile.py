"""Relative error of the floating-point closed forms against exact values, by n.

Prints the worst error over k per n, plus the ratio of actual error to the
reported error estimate (values above 1 would mean the estimate is too small).
"""
import argparse
from dataclasses import dataclass

from kbonacci import binet
from kbonacci.sequences import kso_fib


@dataclass
class ProfileConfig:
    k_min: int = 2
    k_max: int = 5
    n_max: int = 120
    step: int = 10


def profile(cfg: ProfileConfig) -> None:
    roots = {k: binet.core_roots(k) for k in range(cfg.k_min, cfg.k_max + 1)}
    print(f"{'n':>4} {'power-sum rel':>14} {'det-ratio rel':>14} {'max err/est':>12}")
    for n in range(0, cfg.n_max + 1, cfg.step):
        worst_b = worst_v = ratio = 0.0
        for k, rs in roots.items():
            exact = kso_fib(k, None, k, n)
            b = binet.binet_fib(k, n, roots=rs)
            v = binet.vandermonde_fib(k, n, roots=rs)
            scale = max(1, abs(exact))
            worst_b = max(worst_b, abs(b.value - exact) / scale)
            worst_v = max(worst_v, abs(v.value - exact) / scale)
            for x in (b, v):
                if x.abs_error_estimate:
                    ratio = max(ratio, abs(x.value - exact) / x.abs_error_estimate)
        print(f"{n:>4} {worst_b:>14.3e} {worst_v:>14.3e} {ratio:>12.3f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-min", type=int, default=2)
    ap.add_argument("--k-max", type=int, default=5)
    ap.add_argument("--n-max", type=int, default=120)
    ap.add_argument("--step", type=int, default=10)
    a = ap.parse_args()
    profile(ProfileConfig(a.k_min, a.k_max, a.n_max, a.step))

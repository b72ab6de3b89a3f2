#!/usr/bin/env python3
"""Compare the pure-Python kernels against the compiled extension on the
workloads that dominate the oracle suites.

Run:  python benchmarks/bench_kernels.py
"""

import time

from arbor import _purekernels as pure
from arbor import gen
from arbor.trees import build_uniform_rooted

try:
    from arbor import _speed as compiled
except ImportError:
    compiled = None


def best_of(fn, reps=3):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    t23, _ = build_uniform_rooted(2, 3)
    group23 = pure.rooted_auts(t23.parent)
    star7 = tuple([-1] + [0] * 7)
    group_star = pure.rooted_auts(star7)
    big, _ = build_uniform_rooted(7, 2)
    labels = tuple(i % 5 for i in range(big.n))
    rooted8 = [t.parent for t in gen.all_rooted_trees(8)]

    def conj_small(mod):
        mod.conj_classes(group23)

    def conj_large(mod):
        mod.conj_classes(group_star)

    def codes(mod):
        for _ in range(200):
            mod.rooted_code(big.parent, labels)

    def auts(mod):
        for p in rooted8:
            mod.rooted_auts(p)

    yield f"conj_classes |G|={len(group23)} n=13", conj_small
    yield f"conj_classes |G|={len(group_star)} n=8", conj_large
    yield f"rooted_code n={big.n} x200", codes
    yield "rooted_auts all rooted <=8", auts


def main():
    if compiled is None:
        print("compiled extension not available; showing pure backend only")
    rows = []
    for name, work in workloads():
        t_pure = best_of(lambda: work(pure))
        if compiled is not None:
            t_fast = best_of(lambda: work(compiled))
            rows.append((name, t_pure, t_fast, t_pure / t_fast))
        else:
            rows.append((name, t_pure, None, None))
    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'pure':>9}  {'compiled':>9}  {'speedup':>8}")
    for name, t_pure, t_fast, ratio in rows:
        if t_fast is None:
            print(f"{name:<{width}}  {t_pure:>8.3f}s  {'-':>9}  {'-':>8}")
        else:
            print(f"{name:<{width}}  {t_pure:>8.3f}s  {t_fast:>8.3f}s  {ratio:>7.1f}x")


if __name__ == "__main__":
    main()

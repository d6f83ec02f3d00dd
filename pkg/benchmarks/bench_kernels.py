"""Compare the compiled and pure-Python kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import random
import time

from doodleswitch import _pykernels
from doodleswitch.gauss import random_code
from doodleswitch.presentation import _flat_tables, _plans, dfds, fds
from doodleswitch.switch import enumerate_switches

try:
    from doodleswitch import _ckernels
except ImportError:
    _ckernels = None


def counting_workload(seed=3, n_codes=40):
    rng = random.Random(seed)
    switches = enumerate_switches(3) + enumerate_switches(4)[::20]
    jobs = []
    for _ in range(n_codes):
        D = random_code(rng, rng.randint(2, 7), rng.randint(1, 2))
        for P in (fds(D), dfds(D)):
            for T in rng.sample(switches, 8):
                mul, div = _flat_tables(T.table)
                for plan in _plans(P)[1]:
                    jobs.append((T.order, mul, div, plan.var, plan.kind, plan.srca, plan.srcb,
                                 plan.check_start, plan.checks))
    return jobs


def brute_workload(seed=4, n_codes=20):
    rng = random.Random(seed)
    switches = enumerate_switches(3)
    jobs = []
    for _ in range(n_codes):
        D = random_code(rng, rng.randint(2, 4), 1)
        P = fds(D)
        T = rng.choice(switches)
        mul, _ = _flat_tables(T.table)
        jobs.append((T.order, mul, len(P.generators), [g for r in P.relations for g in r]))
    return jobs


def timeit(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    count_jobs = counting_workload()
    brute_jobs = brute_workload()
    cases = [
        ("enumerate order 4", lambda k: list(k.enumerate_tables(4))),
        ("enumerate order 4 up to iso", lambda k: list(k.enumerate_tables(4, True))),
        (f"count_plan x{len(count_jobs)}", lambda k: [k.count_plan(*j) for j in count_jobs]),
        (f"brute_force x{len(brute_jobs)}", lambda k: [k.brute_force(*j) for j in brute_jobs]),
    ]
    print(f"{'workload':32s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn in cases:
        tp, rp = timeit(lambda: fn(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:32s} {tp:10.4f} {'n/a':>10s} {'':>8s}")
            continue
        tc, rc = timeit(lambda: fn(_ckernels), args.repeat)
        assert rp == rc, f"backends disagree on {name}"
        print(f"{name:32s} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()

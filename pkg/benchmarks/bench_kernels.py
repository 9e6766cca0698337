"""Compare compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit
from fractions import Fraction

import numpy as np

from ltsig import kernels, signature
from ltsig.knots import circle_breakpoints, torus_seifert_matrix
from ltsig.signature import _ball_embedding, sample_points, signature_at


def best(fn, repeat: int) -> float:
    number = 1
    while timeit.timeit(fn, number=number) < 0.05:
        number *= 2
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def sweep(p: int, q: int):
    v = torus_seifert_matrix(p, q)
    pts = circle_breakpoints(p, q)
    mids = sample_points(pts)
    return lambda: [signature_at(v, m, breakpoints=pts) for m in mids]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the fallback is timed")
    names = sorted(backends)

    cases = []
    for p, q in [(3, 5), (5, 7), (7, 8)]:
        mid, _ = _ball_embedding(torus_seifert_matrix(p, q), Fraction(1, 2 * p * q + 1))
        cases.append((f"bk_factor n={mid.shape[0]}", lambda mod, m=mid: (lambda: mod.bk_factor(m))))
    rng = np.random.default_rng(0)
    big = rng.standard_normal((200, 200))
    big = big + big.T
    cases.append(("bk_factor n=200 random", lambda mod: (lambda: mod.bk_factor(big))))
    for p, q in [(7, 8), (31, 37), (97, 101)]:
        cases.append((f"jump_table ({p},{q})", lambda mod, p=p, q=q: (lambda: mod.jump_table(p, q))))

    print(f"{'case':<26}" + "".join(f"{n:>14}" for n in names) + f"{'speedup':>10}")
    for label, make in cases:
        times = {n: best(make(backends[n]), args.repeat) for n in names}
        ratio = times["python"] / times["compiled"] if "compiled" in times else float("nan")
        print(f"{label:<26}" + "".join(f"{times[n] * 1e3:>12.3f}ms" for n in names) + f"{ratio:>9.1f}x")

    original = signature.bk_factor
    try:
        for p, q in [(5, 7), (7, 8)]:
            times = {}
            for n in names:
                signature.bk_factor = backends[n].bk_factor
                times[n] = best(sweep(p, q), args.repeat)
            ratio = times["python"] / times["compiled"] if "compiled" in times else float("nan")
            print(f"{f'profile sweep ({p},{q})':<26}" + "".join(f"{times[n] * 1e3:>12.3f}ms" for n in names)
                  + f"{ratio:>9.1f}x")
    finally:
        signature.bk_factor = original


if __name__ == "__main__":
    main()

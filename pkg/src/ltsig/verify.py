"""Cross-route verification sweeps behind ``ltsig verify``.

Each per-pair task is a pure function of (p, q, flags); results are merged
in sorted pair order so reports are identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from ltsig import kernels, torus
from ltsig.knots import (
    TorusKnotParams,
    alexander_polynomial,
    circle_breakpoints,
    torus_alexander_closed,
    torus_seifert_matrix,
)
from ltsig.l2 import l2_from_profile
from ltsig.signature import DEFAULT_PRECISION_BITS, SignatureProfile, sample_points, signature_at
from ltsig.slice import Verdict, double_candidates, twist_verdict

SUITES = (
    "alexander",
    "hirzebruch",
    "introplot",
    "jump_laws",
    "matrix_vs_jumps",
    "mordell",
    "slice",
    "triple_route",
)

ALEXANDER_MAX = 8


@dataclass
class SuiteResult:
    checks: int = 0
    counterexample: dict | None = None

    def check(self, ok: bool, **detail) -> bool:
        self.checks += 1
        if not ok and self.counterexample is None:
            self.counterexample = detail
        return ok


@dataclass
class PairResult:
    p: int
    q: int
    suites: dict[str, SuiteResult] = field(default_factory=dict)

    def suite(self, name: str) -> SuiteResult:
        return self.suites.setdefault(name, SuiteResult())


def _fmt(v) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def check_pair(p: int, q: int, max_q: int, precision_bits: int, inject_fault: bool = False) -> PairResult:
    params = TorusKnotParams(p, q)
    res = PairResult(p, q)
    pq = params.pq

    table = torus.jump_table(params)
    if inject_fault:
        table[1] = -table[1]
    ns = [n for n in range(1, pq) if n % p and n % q]
    profile = SignatureProfile.from_jumps([Fraction(n, pq) for n in ns], [table[n] for n in ns])

    # closed form = weighted jump sum = profile integral
    s = res.suite("triple_route")
    closed = torus.l2_closed_form(params)
    weighted = torus.l2_weighted_jump_form(params)
    try:
        prof = l2_from_profile(profile)
    except ArithmeticError as exc:
        prof = str(exc)
    s.check(closed == weighted == prof, p=p, q=q, closed=_fmt(closed), weighted=_fmt(weighted),
            profile=prof if isinstance(prof, str) else _fmt(prof))

    # kernel table vs lattice enumeration; antisymmetry; uniqueness; intro sign
    s = res.suite("jump_laws")
    intro = kernels.intro_sign_table(p, q)
    for n in range(1, pq):
        j = torus.jump_torus(params, n)
        if not s.check(table[n] == j, p=p, q=q, n=n, kernel=table[n], enumeration=j):
            break
        s.check(j == -torus.jump_torus(params, pq - n), p=p, q=q, n=n, law="antisymmetry")
        if n % p and n % q:
            a, b = torus.lattice_count(params, n), torus.lattice_count(params, pq + n)
            s.check(a <= 1 and a + b == 1, p=p, q=q, n=n, law="uniqueness", L_n=a, L_pq_n=b)
            s.check(intro[n] == j, p=p, q=q, n=n, law="intro_sign", intro=intro[n], jump=j)

    # partial sums vs independent b-sign oracle
    s = res.suite("introplot")
    acc = 0
    for n, value in enumerate(torus.partial_sum_series(params), start=1):
        if n % p and n % q:
            a = next(a for a in range(1, q) if (n - a * p) % q == 0)
            acc += 1 if (n - a * p) // q > 0 else -1
        if not s.check(value == acc, p=p, q=q, n=n, series=value, oracle=acc):
            break

    # |S| and Mordell closed form
    s = res.suite("mordell")
    members = torus.set_S_members(params)
    s.check(len(members) == (p - 1) * (q - 1) // 2, p=p, q=q, size=len(members))
    s.check(sum(members) == torus.mordell_sum(params), p=p, q=q, direct=sum(members),
            closed=_fmt(torus.mordell_sum(params)))

    # matrix signatures at sector midpoints vs 2 * cumulative jumps
    s = res.suite("matrix_vs_jumps")
    v = torus_seifert_matrix(params)
    pts = circle_breakpoints(params)
    for mid, expected in zip(sample_points(pts), profile.sector_values()):
        got = signature_at(v, mid, breakpoints=pts, precision_bits=precision_bits)
        if not s.check(got == expected, p=p, q=q, x=_fmt(mid), matrix=got, jumps=expected):
            break

    if p % 2 and q % 2:
        s = res.suite("hirzebruch")
        h = torus.hirzebruch_sigma_minus1(params)
        m = signature_at(v, Fraction(1, 2), breakpoints=pts, precision_bits=precision_bits)
        s.check(h == m, p=p, q=q, hirzebruch=h, matrix=m)

    if q <= ALEXANDER_MAX:
        s = res.suite("alexander")
        s.check(alexander_polynomial(v).equivalent(torus_alexander_closed(params)), p=p, q=q)
    return res


def check_slice(max_q: int) -> SuiteResult:
    s = SuiteResult()
    bound = max(4 * max_q, 1)
    for n in range(-bound, bound + 1):
        verdict = twist_verdict(n)
        s.check((verdict.verdict is Verdict.NO_OBSTRUCTION) == (n in (0, 2)), n=n, verdict=verdict.verdict.value)
    s.check(double_candidates(0) == [2], s_K="0/1")
    for num in range(-3 * bound, 3 * bound + 1):
        for den in (1, 2, 3):
            s_k = Fraction(num, den)
            if s_k:
                found = double_candidates(s_k)
                s.check(len(found) <= 1, s_K=_fmt(s_k), candidates=found)
    return s


def _task(args):
    return check_pair(*args)


def run(max_q: int, jobs: int = 1, precision_bits: int = DEFAULT_PRECISION_BITS,
        inject_fault: bool = False) -> dict:
    """Run every suite for coprime 2 <= p < q <= max_q; return the report record."""
    pairs = [(p, q) for q in range(3, max_q + 1) for p in range(2, q) if gcd(p, q) == 1]
    tasks = [(p, q, max_q, precision_bits, inject_fault and i == 0) for i, (p, q) in enumerate(pairs)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_task, tasks))
    else:
        results = [_task(t) for t in tasks]
    results.sort(key=lambda r: (r.q, r.p))

    merged = {name: SuiteResult() for name in SUITES}
    for r in results:
        for name, sr in r.suites.items():
            merged[name].checks += sr.checks
            if sr.counterexample is not None and merged[name].counterexample is None:
                merged[name].counterexample = sr.counterexample
    sl = check_slice(max_q)
    merged["slice"] = sl

    failure = None
    for name in SUITES:
        if merged[name].counterexample is not None:
            failure = {"suite": name, **merged[name].counterexample}
            break
    return {
        "schema": "ltsig.verify/1",
        "command": "verify",
        "max": max_q,
        "pairs": len(pairs),
        "suites": {name: {"checks": merged[name].checks, "passed": merged[name].counterexample is None}
                   for name in SUITES},
        "total_checks": sum(sr.checks for sr in merged.values()),
        "status": "pass" if failure is None else "fail",
        "counterexample": failure,
    }

"""Seeded randomized suites for the arithmetic laws that hold on
infinite carriers and cannot be checked by enumeration.

Every suite is deterministic in (seed, case count, workers): cases are
split into fixed chunks, each chunk gets its own Random seeded from the
suite seed and the chunk index, and failures are merged in chunk order.
Raising the worker count changes the wall time, never the report.
"""

import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .errors import FuzzyRangeOverflow
from .intervals import Flavor, NaturalInterval, interval, iv_max, iv_min
from .scalars import Mod, Q, Z, parse_domain

CHUNK = 1000


def run_chunked(total, case_fn, seed=0, workers=1, chunk=CHUNK):
    """case_fn(rng, case_index) -> None on pass, a failure dict otherwise."""
    n_chunks = (total + chunk - 1) // chunk

    def run(ci):
        rng = random.Random(seed * 1000003 + ci)
        out = []
        for k in range(ci * chunk, min(total, (ci + 1) * chunk)):
            bad = case_fn(rng, k)
            if bad is not None:
                out.append(bad)
        return out

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, range(n_chunks)))
    else:
        parts = [run(ci) for ci in range(n_chunks)]
    return [f for part in parts for f in part]


def _report(name, total, seed, failures, extra=None):
    out = {"suite": name, "cases": total, "seed": seed,
           "failures": len(failures), "ok": not failures}
    if failures:
        out["first_failures"] = failures[:5]
    if extra:
        out.update(extra)
    return out


def _rand_iv(d, rng, flavor=Flavor.CLOSED):
    return interval(d, d.random_scalar(rng), d.random_scalar(rng), flavor)


DECOMPOSITION_DOMAINS = ("Z", "Q", "Zn:12", "ZnI:7", "Zn+I:5", "F01")


def decomposition_suite(cases=100000, seed=0, workers=1,
                        domains=DECOMPOSITION_DOMAINS):
    """Interval arithmetic is the product structure Domain x Domain.

    For each sampled pair and every operation the domain supports
    (add, sub, mul, div, min, max), the endpoints of the interval result
    must equal the scalar results on the endpoints — and where addition
    is partial (F01) the interval must overflow exactly when a component
    does.
    """
    reports = []
    for spec in domains:
        d = parse_domain(spec)
        fuzzy = (d.kind == "FuzzyUnit")

        def case(rng, k, d=d, fuzzy=fuzzy):
            x = _rand_iv(d, rng)
            y = _rand_iv(d, rng)

            def mismatch(op, got, lo, hi):
                return {"domain": d.spec, "op": op, "x": str(x), "y": str(y),
                        "case": k, "got": str(got),
                        "expected": str(interval(d, lo, hi))}

            if fuzzy:
                try:
                    lo = d.add(x.lo, y.lo)
                    hi = d.add(x.hi, y.hi)
                    want = (lo, hi)
                except FuzzyRangeOverflow:
                    want = None
                try:
                    got = x + y
                except FuzzyRangeOverflow:
                    got = None
                if want is None or got is None:
                    if want is not None or got is not None:
                        return {"domain": d.spec, "op": "add", "x": str(x),
                                "y": str(y), "case": k,
                                "got": "overflow" if got is None else str(got),
                                "expected": "overflow" if want is None
                                else str(interval(d, *want))}
                elif (got.lo, got.hi) != want:
                    return mismatch("add", got, *want)
            else:
                got = x + y
                if (got.lo, got.hi) != (d.add(x.lo, y.lo), d.add(x.hi, y.hi)):
                    return mismatch("add", got, d.add(x.lo, y.lo),
                                    d.add(x.hi, y.hi))
                got = x - y
                if (got.lo, got.hi) != (d.sub(x.lo, y.lo), d.sub(x.hi, y.hi)):
                    return mismatch("sub", got, d.sub(x.lo, y.lo),
                                    d.sub(x.hi, y.hi))
            got = x * y
            if (got.lo, got.hi) != (d.mul(x.lo, y.lo), d.mul(x.hi, y.hi)):
                return mismatch("mul", got, d.mul(x.lo, y.lo),
                                d.mul(x.hi, y.hi))
            if d.inv(y.lo) is not None and d.inv(y.hi) is not None:
                got = x / y
                want = (d.div(x.lo, y.lo), d.div(x.hi, y.hi))
                if (got.lo, got.hi) != want:
                    return mismatch("div", got, *want)
            if d.ordered:
                got = iv_min(x, y)
                want = (min(x.lo, y.lo, key=_ordkey(d)),
                        min(x.hi, y.hi, key=_ordkey(d)))
                if (got.lo, got.hi) != want:
                    return mismatch("min", got, *want)
                got = iv_max(x, y)
                want = (max(x.lo, y.lo, key=_ordkey(d)),
                        max(x.hi, y.hi, key=_ordkey(d)))
                if (got.lo, got.hi) != want:
                    return mismatch("max", got, *want)
            return None

        failures = run_chunked(cases, case, seed=seed, workers=workers)
        ops = (["mul", "min", "max", "add"] if fuzzy else
               (["add", "sub", "mul", "div", "min", "max"] if d.ordered
                else ["add", "sub", "mul", "div"]))
        reports.append(_report("decomposition", cases, seed, failures,
                               {"domain": d.spec, "ops": ops}))
    return {"suite": "decomposition", "seed": seed,
            "ok": all(r["ok"] for r in reports),
            "domains": reports}


def _ordkey(d):
    class K:
        __slots__ = ("v",)

        def __init__(self, v):
            self.v = v

        def __lt__(self, other):
            return d.lt(self.v, other.v)

    return K


def modmap_suite(n, pairs=10000, seed=0, workers=1):
    """The componentwise mod-n map N(Z) -> N(Zn) preserves add, sub and
    mul, and its kernel is N(nZ): multiples of n map to zero and nothing
    sampled outside nZ x nZ does."""
    dn = Mod(n)

    def phi(x):
        return interval(dn, x.lo % n, x.hi % n)

    def case(rng, k):
        x = _rand_iv(Z, rng)
        y = _rand_iv(Z, rng)
        for op, f in (("add", lambda: (x + y, phi(x) + phi(y))),
                      ("sub", lambda: (x - y, phi(x) - phi(y))),
                      ("mul", lambda: (x * y, phi(x) * phi(y)))):
            amb, img = f()
            if phi(amb) != img:
                return {"op": op, "x": str(x), "y": str(y), "case": k,
                        "phi(x op y)": str(phi(amb)),
                        "phi(x) op phi(y)": str(img)}
        a, b = rng.randrange(-30, 31), rng.randrange(-30, 31)
        kern = interval(Z, n * a, n * b)
        if phi(kern) != interval(dn, 0, 0):
            return {"op": "kernel", "x": str(kern), "case": k,
                    "expected": "[0,0]"}
        if (x.lo % n, x.hi % n) != (0, 0) and phi(x) == interval(dn, 0, 0):
            return {"op": "kernel-only", "x": str(x), "case": k}
        return None

    failures = run_chunked(pairs, case, seed=seed, workers=workers)
    return _report("modmap", pairs, seed, failures,
                   {"modulus": n, "kernel": f"N({n}Z)"})


def _scalar_matmul(d, a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = d.zero
            for k in range(inner):
                acc = d.add(acc, d.mul(a[i][k], b[k][j]))
            row.append(acc)
        out.append(row)
    return out


def matmul_decompose_suite(cases=1000, seed=0, workers=1,
                           domains=("Zn:7", "Q"), size=3):
    """Interval matrix products decompose into two scalar matrix
    products: lo(AB) = lo(A)lo(B) and hi(AB) = hi(A)hi(B)."""
    from .matrices import IntervalMatrix

    reports = []
    for spec in domains:
        d = parse_domain(spec)

        def case(rng, k, d=d):
            ents_a = [_rand_iv(d, rng) for _ in range(size * size)]
            ents_b = [_rand_iv(d, rng) for _ in range(size * size)]
            a = IntervalMatrix(size, size, ents_a, d, Flavor.CLOSED)
            b = IntervalMatrix(size, size, ents_b, d, Flavor.CLOSED)
            lo, hi = (a @ b).decompose()
            alo, ahi = a.decompose()
            blo, bhi = b.decompose()
            if lo != _scalar_matmul(d, alo, blo):
                return {"domain": d.spec, "case": k, "side": "lo",
                        "a": str(a), "b": str(b)}
            if hi != _scalar_matmul(d, ahi, bhi):
                return {"domain": d.spec, "case": k, "side": "hi",
                        "a": str(a), "b": str(b)}
            return None

        failures = run_chunked(cases, case, seed=seed, workers=workers)
        reports.append(_report("matmul-decompose", cases, seed, failures,
                               {"domain": d.spec, "shape": [size, size]}))
    return {"suite": "matmul-decompose", "seed": seed,
            "ok": all(r["ok"] for r in reports), "domains": reports}


def _scalar_polymul(d, a, b, cyclic):
    if not a or not b:
        return ()
    width = len(a) + len(b) - 1
    if cyclic is not None:
        width = min(width, cyclic)
    out = [d.zero] * width
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            k = i + j
            if cyclic is not None:
                k %= cyclic
            out[k] = d.add(out[k], d.mul(ai, bj))
    while out and out[-1] == d.zero:
        out.pop()
    return tuple(out)


def poly_decompose_suite(cases=1000, seed=0, workers=1,
                         domains=("Zn:6", "Q"), cyclic=None, max_terms=5):
    """Interval polynomial products decompose into two scalar polynomial
    convolutions (with the same exponent folding when cyclic)."""
    from .polys import IntervalPoly

    reports = []
    for spec in domains:
        d = parse_domain(spec)

        def case(rng, k, d=d):
            na = rng.randrange(1, max_terms + 1)
            nb = rng.randrange(1, max_terms + 1)
            p = IntervalPoly(d, Flavor.CLOSED,
                             [_rand_iv(d, rng) for _ in range(na)], cyclic)
            q = IntervalPoly(d, Flavor.CLOSED,
                             [_rand_iv(d, rng) for _ in range(nb)], cyclic)
            lo, hi = (p * q).decompose()
            plo, phi_ = p.decompose()
            qlo, qhi = q.decompose()
            if lo != _scalar_polymul(d, plo, qlo, cyclic):
                return {"domain": d.spec, "case": k, "side": "lo",
                        "p": str(p), "q": str(q)}
            if hi != _scalar_polymul(d, phi_, qhi, cyclic):
                return {"domain": d.spec, "case": k, "side": "hi",
                        "p": str(p), "q": str(q)}
            return None

        failures = run_chunked(cases, case, seed=seed, workers=workers)
        reports.append(_report("poly-decompose", cases, seed, failures,
                               {"domain": d.spec, "cyclic": cyclic}))
    return {"suite": "poly-decompose", "seed": seed,
            "ok": all(r["ok"] for r in reports), "domains": reports}


def strictness_suite(cases=20000, seed=0, workers=1):
    """Over nonnegative integers no two nonzero intervals sum to zero,
    so N(Z>=0) is a strict semiring."""
    from .scalars import NONNEG

    d = NONNEG
    z = interval(d, 0, 0)

    def case(rng, k):
        if k % 13 == 0:
            x = z
        else:
            x = _rand_iv(d, rng)
        y = _rand_iv(d, rng)
        s = x + y
        if s == z and not (x == z and y == z):
            return {"x": str(x), "y": str(y), "case": k, "sum": str(s)}
        return None

    failures = run_chunked(cases, case, seed=seed, workers=workers)
    return _report("strict-semiring", cases, seed, failures,
                   {"domain": d.spec})

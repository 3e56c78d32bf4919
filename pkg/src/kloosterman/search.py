"""Random search for a Kloosterman zero and the halving-vs-multiplication benchmark."""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .ec2 import Curve2
from .ec3 import Curve3
from .errors import Exhausted, UnsupportedDegree

BATCH = 64
_U64 = (1 << 64) - 1


def curve_for(field, a):
    return Curve2(field, a) if field.p == 2 else Curve3(field, a)


def draw_element(field, seed, worker, trial):
    """The nonzero element tested at ``trial`` by ``worker``.

    Each (worker, trial) pair owns a disjoint block of a Philox stream keyed
    by seed ^ worker, so draws do not depend on scheduling.
    """
    bitgen = np.random.Philox(key=(seed ^ worker) & _U64, counter=[0, trial, 0, 0])
    rng = np.random.Generator(bitgen)
    zero = field.from_int(0) if field.p == 3 else 0
    while True:
        a = field.random_element(rng)
        if a != zero:
            return a


@dataclass(frozen=True)
class SearchHit:
    a: object
    trial: int          # global index: local_trial * workers + worker
    h: int
    generator: tuple
    verified: bool


def verify_generator(curve, G):
    """[p^n]G = O and [p^(n-1)]G != O, by plain double-and-add."""
    n, p = curve.field.n, curve.field.p
    return curve.mul(p ** n, G) is None and curve.mul(p ** (n - 1), G) is not None


def _scan(args):
    field, seed, worker, workers, start, stop = args
    for j in range(start, stop):
        a = draw_element(field, seed, worker, j)
        res = curve_for(field, a).sylow()
        if res.h == field.n:
            return (j * workers + worker, a, res)
    return None


def search_zero(field, seed=0, workers=1, max_trials=10 ** 6):
    """Test random elements until a zero is found; returns the lowest-index hit."""
    if field.n < 2:
        raise UnsupportedDegree("search needs n >= 2")
    workers = max(1, workers)
    per_worker = -(-max_trials // workers)
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for start in range(0, per_worker, BATCH):
            stop = min(start + BATCH, per_worker)
            jobs = []
            for w in range(workers):
                # trim the final round so at most max_trials elements are tested
                last = min(stop, -(-(max_trials - w) // workers))
                jobs.append((field, seed, w, workers, start, max(start, last)))
            found = list(pool.map(_scan, jobs)) if pool else [_scan(j) for j in jobs]
            hits = [f for f in found if f is not None]
            if hits:
                idx, a, res = min(hits, key=lambda f: f[0])
                curve = curve_for(field, a)
                return SearchHit(a, idx, res.h, res.generator, verify_generator(curve, res.generator))
    finally:
        if pool:
            pool.shutdown()
    raise Exhausted(max_trials)


def run_bench(field, samples, seed=0):
    """Mean per-element cost of the Sylow test against the random-point test.

    The random-point test is timed twice: always multiplying, and with a
    trace pre-check that rejects elements whose trace already rules out a zero.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    n, p = field.n, field.p
    elems = [draw_element(field, seed, 0, j) for j in range(samples)]
    curves = [curve_for(field, a) for a in elems]
    offset = 2 if p == 2 else 1

    t0 = time.perf_counter()
    results = [c.sylow() for c in curves]
    t_sylow = time.perf_counter() - t0

    t0 = time.perf_counter()
    for j, c in enumerate(curves):
        c.lisonek_test(rng_seed=(seed, j))
    t_full = time.perf_counter() - t0

    t0 = time.perf_counter()
    for j, c in enumerate(curves):
        # Tr(a) != 0 caps the height at the seed level, below n
        if field.trace(c.a) == 0 or n <= offset:
            c.lisonek_test(rng_seed=(seed, j))
    t_pre = time.perf_counter() - t0

    hs = [r.h for r in results]
    return {
        "p": p,
        "n": n,
        "samples": samples,
        "zeros": sum(1 for h in hs if h == n),
        "mean_h": float(np.mean(hs)),
        "mean_iterations": float(np.mean(hs)) - offset,
        "sylow_mean_s": t_sylow / samples,
        "lisonek_mean_s": t_full / samples,
        "lisonek_precheck_mean_s": t_pre / samples,
    }

"""Exhaustive divisibility tables and Sylow-height statistics."""

import csv
import io
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .context import setup
from .ec2 import Curve2
from .ec3 import Curve3
from .errors import DegreeTooLarge

EXHAUSTIVE_CAP = {2: 24, 3: 13}


@dataclass(frozen=True)
class DivisibilityRow:
    """counts[k-1] = #{a != 0 : p^k divides #E(a)} for k = 1..n."""

    p: int
    n: int
    counts: tuple
    histogram: dict = field(default_factory=dict, compare=False)

    def count(self, k):
        """#{a : p^k | #E(a)} for any k >= 1, without the k <= n clamp."""
        return sum(c for h, c in self.histogram.items() if h >= k)


def curve_class(p):
    return Curve2 if p == 2 else Curve3


def _heights_chunk(args):
    p, n, start, stop = args
    F = setup(p, n)
    C = curve_class(p)
    out = []
    if p == 2:
        for a in range(start, stop):
            out.append(C(F, a).sylow().h)
    else:
        for v in range(start, stop):
            out.append(C(F, F.from_int(v)).sylow().h)
    return out


def heights(p, n, workers=1):
    """Sylow heights h(a) for a = 1 .. p^n - 1 in integer-encoding order."""
    check_cap(p, n)
    total = p ** n
    if workers <= 1 or total < 4096:
        return _heights_chunk((p, n, 1, total))
    step = -(-(total - 1) // (workers * 4))
    jobs = [(p, n, s, min(s + step, total)) for s in range(1, total, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return [h for part in pool.map(_heights_chunk, jobs) for h in part]


def check_cap(p, n):
    if p not in EXHAUSTIVE_CAP:
        raise ValueError("p must be 2 or 3")
    if n < 1:
        raise ValueError("n must be positive")
    if n > EXHAUSTIVE_CAP[p]:
        raise DegreeTooLarge(f"exhaustive scan over F({p}^{n}) exceeds the cap n <= {EXHAUSTIVE_CAP[p]}")


def divisibility_table(p, n, workers=1):
    hist = Counter(heights(p, n, workers))
    counts = tuple(sum(c for h, c in hist.items() if h >= k) for k in range(1, n + 1))
    return DivisibilityRow(p, n, counts, dict(hist))


def column4_closed_form(n):
    """(2^n - (-1+i)^n - (-1-i)^n) / 4, in exact Gaussian-integer arithmetic."""
    re, im = 1, 0
    for _ in range(n):
        re, im = -re - im, re - im   # multiply by (-1 + i)
    # (-1-i)^n is the conjugate, so the two powers sum to 2 re
    num = 2 ** n - 2 * re
    assert num % 4 == 0
    return num // 4


def zero_count(p, n, workers=1):
    """#{a != 0 : K(a) = 0}."""
    row = divisibility_table(p, n, workers)
    return zeros_from_row(row)


def zeros_from_row(row):
    p, n = row.p, row.n
    if n == 1:
        # F_2 has none; over F_3 the height cannot separate #E = 3 from 6
        if p == 2:
            return 0
        F = setup(3, 1)
        return sum(1 for a in (1, 2) if Curve3(F, F.from_int(a)).is_zero())
    return row.histogram.get(n, 0)


def height_stats(p, n, sample_size=None, rng_seed=0, exhaustive=False, workers=1):
    """Mean and variance of h over a.

    Exhaustive mode returns exact Fractions (population variance); sampling
    mode draws ``sample_size`` uniform nonzero a and returns floats (sample
    variance).
    """
    if exhaustive:
        hs = heights(p, n, workers)
        N = len(hs)
        mean = Fraction(sum(hs), N)
        var = Fraction(sum(h * h for h in hs), N) - mean * mean
        return mean, var
    if sample_size is None or sample_size < 1:
        raise ValueError("sample_size must be >= 1 unless exhaustive")
    hs = sampled_heights(p, n, sample_size, rng_seed)
    return float(np.mean(hs)), float(np.var(hs, ddof=1))


def sampled_heights(p, n, sample_size, rng_seed=0):
    F = setup(p, n)
    C = curve_class(p)
    rng = np.random.default_rng(rng_seed)
    zero = F.from_int(0) if p == 3 else 0
    hs = []
    while len(hs) < sample_size:
        a = F.random_element(rng)
        if a == zero:
            continue
        hs.append(C(F, a).sylow().h)
    return hs


# -- serialisation


def rows_to_records(rows):
    return [
        {"p": row.p, "n": row.n, "k": k, "count": c}
        for row in rows
        for k, c in enumerate(row.counts, start=1)
    ]


def to_csv(rows):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["p", "n", "k", "count"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows_to_records(rows))
    return buf.getvalue()


def to_json(rows):
    return json.dumps(rows_to_records(rows), indent=1) + "\n"

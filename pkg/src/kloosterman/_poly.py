"""Candidate enumeration for sparse irreducible moduli.

Candidates are monic polynomials of degree n over F_p, produced in order of
increasing weight (number of nonzero coefficients) and, within one weight,
increasing integer value when the coefficient vector is read in base p.
Each candidate is a dict {exponent: coefficient}.
"""

from itertools import count


def _lower_terms(k, limit, p):
    # k terms with distinct exponents < limit, always including exponent 0,
    # yielded in increasing base-p value
    if k == 1:
        for c in range(1, p):
            yield {0: c}
        return
    for e in range(k - 1, limit):
        for c in range(1, p):
            for rest in _lower_terms(k - 1, e, p):
                terms = dict(rest)
                terms[e] = c
                yield terms


def sparse_candidates(n, p):
    """Yield monic degree-n polynomials by (weight, value)."""
    if n == 1:
        # t itself is irreducible and has weight 1
        yield {1: 1}
    for weight in count(2):
        if weight > n + 1:
            return
        for lower in _lower_terms(weight - 1, n, p):
            terms = dict(lower)
            terms[n] = 1
            yield terms


def has_root_in_prime_field(terms, p):
    return any(sum(c * pow(x, e, p) for e, c in terms.items()) % p == 0 for x in range(p))


def prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out

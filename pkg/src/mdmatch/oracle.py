"""Brute-force reference implementations.

Everything here is deliberately slow and deliberately independent of the
production filter and verifier: substrings are compared by direct slicing,
prefix feasibility is a plain forward DP with explicit factor-length loops,
and no state is shared with the fast path.  These functions are the ground
truth the fast path is tested against.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .core import Occurrence, SearchParams, maximal_params, normalize_params


def _check_pair(p: Sequence, w: Sequence) -> int:
    if len(p) != len(w):
        raise ValueError("unequal lengths")
    if len(p) == 0:
        raise ValueError("empty pattern")
    return len(p)


def oracle_match(p: Sequence, w: Sequence, params: SearchParams | None = None) -> bool:
    """Decide whether w decomposes into identity symbols, swapped adjacent
    equal-length factor pairs (each half at most alpha long) and reversed
    factors (at most beta long) of p."""
    m = _check_pair(p, w)
    params = normalize_params(params or maximal_params(m), m)
    alpha, beta = params.alpha, params.beta
    # Every operation permutes symbols in place, so a mismatched multiset
    # can never match.
    if Counter(p) != Counter(w):
        return False
    ok = [False] * m
    for i in range(m):
        if p[i] == w[i] and (i == 0 or ok[i - 1]):
            ok[i] = True
            continue
        hit = False
        for k in range(1, min(alpha, (i + 1) // 2) + 1):
            if not (i - 2 * k < 0 or ok[i - 2 * k]):
                continue
            if p[i - k + 1:i + 1] == w[i - 2 * k + 1:i - k + 1] and \
               p[i - 2 * k + 1:i - k + 1] == w[i - k + 1:i + 1]:
                hit = True
                break
        if not hit:
            for k in range(2, min(beta, i + 1) + 1):
                if not (i - k < 0 or ok[i - k]):
                    continue
                if p[i - k + 1:i + 1] == w[i - k + 1:i + 1][::-1]:
                    hit = True
                    break
        ok[i] = hit
    return ok[m - 1]


def md_distance(p: Sequence, w: Sequence, params: SearchParams | None = None) -> float:
    """Minimum number of unit-cost operations turning p into w, or math.inf.

    Identity symbols are free; every translocation or inversion block costs 1.
    """
    m = _check_pair(p, w)
    params = normalize_params(params or maximal_params(m), m)
    alpha, beta = params.alpha, params.beta
    if Counter(p) != Counter(w):
        return math.inf
    inf = math.inf
    dist: list[float] = [inf] * m
    for i in range(m):
        best = inf
        if p[i] == w[i]:
            best = dist[i - 1] if i else 0.0
        for k in range(1, min(alpha, (i + 1) // 2) + 1):
            prev = dist[i - 2 * k] if i - 2 * k >= 0 else 0.0
            if prev + 1 >= best:
                continue
            if p[i - k + 1:i + 1] == w[i - 2 * k + 1:i - k + 1] and \
               p[i - 2 * k + 1:i - k + 1] == w[i - k + 1:i + 1]:
                best = prev + 1
        for k in range(2, min(beta, i + 1) + 1):
            prev = dist[i - k] if i - k >= 0 else 0.0
            if prev + 1 >= best:
                continue
            if p[i - k + 1:i + 1] == w[i - k + 1:i + 1][::-1]:
                best = prev + 1
        dist[i] = best
    d = dist[m - 1]
    return int(d) if d != inf else inf


def naive_search(p: Sequence, t: Sequence, params: SearchParams | None = None) -> list[Occurrence]:
    """Run the brute-force match decision at every text position.

    Ground truth for the filtered search and the slowest possible baseline.
    """
    m, n = len(p), len(t)
    if m == 0:
        raise ValueError("empty pattern")
    if m > n:
        return []
    params = normalize_params(params or maximal_params(m), m)
    return [Occurrence(s) for s in range(n - m + 1)
            if oracle_match(p, t[s:s + m], params)]


def permutation_probability(occ: Mapping | Iterable[int], m: int, sigma: int) -> float:
    """Probability that a uniform random length-m string over sigma symbols is
    a permutation of a string with the given per-symbol occurrence counts.

    Multinomial coefficient over sigma^m, evaluated in log space; small m
    falls back to exact rational arithmetic.
    """
    if sigma < 1:
        raise ValueError("sigma must be >= 1")
    counts = list(occ.values()) if isinstance(occ, Mapping) else list(occ)
    if any(c < 0 for c in counts):
        raise ValueError("negative occurrence count")
    if sum(counts) != m:
        raise ValueError("occurrence counts do not sum to pattern length")
    if m <= 20:
        num = Fraction(math.factorial(m), sigma ** m)
        for c in counts:
            num /= math.factorial(c)
        return float(num)
    log_p = math.lgamma(m + 1) - m * math.log(sigma)
    for c in counts:
        log_p -= math.lgamma(c + 1)
    return math.exp(log_p)

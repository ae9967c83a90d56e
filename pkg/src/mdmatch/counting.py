"""Counting filter over a sliding window.

The filter keeps, per symbol code c, the signed count
g[c] = occ_pattern(c) - occ_window(c) and the scalar
delta = sum_c |g[c]|.  delta is zero exactly when the current window is a
permutation of the pattern, which is a necessary condition for a match
under translocations and inversions.  Shifting the window by one position
updates delta in constant time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np


@dataclass
class CountState:
    """Signed per-code histogram g and its absolute sum delta for one window."""

    g: list[int]
    delta: int
    window_start: int

    def recompute_delta(self) -> int:
        """delta from scratch; used to cross-check the rolling update."""
        return sum(abs(v) for v in self.g)


def _as_code_list(seq) -> list[int]:
    if isinstance(seq, np.ndarray):
        return seq.tolist()
    return list(seq)


def init_counts(pattern: Sequence[int], text: Sequence[int], sigma: int | None = None) -> CountState:
    """Histogram state for the window starting at text position 0."""
    m = len(pattern)
    if m == 0:
        raise ValueError("empty pattern")
    if m > len(text):
        raise ValueError("pattern longer than text")
    p = _as_code_list(pattern)
    t = _as_code_list(text[:m])
    if sigma is None:
        sigma = max(max(p), max(t)) + 1
    g = [0] * sigma
    for c in p:
        g[c] += 1
    for c in t:
        g[c] -= 1
    return CountState(g=g, delta=sum(abs(v) for v in g), window_start=0)


def advance(state: CountState, outgoing: int, incoming: int) -> CountState:
    """Shift the window one position right: outgoing = t[s], incoming = t[s+m].

    Constant-time update of g and delta, in place.  When outgoing equals
    incoming nothing changes.
    """
    g = state.g
    state.delta -= abs(g[outgoing]) + abs(g[incoming])
    g[outgoing] += 1
    g[incoming] -= 1
    state.delta += abs(g[outgoing]) + abs(g[incoming])
    state.window_start += 1
    return state


def rolling_deltas(pattern: Sequence[int], text: Sequence[int],
                   sigma: int | None = None) -> Iterator[tuple[int, int]]:
    """Yield (position, delta) for every window, via the rolling update."""
    m, n = len(pattern), len(text)
    if m == 0:
        raise ValueError("empty pattern")
    if m > n:
        return
    t = _as_code_list(text)
    state = init_counts(pattern, t, sigma)
    yield 0, state.delta
    for s in range(n - m):
        advance(state, t[s], t[s + m])
        yield s + 1, state.delta


def scan_candidates(pattern: Sequence[int], text: Sequence[int],
                    sigma: int | None = None) -> np.ndarray:
    """All positions whose window is a permutation of the pattern, ascending.

    Vectorized: one cumulative-count pass per alphabet code, summing
    |occ_pattern(c) - occ_window(c)| into a per-position delta.  Output is
    identical to following the rolling update and collecting delta == 0
    positions.
    """
    p = np.asarray(pattern)
    t = np.asarray(text)
    m, n = len(p), len(t)
    if m == 0:
        raise ValueError("empty pattern")
    if m > n:
        return np.empty(0, dtype=np.int64)
    if sigma is None:
        sigma = int(max(p.max(), t.max())) + 1
    occ = np.bincount(p.astype(np.int64), minlength=sigma)
    delta = np.zeros(n - m + 1, dtype=np.int32)
    cum = np.empty(n + 1, dtype=np.int32)
    cum[0] = 0
    win = np.empty(n - m + 1, dtype=np.int32)
    for c in range(sigma):
        np.cumsum(t == c, dtype=np.int32, out=cum[1:])
        np.subtract(cum[m:], cum[:-m], out=win)
        np.subtract(win, np.int32(occ[c]), out=win)
        np.abs(win, out=win)
        delta += win
    return np.nonzero(delta == 0)[0]

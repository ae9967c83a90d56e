"""Filter-and-verify search: candidate positions from the counting filter,
confirmed by the banded verifier.  Includes a verify-everywhere baseline for
benchmarking and a chunked parallel mode."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .core import (
    Alphabet,
    Occurrence,
    SearchParams,
    build_alphabet,
    maximal_params,
    normalize_params,
)
from .counting import scan_candidates
from .verify import VerifierWorkspace, _verify_rows_np, _verify_rows_py, verify_with_witness


@dataclass(frozen=True)
class SearchStats:
    candidates: int
    matches: int
    positions_scanned: int

    @property
    def candidate_density(self) -> float:
        return self.candidates / self.positions_scanned if self.positions_scanned else 0.0


class Matcher:
    """Searches one text repeatedly; the text is encoded once.

    The alphabet grows on demand when a pattern brings new symbols
    (existing codes stay stable, so the encoded text is reused).
    """

    def __init__(self, text: str):
        self.text = text
        self.alphabet = build_alphabet([text]) if text else None
        self._t_arr = self.alphabet.encode_sequence(text) if text else np.empty(0, dtype=np.uint8)

    def _encode_pattern(self, pattern: str) -> np.ndarray:
        if self.alphabet is None:
            self.alphabet = build_alphabet([pattern])
            self._t_arr = self.alphabet.encode_sequence(self.text)
            return self.alphabet.encode_sequence(pattern)
        known = self.alphabet._codes
        extra = "".join(dict.fromkeys(c for c in pattern if c not in known))
        if extra:
            self.alphabet = Alphabet(self.alphabet.symbols + extra)
        return self.alphabet.encode_sequence(pattern)

    def _prep(self, pattern: str, params: SearchParams | None):
        m = len(pattern)
        if m == 0:
            raise ValueError("empty pattern")
        params = normalize_params(params or maximal_params(m), m)
        p_arr = self._encode_pattern(pattern)
        return m, params, p_arr

    def _verify_at(self, p_arr, p_list, s: int, m: int, params: SearchParams,
                   ws: VerifierWorkspace) -> bool:
        if ws.use_numpy:
            return _verify_rows_np(p_list, p_arr, self._t_arr, s, m,
                                   params.alpha, params.beta, ws)
        w_list = self._t_arr[s:s + m].tolist()
        return _verify_rows_py(p_list, w_list, m, params.alpha, params.beta, ws)

    def iter_find(self, pattern: str, params: SearchParams | None = None,
                  with_witness: bool = False) -> Iterator[Occurrence]:
        """Yield occurrences in increasing position order (streaming)."""
        m, params, p_arr = self._prep(pattern, params)
        if m > len(self.text):
            return
        cands = scan_candidates(p_arr, self._t_arr, self.alphabet.size)
        ws = VerifierWorkspace(params.alpha, params.beta)
        p_list = p_arr.tolist()
        for s in cands.tolist():
            if self._verify_at(p_arr, p_list, s, m, params, ws):
                witness = verify_with_witness(pattern, self.text, s, params) if with_witness else None
                yield Occurrence(s, witness)

    def find(self, pattern: str, params: SearchParams | None = None,
             with_witness: bool = False) -> list[Occurrence]:
        return list(self.iter_find(pattern, params, with_witness))

    def scan_all(self, pattern: str, params: SearchParams | None = None) -> list[Occurrence]:
        """Baseline: run the banded verifier at every position, no filter."""
        m, params, p_arr = self._prep(pattern, params)
        n = len(self.text)
        if m > n:
            return []
        ws = VerifierWorkspace(params.alpha, params.beta)
        p_list = p_arr.tolist()
        return [Occurrence(s) for s in range(n - m + 1)
                if self._verify_at(p_arr, p_list, s, m, params, ws)]

    def stats(self, pattern: str, params: SearchParams | None = None) -> SearchStats:
        """Candidate and match counts for one scan of the text."""
        m, params, p_arr = self._prep(pattern, params)
        n = len(self.text)
        if m > n:
            return SearchStats(0, 0, 0)
        cands = scan_candidates(p_arr, self._t_arr, self.alphabet.size)
        ws = VerifierWorkspace(params.alpha, params.beta)
        p_list = p_arr.tolist()
        matches = sum(1 for s in cands.tolist()
                      if self._verify_at(p_arr, p_list, s, m, params, ws))
        return SearchStats(candidates=len(cands), matches=matches,
                           positions_scanned=n - m + 1)


def filtered_search(pattern: str, text: str, params: SearchParams | None = None,
                    with_witness: bool = False) -> list[Occurrence]:
    """All positions where the pattern matches the text window under the
    translocation/inversion bounds, in increasing order."""
    return Matcher(text).find(pattern, params, with_witness)


def iter_filtered_search(pattern: str, text: str,
                         params: SearchParams | None = None,
                         with_witness: bool = False) -> Iterator[Occurrence]:
    return Matcher(text).iter_find(pattern, params, with_witness)


def scan_all_search(pattern: str, text: str,
                    params: SearchParams | None = None) -> list[Occurrence]:
    """Same result set as filtered_search, but verifying every position."""
    return Matcher(text).scan_all(pattern, params)


def search_stats(pattern: str, text: str,
                 params: SearchParams | None = None) -> SearchStats:
    return Matcher(text).stats(pattern, params)


def parallel_filtered_search(pattern: str, text: str,
                             params: SearchParams | None = None,
                             threads: int = 2) -> list[Occurrence]:
    """Chunked parallel variant of filtered_search with identical output.

    The start-position range is partitioned; each chunk scans its slice of
    the text (extended by m-1 symbols so windows never cross a seam) with an
    independent filter state and verifier workspace.
    """
    m, n = len(pattern), len(text)
    if m == 0:
        raise ValueError("empty pattern")
    if m > n:
        return []
    if threads < 1:
        raise ValueError("threads must be >= 1")
    params = normalize_params(params or maximal_params(m), m)
    matcher = Matcher(text)
    p_arr = matcher._encode_pattern(pattern)
    p_list = p_arr.tolist()
    t_arr = matcher._t_arr
    sigma = matcher.alphabet.size
    total = n - m + 1
    bounds = np.linspace(0, total, threads + 1, dtype=np.int64)

    def run_chunk(lo: int, hi: int) -> list[int]:
        if lo >= hi:
            return []
        ws = VerifierWorkspace(params.alpha, params.beta)
        chunk = t_arr[lo:hi - 1 + m]
        cands = scan_candidates(p_arr, chunk, sigma)
        out = []
        for rel in cands.tolist():
            s = lo + rel
            if matcher._verify_at(p_arr, p_list, s, m, params, ws):
                out.append(s)
        return out

    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda ab: run_chunk(*ab),
                              zip(bounds[:-1].tolist(), bounds[1:].tolist())))
    positions = sorted(set(s for part in parts for s in part))
    return [Occurrence(s) for s in positions]

"""Shared domain types: alphabets, search parameters, matches and their witnesses.

A match witness is a list of blocks that, replayed left to right on the
pattern, reconstructs the matched text window.  Three block kinds exist:

* identity       -- one symbol copied unchanged,
* translocation  -- two adjacent factors of equal length k swapped (ZW -> WZ),
* inversion      -- one factor of length k reversed (Z -> reverse(Z)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

IDENTITY = "identity"
TRANSLOCATION = "translocation"
INVERSION = "inversion"


@dataclass(frozen=True)
class SearchParams:
    """Bounds on edit operations: alpha for translocated factor halves, beta for inversions.

    alpha = 0 disables translocations entirely; beta <= 1 disables inversions
    (reversing a single symbol is the identity).
    """

    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("alpha and beta must be nonnegative")


def maximal_params(m: int) -> SearchParams:
    """Most permissive parameters for a pattern of length m."""
    if m < 1:
        raise ValueError("empty pattern")
    return SearchParams(alpha=m // 2, beta=m)


def normalize_params(params: SearchParams, m: int) -> SearchParams:
    """Clamp parameters to their definitional bounds for a length-m pattern.

    alpha never exceeds floor(m/2) (each translocated half must fit twice),
    beta never exceeds m.  Idempotent.
    """
    if m < 1:
        raise ValueError("empty pattern")
    alpha = min(params.alpha, m // 2)
    beta = min(params.beta, m)
    if alpha == params.alpha and beta == params.beta:
        return params
    return SearchParams(alpha=alpha, beta=beta)


class Alphabet:
    """Bijective mapping between input symbols and dense codes 0..size-1.

    Codes are assigned in first-occurrence order, which keeps encodings
    deterministic across runs.
    """

    __slots__ = ("symbols", "_codes", "_lut")

    def __init__(self, symbols: str):
        if not symbols:
            raise ValueError("no symbols")
        self.symbols = symbols
        self._codes = {c: i for i, c in enumerate(symbols)}
        if len(self._codes) != len(symbols):
            raise ValueError("duplicate symbols")
        # Direct 256-entry table for byte-sized alphabets; -1 marks unregistered.
        self._lut = None
        if all(ord(c) < 256 for c in symbols) and len(symbols) <= 256:
            lut = np.full(256, -1, dtype=np.int16)
            for c, i in self._codes.items():
                lut[ord(c)] = i
            self._lut = lut

    @property
    def size(self) -> int:
        return len(self.symbols)

    def encode(self, symbol: str) -> int:
        try:
            return self._codes[symbol]
        except KeyError:
            raise ValueError(f"symbol {symbol!r} not in alphabet") from None

    def decode(self, code: int) -> str:
        if not 0 <= code < len(self.symbols):
            raise ValueError(f"code {code} out of range")
        return self.symbols[code]

    def encode_sequence(self, seq: str) -> np.ndarray:
        """Encode a symbol string to a dense uint8/int32 code array."""
        if self._lut is not None:
            try:
                raw = np.frombuffer(seq.encode("latin-1"), dtype=np.uint8)
            except UnicodeEncodeError:
                raw = None
            if raw is not None:
                codes = self._lut[raw]
                if codes.min(initial=0) < 0:
                    bad = seq[int(np.argmax(codes < 0))]
                    raise ValueError(f"symbol {bad!r} not in alphabet")
                if self.size <= 256:
                    return codes.astype(np.uint8)
                return codes.astype(np.int32)
        codes = self._codes
        try:
            out = [codes[c] for c in seq]
        except KeyError as exc:
            raise ValueError(f"symbol {exc.args[0]!r} not in alphabet") from None
        dtype = np.uint8 if self.size <= 256 else np.int32
        return np.array(out, dtype=dtype)

    def decode_sequence(self, codes: Iterable[int]) -> str:
        return "".join(self.symbols[c] for c in codes)

    def __repr__(self) -> str:
        return f"Alphabet({self.symbols!r})"


def build_alphabet(sequences: Iterable[str]) -> Alphabet:
    """Build an alphabet covering every symbol of the inputs, in first-occurrence order."""
    seen: dict[str, None] = {}
    for seq in sequences:
        seen.update(dict.fromkeys(seq))
    if not seen:
        raise ValueError("no symbols")
    return Alphabet("".join(seen))


@dataclass(frozen=True)
class Block:
    """One step of a witness decomposition.

    offset is the block start within the window; length is the factor
    length k.  An identity block spans one symbol (length is always 1), a
    translocation spans 2k symbols, an inversion spans k symbols.
    """

    kind: str
    offset: int
    length: int = 1

    @property
    def span(self) -> int:
        return 2 * self.length if self.kind == TRANSLOCATION else self.length

    def token(self) -> str:
        if self.kind == IDENTITY:
            return f"I@{self.offset}"
        tag = "T" if self.kind == TRANSLOCATION else "V"
        return f"{tag}@{self.offset}:{self.length}"


def apply_blocks(pattern: Sequence, blocks: Iterable[Block]) -> str:
    """Replay a block decomposition on the pattern, producing the text window.

    Blocks must be contiguous and cover the pattern exactly.
    """
    out: list = []
    pos = 0
    for b in blocks:
        if b.offset != pos:
            raise ValueError(f"blocks not contiguous at offset {pos}")
        k = b.length
        if b.kind == IDENTITY:
            out.append(pattern[pos])
            pos += 1
        elif b.kind == TRANSLOCATION:
            if k < 1:
                raise ValueError("translocation length must be >= 1")
            out.extend(pattern[pos + k:pos + 2 * k])
            out.extend(pattern[pos:pos + k])
            pos += 2 * k
        elif b.kind == INVERSION:
            if k < 1:
                raise ValueError("inversion length must be >= 1")
            out.extend(reversed(pattern[pos:pos + k]))
            pos += k
        else:
            raise ValueError(f"unknown block kind {b.kind!r}")
    if pos != len(pattern):
        raise ValueError("blocks do not cover the pattern")
    if isinstance(pattern, str):
        return "".join(out)
    return out  # type: ignore[return-value]


@dataclass(frozen=True)
class Occurrence:
    """A match of the pattern at a text position, optionally with its witness."""

    position: int
    witness: tuple[Block, ...] | None = None

    def __lt__(self, other: "Occurrence") -> bool:
        return self.position < other.position

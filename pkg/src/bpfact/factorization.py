"""Block-palindrome factorizations.

A factorization ``w = w_m ... w_1 w_0 w_1 ... w_m`` is stored as the outer
blocks listed outermost first (``w_m`` down to ``w_1``) plus the centre
``w_0``, which may be empty.  Blocks are plain slices of the source word, so
they compare by value against anything produced from the same word type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from bpfact.words import (
    Word,
    borders,
    longest_nonoverlapping_border,
    shortest_border,
)


class EmptyWordError(ValueError):
    """Raised when a factorization is requested for the empty word."""


@dataclass(frozen=True)
class BPFactorization:
    outer: tuple
    center: Word
    width: int = field(default=-1)

    def __post_init__(self):
        object.__setattr__(self, "outer", tuple(self.outer))
        if self.width < 0:
            object.__setattr__(self, "width", block_count(self.outer, self.center))

    @property
    def m(self) -> int:
        return len(self.outer)

    def blocks(self) -> list:
        """Every non-empty block, left to right."""
        mid = [self.center] if len(self.center) else []
        return [*self.outer, *mid, *reversed(self.outer)]

    def block(self, i: int) -> Word:
        """Block ``w_i`` counted from the centre (``w_0`` is the centre)."""
        if i == 0:
            return self.center
        return self.outer[self.m - i]

    def render(self, sep: str = ".", show: Callable = None) -> str:
        show = show or _show
        return sep.join(show(b) for b in self.blocks())


def _show(block) -> str:
    if isinstance(block, str):
        return block
    return "".join(str(s) for s in block)


def block_count(outer, center) -> int:
    return 2 * len(outer) + (1 if len(center) else 0)


def reconstruct(f: BPFactorization) -> Word:
    parts = f.blocks()
    if not parts:
        return f.center[:0]
    out = parts[0]
    for p in parts[1:]:
        out = out + p
    return out


def validate(f: BPFactorization, w: Word) -> bool:
    if any(len(b) == 0 for b in f.outer):
        return False
    if f.width != block_count(f.outer, f.center):
        return False
    return reconstruct(f) == w


def _peel(w: Word, choose: Callable[[Word], Optional[int]]) -> BPFactorization:
    if len(w) == 0:
        raise EmptyWordError("factorization of the empty word is undefined")
    outer = []
    lo, hi = 0, len(w)
    while hi > lo:
        mid = w[lo:hi]
        b = choose(mid)
        if b is None:
            break
        # a chosen border is never overlapping, so the centre strictly shrinks
        assert 2 * b <= hi - lo
        outer.append(mid[:b])
        lo += b
        hi -= b
    return BPFactorization(outer, w[lo:hi])


def largest_bpf(w: Word) -> BPFactorization:
    """Maximum-width factorization: repeatedly peel the shortest border."""
    return _peel(w, shortest_border)


def smallest_bpf(w: Word) -> BPFactorization:
    """Greedy factorization peeling the longest non-overlapping border each step."""
    return _peel(w, longest_nonoverlapping_border)


def all_bpfs(w: Word) -> list[BPFactorization]:
    """Every BP-factorization of ``w``.

    The one-block factorization comes first; the rest are ordered by
    decreasing outermost block length, recursing into the middle.
    """
    if len(w) == 0:
        raise EmptyWordError("factorization of the empty word is undefined")
    return [BPFactorization(outer, center) for outer, center in _all(w)]


def _all(w):
    n = len(w)
    yield (), w
    for b in borders(w):
        if 2 * b > n:
            continue
        head, mid = w[:b], w[b:n - b]
        if len(mid) == 0:
            yield (head,), mid
            continue
        for outer, center in _all(mid):
            yield (head, *outer), center


def coincide(w: Word) -> bool:
    return smallest_bpf(w) == largest_bpf(w)


def _central(f: BPFactorization, i: int, w: Word) -> Word:
    """The factor ``w_i ... w_0 ... w_i`` of ``w``."""
    skip = sum(len(b) for b in f.outer[: f.m - i])
    return w[skip:len(w) - skip]


def characterization_holds(w: Word, cube_centre: bool = False) -> bool:
    """Structural test for when the smallest and largest factorizations agree.

    Every outer block of the largest factorization must be the only border of
    its central factor, except that the second block from the centre may
    instead satisfy ``w_2 w_1 w_0 w_1 w_2 = w_0 w_1 w_0 w_1 w_0`` with ``w_0``
    the only border of ``w_0 w_1 w_0``.  Unbordered words pass vacuously.

    That statement misses words whose innermost three blocks are equal
    (``000``, ``01110``, ``010101``): there the factorizations agree but
    ``w_1 w_0 w_1`` has two borders.  ``cube_centre=True`` also accepts
    ``w_1 = w_0`` at the first level, which closes the gap.
    """
    f = largest_bpf(w)
    for i in range(1, f.m + 1):
        u = _central(f, i, w)
        if borders(u) == [len(f.block(i))]:
            continue
        if i == 2 and _square_centre_case(f, u):
            continue
        if i == 1 and cube_centre and f.block(1) == f.center:
            continue
        return False
    return True


def _square_centre_case(f: BPFactorization, u2) -> bool:
    w0, w1, w2 = f.block(0), f.block(1), f.block(2)
    if len(w0) == 0 or w2 != w0:
        return False
    if u2 != w0 + w1 + w0 + w1 + w0:
        return False
    inner = w0 + w1 + w0
    return borders(inner) == [len(w0)]

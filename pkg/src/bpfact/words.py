"""Words over a finite alphabet and their borders.

A word is any sliceable sequence of hashable symbols: in practice a tuple of
small non-negative ints, though plain ``str`` works just as well, which keeps
the tests readable.  Nothing in here maps text to symbols; that happens at the
CLI boundary.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import Optional

Word = Sequence  # tuple[int, ...] in the hot paths, str in tests


def as_word(symbols, k: Optional[int] = None) -> tuple[int, ...]:
    """Freeze ``symbols`` into a tuple, checking every id lies in ``range(k)``."""
    w = tuple(int(s) for s in symbols)
    for s in w:
        if s < 0 or (k is not None and s >= k):
            raise ValueError(f"symbol {s} outside alphabet of size {k}")
    return w


def border_array(w: Word) -> list[int]:
    """Failure function of ``w``, shifted by one.

    Entry ``i`` is the length of the longest border of ``w[:i]``; entry 0 is 0,
    so the result has ``len(w) + 1`` entries.
    """
    n = len(w)
    b = [0] * (n + 1)
    j = 0
    for i in range(1, n):
        while j and w[i] != w[j]:
            j = b[j]
        if w[i] == w[j]:
            j += 1
        b[i + 1] = j
    return b


def borders(w: Word) -> list[int]:
    """All border lengths of ``w``, longest first."""
    b = border_array(w)
    out = []
    j = b[len(w)]
    while j:
        out.append(j)
        j = b[j]
    return out


def shortest_border(w: Word) -> Optional[int]:
    chain = borders(w)
    return chain[-1] if chain else None


def longest_nonoverlapping_border(w: Word) -> Optional[int]:
    """Longest border ``b`` with ``2b <= len(w)``, or None when ``w`` is unbordered."""
    n = len(w)
    for b in borders(w):
        if 2 * b <= n:
            return b
    return None


def is_unbordered(w: Word) -> bool:
    # the empty word is deliberately excluded
    return len(w) >= 1 and not borders(w)


def has_unique_border(w: Word) -> bool:
    return len(borders(w)) == 1


def is_palindrome(w: Word) -> bool:
    return w == w[::-1]

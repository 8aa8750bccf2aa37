"""Exact counts, expectations and limits for block-palindrome statistics.

Counts are Python ints and ratios are ``fractions.Fraction``; conversion to
decimal happens only in :func:`to_decimal` at the output boundary.

The tables are grown bottom-up in ``n`` and shared per alphabet size.  Each
table is guarded by its own lock so concurrent callers see a row only after it
is complete.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Union

Number = Union[int, float, str, Decimal, Fraction]


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"alphabet size must be at least 2, got {k}")


class _GrowingTable:
    """Rows ``0..n`` built on demand; ``_row(n)`` may read rows below ``n``."""

    def __init__(self, k: int):
        self.k = k
        self.rows: list = []
        self._lock = threading.Lock()

    def upto(self, n: int) -> list:
        if n >= len(self.rows):
            with self._lock:
                while len(self.rows) <= n:
                    self.rows.append(self._row(len(self.rows)))
        return self.rows

    def _row(self, n: int):
        raise NotImplementedError


class _Unbordered(_GrowingTable):
    def _row(self, n: int) -> int:
        if n == 0:
            return 1
        u = self.rows
        if n % 2:
            return self.k * u[n - 1]
        return self.k * u[n - 1] - u[n // 2]


class _IB(_GrowingTable):
    """Row ``n`` is the list ``[IB(n, 0), ..., IB(n, n)]``."""

    def __init__(self, k: int):
        super().__init__(k)
        self.u = _unbordered_table(k)

    def _row(self, n: int) -> list:
        if n == 0:
            return [1]
        u = self.u.upto(n)
        rows = self.rows

        def ib(m, s):
            return rows[m][s] if s <= m else 0

        row = [0] * (n + 1)
        for t in range(1, n + 1):
            if n % 2 == 0 and t % 2 == 0:
                row[t] = sum(u[i] * ib(n - 2 * i, t - 2) for i in range(1, (n - t) // 2 + 2))
            elif n % 2 == 0:
                row[t] = sum(u[2 * i] * ib(n - 2 * i, t - 1) for i in range(1, (n - t + 1) // 2 + 1))
            elif t % 2:
                row[t] = sum(u[2 * i - 1] * ib(n - 2 * i + 1, t - 1) for i in range(1, (n - t) // 2 + 2))
        return row


class _UniqueBorder(_GrowingTable):
    """Row ``n`` is ``[B(n, 0), ..., B(n, n // 2)]`` with ``B(n, 0) = 0``."""

    def __init__(self, k: int):
        super().__init__(k)
        self.u = _unbordered_table(k)

    def _row(self, n: int) -> list:
        k, rows = self.k, self.rows
        u = self.u.upto(n)
        row = [0] * (n // 2 + 1)
        for t in range(1, n // 2 + 1):
            over = sum(rows[i][t] * k ** (n - 2 * i) for i in range(2 * t, n // 2 + 1))
            if (n + t) % 2 == 0:
                h = (n + t) // 2
                over += rows[h][t] if 2 * t <= h else 0
            row[t] = u[t] * k ** (n - 2 * t) - over
        return row


@lru_cache(maxsize=None)
def _unbordered_table(k: int) -> _Unbordered:
    return _Unbordered(k)


@lru_cache(maxsize=None)
def _ib_table(k: int) -> _IB:
    return _IB(k)


@lru_cache(maxsize=None)
def _ub_table(k: int) -> _UniqueBorder:
    return _UniqueBorder(k)


def unbordered_count(k: int, n: int) -> int:
    """Number of unbordered words of length ``n`` over ``k`` letters (1 for n = 0)."""
    _check_k(k)
    if n < 0:
        raise ValueError("n must be non-negative")
    return _unbordered_table(k).upto(n)[n]


def ib_count(k: int, n: int, t: int) -> int:
    """Number of length-``n`` words whose largest BP-factorization has width ``t``."""
    _check_k(k)
    if n < 0 or t < 0:
        raise ValueError("n and t must be non-negative")
    if t > n:
        return 0
    return _ib_table(k).upto(n)[n][t]


@dataclass(frozen=True)
class CountTable:
    k: int
    kind: str  # "unbordered" | "ib" | "unique_border"
    entries: dict

    def __getitem__(self, key):
        return self.entries[key]

    def rows(self) -> list[int]:
        return sorted({key[0] if isinstance(key, tuple) else key for key in self.entries})


def ib_table(k: int, n_range, t_range) -> CountTable:
    _check_k(k)
    return CountTable(k, "ib", {(n, t): ib_count(k, n, t) for n in n_range for t in t_range})


def unbordered_table(k: int, n_range) -> CountTable:
    _check_k(k)
    return CountTable(k, "unbordered", {n: unbordered_count(k, n) for n in n_range})


def unique_border_table(k: int, n_range, t_range) -> CountTable:
    """Cells with ``n <= t`` (outside the recurrence's domain) hold 0."""
    _check_k(k)
    entries = {}
    for n in n_range:
        for t in t_range:
            entries[n, t] = unique_border_count_t(k, n, t) if n > t >= 1 else 0
    return CountTable(k, "unique_border", entries)


def expected_width(k: int, n: int) -> Fraction:
    """Mean width of the largest BP-factorization of a uniform random length-``n`` word."""
    _check_k(k)
    if n < 1:
        raise ValueError("n must be at least 1")
    row = _ib_table(k).upto(n)[n]
    return Fraction(sum(t * c for t, c in enumerate(row)), k**n)


def unique_border_count_t(k: int, n: int, t: int) -> int:
    """Number of length-``n`` words whose only border has length ``t``."""
    _check_k(k)
    if t < 1 or n <= t:
        raise ValueError(f"need n > t >= 1, got n={n}, t={t}")
    if n < 2 * t:
        return 0
    return _ub_table(k).upto(n)[n][t]


def unique_border_count(k: int, n: int) -> int:
    _check_k(k)
    if n < 2:
        raise ValueError("n must be at least 2")
    return sum(_ub_table(k).upto(n)[n])


def unique_border_probability(k: int, n: int) -> Fraction:
    return Fraction(unique_border_count(k, n), k**n)


# -- limits -----------------------------------------------------------------


@dataclass(frozen=True)
class LimitEstimate:
    value: str
    n_used: int
    last_delta: Decimal
    converged: bool
    exact: Fraction  # E or P at n_used, unrounded


def to_decimal(x: Fraction, digits: int = 4) -> Decimal:
    """Round ``x`` half-even to ``digits`` places."""
    with localcontext() as ctx:
        ctx.prec = max(50, digits + len(str(abs(x.numerator) // x.denominator)) + 10)
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return d.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN)


def _delta_decimal(x: Fraction) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = 12
        return Decimal(x.numerator) / Decimal(x.denominator)


def _as_fraction(x: Number) -> Fraction:
    return Fraction(str(x)) if isinstance(x, float) else Fraction(x)


def _estimate(seq: Callable[[int], Fraction], start: int, tol: Number, n_cap: int, digits: int) -> LimitEstimate:
    """Advance ``n`` until same-parity differences for both parities drop below ``tol``.

    Odd lengths admit no even widths, so consecutive terms oscillate; only
    ``n`` vs ``n - 2`` and ``n - 1`` vs ``n - 3`` are compared.
    """
    tol = _as_fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if n_cap < start + 3:
        raise ValueError(f"n_cap must be at least {start + 3}")
    vals = {n: seq(n) for n in range(start, start + 3)}
    delta = None
    for n in range(start + 3, n_cap + 1):
        vals[n] = seq(n)
        delta = max(abs(vals[n] - vals[n - 2]), abs(vals[n - 1] - vals[n - 3]))
        vals.pop(n - 3)
        if delta < tol:
            break
    return LimitEstimate(
        value=str(to_decimal(vals[n], digits)),
        n_used=n,
        last_delta=_delta_decimal(delta),
        converged=delta < tol,
        exact=vals[n],
    )


def estimate_E_limit(k: int, tol: Number = "1e-4", n_cap: int = 400, digits: int = 4) -> LimitEstimate:
    _check_k(k)
    return _estimate(lambda n: expected_width(k, n), 1, tol, n_cap, digits)


def estimate_P_limit(k: int, tol: Number = "1e-5", n_cap: int = 256, digits: int = 4) -> LimitEstimate:
    _check_k(k)
    return _estimate(lambda n: unique_border_probability(k, n), 2, tol, n_cap, digits)


# -- extremal smallest factorizations ---------------------------------------

_BINARY_MIDDLES = ("", "0", "00", "010", "0110", "01010", "010110", "0110110")
_TERNARY_MIDDLES = ("", "0", "00", "010", "0110", "01010")


def max_smallest_width(k: int, n: int) -> int:
    """Largest possible width of a smallest BP-factorization of a length-``n`` word."""
    _check_k(k)
    if n < 0:
        raise ValueError("n must be non-negative")
    if k >= 3:
        return n
    l, i = divmod(n, 8)
    return 6 * l + min(i, 5)


def max_width_witness(k: int, n: int) -> tuple[int, ...]:
    """A length-``n`` word whose smallest BP-factorization attains :func:`max_smallest_width`."""
    _check_k(k)
    if n < 0:
        raise ValueError("n must be non-negative")
    if k == 2:
        l, i = divmod(n, 8)
        # with a middle of length >= 2 the suffix 1001 creates long borders; 0110 does not
        tail = "1001" if i < 2 else "0110"
        text = "0101" * l + _BINARY_MIDDLES[i] + tail * l
    else:
        l, i = divmod(n, 6)
        text = "012" * l + _TERNARY_MIDDLES[i] + "210" * l
    return tuple(int(c) for c in text)

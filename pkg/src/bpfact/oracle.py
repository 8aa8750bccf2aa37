"""Brute-force ground truth by exhaustive enumeration of all words.

Everything here is deliberately naive: borders come from direct
prefix/suffix comparison rather than the failure function, and the greedy
peels are re-implemented on top of that scan.  The fast library paths are
only ever compared *against* these results.

Sweeps can be split across processes by fixing a prefix of each word; all
aggregates are integer sums, so the answer does not depend on ``jobs``.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

DEFAULT_BUDGET = 2**24


class BudgetExceeded(RuntimeError):
    """The sweep would visit more words than the configured budget allows."""


@dataclass
class OracleConfig:
    budget: int = DEFAULT_BUDGET
    jobs: int = 1
    max_witnesses: int = 8


@dataclass
class VerificationReport:
    subject: str
    k: int
    n_max: int
    mismatches: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "k": self.k,
            "n_max": self.n_max,
            "passed": self.passed,
            "mismatches": [
                {"params": p, "expected": e, "actual": a} for p, e, a in self.mismatches
            ],
            "elapsed": round(self.elapsed, 3),
        }


def fmt_word(w) -> str:
    """Digits run together for k <= 10, comma-separated otherwise."""
    sep = "," if any(s > 9 for s in w) else ""
    return sep.join(map(str, w))


# -- naive word predicates ----------------------------------------------------


def naive_borders(w) -> list[int]:
    n = len(w)
    return [b for b in range(n - 1, 0, -1) if w[:b] == w[n - b:]]


def naive_peel_widths(w) -> tuple[int, int]:
    """Widths of the (largest, smallest) greedy factorizations via naive borders."""
    out = []
    for pick_shortest in (True, False):
        width, lo, hi = 0, 0, len(w)
        while hi > lo:
            bs = naive_borders(w[lo:hi])
            if not pick_shortest:
                bs = [b for b in bs if 2 * b <= hi - lo]
            if not bs:
                width += 1
                break
            b = min(bs) if pick_shortest else max(bs)
            width += 2
            lo, hi = lo + b, hi - b
        out.append(width)
    return out[0], out[1]


# -- enumeration ----------------------------------------------------------------


def _check(k: int, n: int, budget: int) -> None:
    if k < 2:
        raise ValueError(f"alphabet size must be at least 2, got {k}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if k**n > budget:
        raise BudgetExceeded(f"{k}^{n} = {k**n} words exceeds budget {budget}")


def for_each_word(k: int, n: int, visitor: Callable, budget: int = DEFAULT_BUDGET) -> None:
    """Call ``visitor`` on every length-``n`` word over ``range(k)`` in lexicographic order."""
    _check(k, n, budget)
    for w in itertools.product(range(k), repeat=n):
        visitor(w)


def _prefixes(k: int, n: int, jobs: int) -> list[tuple]:
    depth = 0
    while depth < n and k**depth < 4 * jobs:
        depth += 1
    return list(itertools.product(range(k), repeat=depth))


def _sweep(task: Callable, k: int, n: int, cfg: OracleConfig) -> Counter:
    """Sum ``task(k, n, prefix)`` over a partition of all words by prefix."""
    _check(k, n, cfg.budget)
    if cfg.jobs <= 1:
        return task(k, n, ())
    total = Counter()
    prefixes = _prefixes(k, n, cfg.jobs)
    with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        for part in pool.map(task, [k] * len(prefixes), [n] * len(prefixes), prefixes):
            total.update(part)
    return total


def _words(k, n, prefix):
    for tail in itertools.product(range(k), repeat=n - len(prefix)):
        yield prefix + tail


def _ib_task(k, n, prefix) -> Counter:
    c = Counter()
    for w in _words(k, n, prefix):
        c[naive_peel_widths(w)[0]] += 1
    return c


def _ub_task(k, n, prefix) -> Counter:
    c = Counter()
    for w in _words(k, n, prefix):
        bs = naive_borders(w)
        if len(bs) == 1:
            c[bs[0]] += 1
        elif not bs and n >= 1:
            c["unbordered"] += 1
    return c


def _smallest_task(k, n, prefix) -> Counter:
    c = Counter()
    for w in _words(k, n, prefix):
        c[naive_peel_widths(w)[1]] += 1
    return c


def ib_row_bruteforce(k: int, n: int, cfg: OracleConfig = None) -> dict[int, int]:
    """Histogram of largest-factorization widths over all length-``n`` words."""
    cfg = cfg or OracleConfig()
    if n == 0:
        _check(k, n, cfg.budget)
        return {0: 1}
    return dict(sorted(_sweep(_ib_task, k, n, cfg).items()))


def unbordered_bruteforce(k: int, n: int, cfg: OracleConfig = None) -> int:
    cfg = cfg or OracleConfig()
    if n == 0:
        return 1
    return _sweep(_ub_task, k, n, cfg)["unbordered"]


def unique_border_bruteforce(k: int, n: int, cfg: OracleConfig = None) -> tuple[int, dict[int, int]]:
    """Count words with exactly one border, bucketed by that border's length."""
    cfg = cfg or OracleConfig()
    c = _sweep(_ub_task, k, n, cfg)
    del c["unbordered"]
    by_t = dict(sorted(c.items()))
    return sum(by_t.values()), by_t


def maxwidth_bruteforce(k: int, n: int, cfg: OracleConfig = None) -> tuple[int, list]:
    """Maximum smallest-factorization width, with up to ``cfg.max_witnesses`` attaining words."""
    cfg = cfg or OracleConfig()
    if n == 0:
        return 0, [()]
    hist = _sweep(_smallest_task, k, n, cfg)
    best = max(hist)
    witnesses = []
    for w in _words(k, n, ()):
        if naive_peel_widths(w)[1] == best:
            witnesses.append(w)
            if len(witnesses) >= cfg.max_witnesses:
                break
    return best, witnesses


# -- verification sweeps ------------------------------------------------------


def _timed(fn):
    def wrapper(k, n_max, cfg=None, **kw):
        start = time.perf_counter()
        report = fn(k, n_max, cfg or OracleConfig(), **kw)
        report.elapsed = time.perf_counter() - start
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _check_budget_upto(k: int, n_max: int, cfg: OracleConfig) -> None:
    # refuse up front rather than after partial work
    _check(k, n_max, cfg.budget)


@_timed
def verify_ib(k, n_max, cfg):
    """Recurrence for largest-factorization widths vs exhaustive histograms."""
    from bpfact.enumeration import ib_count

    _check_budget_upto(k, n_max, cfg)
    rep = VerificationReport("ib", k, n_max)
    for n in range(0, n_max + 1):
        hist = ib_row_bruteforce(k, n, cfg)
        for t in range(0, n + 1):
            exp, got = hist.get(t, 0), ib_count(k, n, t)
            if exp != got:
                rep.mismatches.append(({"n": n, "t": t}, exp, got))
    return rep


@_timed
def verify_unbordered(k, n_max, cfg):
    from bpfact.enumeration import unbordered_count

    _check_budget_upto(k, n_max, cfg)
    rep = VerificationReport("unbordered", k, n_max)
    for n in range(0, n_max + 1):
        exp, got = unbordered_bruteforce(k, n, cfg), unbordered_count(k, n)
        if exp != got:
            rep.mismatches.append(({"n": n}, exp, got))
    return rep


@_timed
def verify_unique_border(k, n_max, cfg):
    """Unique-border recurrences, per border length and in total."""
    from bpfact.enumeration import unique_border_count, unique_border_count_t

    _check_budget_upto(k, n_max, cfg)
    rep = VerificationReport("unique_border", k, n_max)
    for n in range(2, n_max + 1):
        total, by_t = unique_border_bruteforce(k, n, cfg)
        for t in range(1, n):
            exp, got = by_t.get(t, 0), unique_border_count_t(k, n, t)
            if exp != got:
                rep.mismatches.append(({"n": n, "t": t}, exp, got))
        got = unique_border_count(k, n)
        if total != got:
            rep.mismatches.append(({"n": n}, total, got))
    return rep


@_timed
def verify_maxwidth(k, n_max, cfg):
    """Closed form for the maximum smallest-factorization width vs exhaustive search."""
    from bpfact.enumeration import max_smallest_width

    _check_budget_upto(k, n_max, cfg)
    rep = VerificationReport("maxwidth", k, n_max)
    for n in range(0, n_max + 1):
        exp, _ = maxwidth_bruteforce(k, n, cfg)
        got = max_smallest_width(k, n)
        if exp != got:
            rep.mismatches.append(({"n": n}, exp, got))
    return rep


def _theorem5_task(k, n, prefix, cube_centre=False) -> Counter:
    from bpfact.factorization import characterization_holds, coincide

    c = Counter()
    for w in _words(k, n, prefix):
        if coincide(w) != characterization_holds(w, cube_centre):
            c[w] += 1
    return c


def _theorem5_amended_task(k, n, prefix) -> Counter:
    return _theorem5_task(k, n, prefix, cube_centre=True)


@_timed
def theorem5_sweep(k, n_max, cfg, cube_centre=False):
    """Check that equal smallest/largest factorizations match the structural characterization.

    Mismatch entries give the word, whether the factorizations coincide, and
    what the characterization said.
    """
    from bpfact.factorization import coincide

    _check_budget_upto(k, n_max, cfg)
    rep = VerificationReport("theorem5", k, n_max)
    task = _theorem5_amended_task if cube_centre else _theorem5_task
    for n in range(1, n_max + 1):
        for w in sorted(_sweep(task, k, n, cfg)):
            same = coincide(w)
            rep.mismatches.append(({"word": fmt_word(w)}, same, not same))
    return rep


def _borders_task(k, n, prefix) -> Counter:
    from bpfact.words import borders

    c = Counter()
    for w in _words(k, n, prefix):
        if borders(w) != naive_borders(w):
            c[w] += 1
    return c


@_timed
def verify_borders(k, n_max, cfg):
    """Failure-function borders vs naive prefix/suffix comparison."""
    _check_budget_upto(k, n_max, cfg)
    rep = VerificationReport("borders", k, n_max)
    for n in range(0, n_max + 1):
        for w in sorted(_sweep(_borders_task, k, n, cfg)):
            rep.mismatches.append(({"word": fmt_word(w)}, naive_borders(w), "border_array"))
    return rep


def _bpf_width_task(k, n, prefix) -> Counter:
    from bpfact.factorization import largest_bpf, smallest_bpf

    c = Counter()
    for w in _words(k, n, prefix):
        if (largest_bpf(w).width, smallest_bpf(w).width) != naive_peel_widths(w):
            c[w] += 1
    return c


@_timed
def verify_bpf_width(k, n_max, cfg):
    """Library factorization widths vs the naive greedy peels."""
    _check_budget_upto(k, n_max, cfg)
    rep = VerificationReport("bpf_width", k, n_max)
    for n in range(1, n_max + 1):
        for w in sorted(_sweep(_bpf_width_task, k, n, cfg)):
            rep.mismatches.append(({"word": fmt_word(w)}, list(naive_peel_widths(w)), "library"))
    return rep


VERIFIERS = {
    "ib": verify_ib,
    "unbordered": verify_unbordered,
    "ub": verify_unique_border,
    "maxwidth": verify_maxwidth,
    "theorem5": theorem5_sweep,
    "borders": verify_borders,
    "bpf_width": verify_bpf_width,
}

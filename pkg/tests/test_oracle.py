import pytest

from bpfact import oracle
from bpfact.factorization import largest_bpf
from bpfact.oracle import BudgetExceeded, OracleConfig


def collect(k, n, **kw):
    seen = []
    oracle.for_each_word(k, n, seen.append, **kw)
    return seen


def test_for_each_word_counts_and_order():
    assert len(collect(2, 3)) == 8
    assert len(collect(3, 2)) == 9
    seen = collect(2, 3)
    assert seen == sorted(seen) and len(set(seen)) == 8
    assert collect(2, 0) == [()]


def test_for_each_word_unbordered_count():
    hits = []
    oracle.for_each_word(2, 10, lambda w: hits.append(1) if not oracle.naive_borders(w) else None)
    assert len(hits) == 284


def test_budget_refuses():
    with pytest.raises(BudgetExceeded):
        collect(2, 10, budget=1000)
    with pytest.raises(BudgetExceeded):
        oracle.ib_row_bruteforce(2, 12, OracleConfig(budget=100))
    with pytest.raises(BudgetExceeded):
        oracle.verify_ib(2, 12, OracleConfig(budget=100))


def test_naive_peel_matches_examples():
    word = tuple("abracadabra")
    assert oracle.naive_peel_widths(word) == (7, 3)
    assert oracle.naive_peel_widths(tuple("reappear")) == (6, 6)


def test_ib_histograms():
    assert oracle.ib_row_bruteforce(2, 10) == {1: 284, 2: 12, 3: 224, 4: 40, 5: 168, 6: 72, 7: 96, 8: 64, 9: 32, 10: 32}
    assert oracle.ib_row_bruteforce(2, 1) == {1: 2}
    odd = oracle.ib_row_bruteforce(2, 11)
    assert all(t % 2 for t in odd)
    assert sum(odd.values()) == 2**11


def test_unique_border_histograms():
    assert oracle.unique_border_bruteforce(2, 4) == (8, {1: 6, 2: 2})
    assert oracle.unique_border_bruteforce(2, 2) == (2, {1: 2})
    assert oracle.unique_border_bruteforce(2, 3)[0] == 2


def test_maxwidth():
    width, wit = oracle.maxwidth_bruteforce(2, 8, OracleConfig(max_witnesses=100))
    assert width == 6 and (0, 1, 0, 1, 1, 0, 0, 1) in wit
    assert oracle.maxwidth_bruteforce(2, 6)[0] == 5
    width, wit = oracle.maxwidth_bruteforce(3, 6, OracleConfig(max_witnesses=1000))
    assert width == 6 and (0, 1, 2, 2, 1, 0) in wit


def test_parallel_sweep_matches_serial():
    serial = oracle.ib_row_bruteforce(3, 7)
    assert oracle.ib_row_bruteforce(3, 7, OracleConfig(jobs=2)) == serial
    assert oracle.unique_border_bruteforce(2, 9, OracleConfig(jobs=3)) == oracle.unique_border_bruteforce(2, 9)


def test_reports():
    rep = oracle.verify_ib(2, 10)
    assert rep.passed and rep.subject == "ib" and rep.elapsed >= 0
    d = rep.as_dict()
    assert d["passed"] and d["mismatches"] == []
    assert oracle.verify_unbordered(3, 7).passed
    assert oracle.verify_unique_border(2, 10).passed
    assert oracle.verify_maxwidth(2, 10).passed
    assert oracle.verify_bpf_width(2, 10).passed


def test_theorem5_sweep_small():
    assert oracle.theorem5_sweep(2, 1).passed
    rep = oracle.theorem5_sweep(2, 6)
    words = [p["word"] for p, _, _ in rep.mismatches]
    assert words == ["000", "111", "01110", "10001", "010101", "101010"]
    # every mismatch is a word whose factorizations agree
    assert all(expected is True for _, expected, _ in rep.mismatches)


@pytest.mark.parametrize("k, n_max", [(2, 12), (3, 8)])
def test_theorem5_mismatches_are_cube_centres(k, n_max):
    for p, _, _ in oracle.theorem5_sweep(k, n_max).mismatches:
        f = largest_bpf(tuple(int(c) for c in p["word"]))
        assert f.block(1) == f.center
    assert oracle.theorem5_sweep(k, n_max, cube_centre=True).passed


def test_fmt_word():
    assert oracle.fmt_word((0, 1, 1)) == "011"
    assert oracle.fmt_word((0, 11)) == "0,11"

import itertools

from hypothesis import strategies as st


def all_words(k, n_max, n_min=0):
    for n in range(n_min, n_max + 1):
        yield from itertools.product(range(k), repeat=n)


def words(k_max=3, max_size=20, min_size=0):
    """Hypothesis strategy: a tuple word over a randomly sized small alphabet."""
    return st.integers(2, k_max).flatmap(
        lambda k: st.lists(st.integers(0, k - 1), min_size=min_size, max_size=max_size).map(tuple)
    )


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, "_acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

import pytest
from conftest import all_words, words
from hypothesis import given

from bpfact.factorization import (
    BPFactorization,
    EmptyWordError,
    all_bpfs,
    characterization_holds,
    coincide,
    largest_bpf,
    reconstruct,
    smallest_bpf,
    validate,
)
from bpfact.words import borders, is_palindrome, is_unbordered, longest_nonoverlapping_border, shortest_border


def dotted(f):
    return f.render(".")


class TestReconstructValidate:
    def test_reconstruct(self):
        assert reconstruct(BPFactorization(["abra"], "cad")) == "abracadabra"
        assert reconstruct(BPFactorization([], "cad")) == "cad"
        assert reconstruct(BPFactorization(["01", "0", "1"], "")) == "01011001"

    def test_validate(self):
        assert validate(BPFactorization(["abra"], "cad"), "abracadabra")
        assert validate(BPFactorization([], "abracadabra"), "abracadabra")
        assert not validate(BPFactorization(["a", ""], "x"), "axa")
        assert validate(BPFactorization(["01", "0", "1"], ""), "01011001")
        assert not validate(BPFactorization(["01", "0", "1"], ""), "01011010")

    def test_validate_rejects_inconsistent_width(self):
        assert not validate(BPFactorization(["abra"], "cad", width=2), "abracadabra")

    def test_width(self):
        assert BPFactorization(["a", "br"], "").width == 4
        assert BPFactorization(["a", "br"], "cad").width == 5
        assert BPFactorization([], "").width == 0


@pytest.mark.parametrize(
    "w, expected, width",
    [
        ("abracadabra", "a.br.a.cad.a.br.a", 7),
        ("alfalfa", "a.lf.a.lf.a", 5),
        ("cad", "cad", 1),
        # hand peel, cross-checked against max over all_bpfs below
        ("marjoram", "m.a.r.jo.r.a.m", 7),
    ],
)
def test_largest(w, expected, width):
    f = largest_bpf(w)
    assert dotted(f) == expected
    assert f.width == width


def test_marjoram_is_maximal():
    assert largest_bpf("marjoram").width == max(f.width for f in all_bpfs("marjoram"))


@pytest.mark.parametrize(
    "w, expected, width",
    [
        ("abracadabra", "abra.cad.abra", 3),
        ("reappear", "r.ea.p.p.ea.r", 6),
        ("01011001", "01.0.1.1.0.01", 6),
    ],
)
def test_smallest(w, expected, width):
    f = smallest_bpf(w)
    assert dotted(f) == expected
    assert f.width == width


def test_all_bpfs_example():
    got = [dotted(f) for f in all_bpfs("abracadabra")]
    assert got == [
        "abracadabra",
        "abra.cad.abra",
        "a.bracadabr.a",
        "a.br.acada.br.a",
        "a.br.a.cad.a.br.a",
    ]


def test_all_bpfs_small():
    assert [dotted(f) for f in all_bpfs("a")] == ["a"]
    assert [dotted(f) for f in all_bpfs("aa")] == ["aa", "a.a"]


@pytest.mark.parametrize("fn", [largest_bpf, smallest_bpf, all_bpfs, coincide, characterization_holds])
def test_empty_word_rejected(fn):
    with pytest.raises(EmptyWordError):
        fn("")


def test_coincide():
    assert coincide("alfalfa")
    assert dotted(smallest_bpf("alfalfa")) == "a.lf.a.lf.a"
    assert not coincide("abracadabra")
    assert coincide("cad")


def test_characterization_examples():
    assert characterization_holds("alfalfa")
    assert not characterization_holds("abracadabra")
    assert characterization_holds("cad")


@pytest.mark.parametrize("w", ["000", "01110", "010101", "aaa"])
def test_cube_centre_family(w):
    # the factorizations agree, but the innermost central factor has two borders
    assert coincide(w)
    assert not characterization_holds(w)
    assert characterization_holds(w, cube_centre=True)


def test_cube_centre_only_widens():
    for w in all_words(2, 10, n_min=1):
        if characterization_holds(w):
            assert characterization_holds(w, cube_centre=True)


@given(words(max_size=24, min_size=1))
def test_greedy_structure(w):
    big, small = largest_bpf(w), smallest_bpf(w)
    assert reconstruct(big) == w and reconstruct(small) == w
    assert validate(big, w) and validate(small, w)
    assert small.width <= big.width
    for f, pick in ((big, shortest_border), (small, longest_nonoverlapping_border)):
        assert len(f.center) == 0 or is_unbordered(f.center)
        for i in range(1, f.m + 1):
            skip = sum(len(b) for b in f.outer[: f.m - i])
            u = w[skip:len(w) - skip]
            assert len(f.block(i)) == pick(u)
    assert all(is_unbordered(b) for b in big.outer)


@given(words(k_max=2, max_size=12, min_size=1))
def test_all_bpfs_valid_and_distinct(w):
    fs = all_bpfs(w)
    assert fs[0] == BPFactorization([], w)
    assert all(validate(f, w) for f in fs)
    assert len({(f.outer, f.center) for f in fs}) == len(fs)


@given(words(k_max=2, max_size=12, min_size=1))
def test_all_bpfs_matches_definition(w):
    # independent enumeration: every way to choose outer block lengths
    def count(v):
        n = len(v)
        total = 1
        for b in range(1, n // 2 + 1):
            if v[:b] == v[n - b:]:
                total += count(v[b:n - b]) if n > 2 * b else 1
        return total

    assert len(all_bpfs(w)) == count(w)


@pytest.mark.slow
def test_largest_is_maximum_width_exhaustive():
    for w in all_words(2, 14, n_min=1):
        assert largest_bpf(w).width == max(f.width for f in all_bpfs(w))


def test_palindrome_iff_full_width():
    for w in all_words(3, 9, n_min=1):
        assert (largest_bpf(w).width == len(w)) == is_palindrome(w)


def test_borders_still_seen_through_slices():
    # blocks are slices of the source; a tuple word yields tuple blocks
    f = largest_bpf((0, 1, 0))
    assert f.outer == ((0,),) and f.center == (1,)
    assert borders(f.center) == []

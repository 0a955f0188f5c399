import random

import pytest

from cartlyn import INVERTED, NORMAL, OutOfRangeError, Word, build_lce, lce_left, lce_right
from cartlyn.reference import naive_lce

from helpers import SAMPLE_WORD, all_words, random_word


def test_right_examples():
    assert build_lce(Word(b"ab")).right(0, 1) == 0
    assert build_lce(SAMPLE_WORD).right(0, 8) == 8  # the word is a square
    assert build_lce(Word(b"aaa")).right(0, 1) == 2
    assert build_lce(Word(b"abab")).right(0, 2) == 2


def test_left_examples():
    assert build_lce(SAMPLE_WORD).left(7, 15) == 8
    assert build_lce(Word(b"ab")).left(0, 1) == 0


def test_identity_queries():
    ix = build_lce(SAMPLE_WORD)
    for i in range(SAMPLE_WORD.n):
        assert ix.right(i, i) == SAMPLE_WORD.n - i
        assert ix.left(i, i) == i + 1


def test_module_level_wrappers():
    ix = build_lce(SAMPLE_WORD)
    assert lce_right(ix, 0, 8) == 8
    assert lce_left(ix, 7, 15) == 8


def test_matches_naive_exhaustive():
    for w in all_words(8):
        ix = build_lce(w)
        for i in range(w.n):
            for j in range(w.n):
                assert ix.right(i, j) == naive_lce(w, i, j, "right")
                assert ix.left(i, j) == naive_lce(w, i, j, "left")


def test_matches_naive_random_long_words():
    rng = random.Random(424)
    for _ in range(20):
        w = random_word(rng, 512, min_len=32)
        ix = build_lce(w)
        for _ in range(200):
            i = rng.randrange(w.n)
            j = rng.randrange(w.n)
            assert ix.right(i, j) == naive_lce(w, i, j, "right")
            assert ix.left(i, j) == naive_lce(w, i, j, "left")


def test_symmetry():
    rng = random.Random(8)
    w = random_word(rng, 128, min_len=64)
    ix = build_lce(w)
    for _ in range(300):
        i = rng.randrange(w.n)
        j = rng.randrange(w.n)
        assert ix.right(i, j) == ix.right(j, i)
        assert ix.left(i, j) == ix.left(j, i)


def test_ordering_independence():
    for w in list(all_words(6))[::7] + [SAMPLE_WORD]:
        a = build_lce(w, NORMAL)
        b = build_lce(w, INVERTED)
        for i in range(w.n):
            for j in range(w.n):
                assert a.right(i, j) == b.right(i, j)
                assert a.left(i, j) == b.left(i, j)


def test_out_of_range_is_an_error():
    ix = build_lce(Word(b"ab"))
    with pytest.raises(OutOfRangeError):
        ix.right(0, 2)
    with pytest.raises(OutOfRangeError):
        ix.left(-1, 0)


def test_single_symbol_word():
    ix = build_lce(Word(b"z"))
    assert ix.right(0, 0) == 1
    assert ix.left(0, 0) == 1

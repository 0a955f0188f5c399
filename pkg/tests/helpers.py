"""Shared fixtures: the 16-symbol sample inputs, their frozen expected
tables, and small generators for exhaustive/randomized suites."""
import itertools

from cartlyn import NumSeq, Word

SAMPLE_WORD = Word(b"abbabaababbabaab")
SAMPLE_SEQ = NumSeq((7, 15, 12, 4, 10, 1, 5, 13, 6, 14, 11, 3, 9, 0, 2, 8))

SAMPLE_NNS = (3, 2, 3, 5, 5, 13, 11, 8, 11, 10, 11, 13, 13, 16, 16, 16)
SAMPLE_LYN = (3, 1, 1, 2, 1, 8, 5, 1, 3, 1, 1, 2, 1, 3, 2, 1)
SAMPLE_RANK = (7, 15, 12, 4, 10, 1, 5, 13, 6, 14, 11, 3, 9, 0, 2, 8)
SAMPLE_ORDER = (13, 5, 14, 11, 3, 6, 8, 0, 15, 12, 4, 10, 2, 7, 9, 1)
SAMPLE_ROOT = 13
SAMPLE_PARENT_MAP = {
    0: 3, 1: 2, 2: 0, 3: 5, 4: 3, 5: 13, 6: 11, 7: 8,
    8: 6, 9: 10, 10: 8, 11: 5, 12: 11, 14: 13, 15: 14,
}
SAMPLE_CFL = [(0, 2), (3, 4), (5, 12), (13, 15)]
SAMPLE_RUNS = {
    (0, 15, 8), (1, 2, 1), (2, 5, 2), (3, 8, 3), (5, 6, 1),
    (6, 9, 2), (7, 12, 3), (9, 10, 1), (10, 13, 2), (13, 14, 1),
}


def all_words(max_len, alphabet=b"ab", min_len=1):
    """Every word over the alphabet with min_len <= length <= max_len."""
    for n in range(min_len, max_len + 1):
        for tup in itertools.product(alphabet, repeat=n):
            yield Word(bytes(tup))


def random_word(rng, max_len, alphabet=b"abc", min_len=1):
    n = rng.randint(min_len, max_len)
    return Word(bytes(rng.choice(alphabet) for _ in range(n)))


def random_seq(rng, max_len, lo=-5, hi=5, min_len=1):
    n = rng.randint(min_len, max_len)
    return NumSeq(tuple(rng.randint(lo, hi) for _ in range(n)))

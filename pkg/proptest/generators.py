"""
Seeded random words and tower letter sequences.

All draws go through one numpy Generator so a seed fixes every case.
"""

from typing import List, Sequence, Tuple

import numpy as np

from groups.word import Word, free_reduce
from tower.normal_form import RawTowerSyllable


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_length(rng: np.random.Generator, max_length: int) -> int:
    return int(rng.integers(0, max_length + 1))


def random_signs(rng: np.random.Generator, length: int) -> np.ndarray:
    return rng.choice(np.array([-1, 1]), size=length)


def random_word(rng: np.random.Generator, rank: int, max_length: int) -> Word:
    """Free reduction of a uniform letter sequence of length <= max_length"""
    length = random_length(rng, max_length)
    generators = rng.integers(1, rank + 1, size=length)
    signs = random_signs(rng, length)
    return free_reduce([int(g) * int(s) for g, s in zip(generators, signs)], rank)


def tower_alphabet(ranks: Sequence[int], below: int = 0) -> List[Tuple[int, int]]:
    """(factor, generator) pairs, optionally only factors < below"""
    limit = below - 1 if below else len(ranks)
    return [(factor, generator)
            for factor in range(1, limit + 1)
            for generator in range(1, ranks[factor - 1] + 1)]


def random_tower_letters(rng: np.random.Generator,
                         alphabet: Sequence[Tuple[int, int]],
                         max_length: int) -> List[RawTowerSyllable]:
    length = random_length(rng, max_length)
    picks = rng.integers(0, len(alphabet), size=length)
    signs = random_signs(rng, length)
    return [(alphabet[int(i)], int(s)) for i, s in zip(picks, signs)]

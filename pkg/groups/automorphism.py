"""
Endomorphisms of a free factor given by generator-image tables.
"""

import logging
import operator
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from groups.errors import BiorderError, GeneratorIndexError, RankMismatchError
from groups.word import (
    Word,
    commutator,
    conjugate,
    exponent_sums,
    free_reduce,
    invert,
    power,
)

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

WordEquality = Callable[[Word, Word], bool]


@dataclass(frozen=True)
class EndoTable:
    """Substitution endomorphism: generator j maps to images[j-1]"""
    rank: int
    images: Tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise BiorderError(
                f"Endomorphism table of rank {self.rank} needs {self.rank} images, "
                f"got {len(self.images)}"
            )
        for image in self.images:
            if image.rank != self.rank:
                raise RankMismatchError(self.rank, image.rank, "EndoTable image")

    @classmethod
    def identity(cls, rank: int) -> "EndoTable":
        return cls(rank, tuple(Word.generator(rank, j) for j in range(1, rank + 1)))

    @classmethod
    def from_images(cls, rank: int, images: Dict[int, Word]) -> "EndoTable":
        """Table from a sparse map; unlisted generators are fixed"""
        return cls(rank, tuple(images.get(j, Word.generator(rank, j))
                               for j in range(1, rank + 1)))

    @classmethod
    def parse(cls, text: str, rank: int) -> "EndoTable":
        """
        Parse ``x1 -> x2^-1 x1 x2`` lines (or ``;``-separated entries)

        Unlisted generators are fixed; blank lines and ``#`` comments are skipped.
        """
        images: Dict[int, Word] = {}
        entries = [entry for line in text.splitlines() for entry in line.split(";")]
        for number, entry in enumerate(entries, start=1):
            entry = entry.split("#", 1)[0].strip()
            if not entry:
                continue
            if "->" not in entry:
                raise BiorderError(f"Table entry {number}: expected 'x<j> -> word', got {entry!r}")
            source, target = (part.strip() for part in entry.split("->", 1))
            source_word = Word.parse(source, rank)
            if len(source_word.syllables) != 1 or source_word.syllables[0][1] != 1:
                raise BiorderError(f"Table entry {number}: left side must be one generator")
            generator = source_word.syllables[0][0]
            if generator in images:
                raise BiorderError(f"Table entry {number}: x{generator} listed twice")
            images[generator] = Word.parse(target, rank)
        return cls.from_images(rank, images)

    def image(self, generator: int) -> Word:
        if not 1 <= generator <= self.rank:
            raise GeneratorIndexError(generator, self.rank)
        return self.images[generator - 1]

    def is_identity(self) -> bool:
        return all(image.syllables == ((j, 1),) for j, image in enumerate(self.images, start=1))

    def format(self, symbol: str = "x") -> str:
        return "\n".join(f"{symbol}{j} -> {image.format(symbol)}"
                         for j, image in enumerate(self.images, start=1))

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def __str__(self) -> str:
        return self.format()


def apply(t: EndoTable, w: Word) -> Word:
    """Freely reduced image of w under the substitution"""
    if t.rank != w.rank:
        raise RankMismatchError(t.rank, w.rank, "apply")
    raw = []
    for generator, exponent in w.syllables:
        raw.extend(power(t.images[generator - 1], exponent).syllables)
    return free_reduce(raw, t.rank)


def compose(s: EndoTable, t: EndoTable) -> EndoTable:
    """compose(s, t)(w) == s(t(w))"""
    if s.rank != t.rank:
        raise RankMismatchError(s.rank, t.rank, "compose")
    return EndoTable(s.rank, tuple(apply(s, image) for image in t.images))


def compose_all(tables: Sequence[EndoTable], rank: int) -> EndoTable:
    """tables[0] o tables[1] o ... (the last table acts first)"""
    result = EndoTable.identity(rank)
    for table in tables:
        result = compose(result, table)
    return result


def tables_agree(s: EndoTable, t: EndoTable, equal: WordEquality = operator.eq) -> bool:
    if s.rank != t.rank:
        return False
    return all(equal(a, b) for a, b in zip(s.images, t.images))


def verify_inverse_pair(t: EndoTable,
                        t_inv: EndoTable,
                        equal: WordEquality = operator.eq) -> bool:
    """Both composites are the identity on every generator"""
    if t.rank != t_inv.rank:
        return False
    identity = EndoTable.identity(t.rank)
    return (tables_agree(compose(t, t_inv), identity, equal)
            and tables_agree(compose(t_inv, t), identity, equal))


def exponent_matrix(t: EndoTable) -> np.ndarray:
    """Column j holds the exponent sums of the image of x_j"""
    return np.column_stack([exponent_sums(image).as_array() for image in t.images])


def is_IA(t: EndoTable) -> bool:
    """True when t induces the identity on the abelianization"""
    return bool(np.array_equal(exponent_matrix(t), np.eye(t.rank, dtype=np.int64)))


def _gen(rank: int, index: int) -> Word:
    return Word.generator(rank, index)


def epsilon(rank: int, i: int, j: int, inverse: bool = False) -> EndoTable:
    """x_i -> x_j^-1 x_i x_j, other generators fixed"""
    if i == j:
        raise BiorderError(f"epsilon needs distinct indices, got {i}, {j}")
    by = _gen(rank, j)
    if inverse:
        by = invert(by)
    return EndoTable.from_images(rank, {i: conjugate(_gen(rank, i), by)})


def epsilon_commutator(rank: int, i: int, j: int, k: int, inverse: bool = False) -> EndoTable:
    """x_i -> x_i [x_j, x_k], other generators fixed"""
    if len({i, j, k}) != 3:
        raise BiorderError(f"epsilon_commutator needs distinct indices, got {i}, {j}, {k}")
    bracket = commutator(_gen(rank, j), _gen(rank, k))
    if inverse:
        bracket = invert(bracket)
    return EndoTable.from_images(rank, {i: _gen(rank, i) * bracket})


def partial_conjugation(rank: int, k: int, i: int, inverse: bool = False) -> EndoTable:
    """c_{ki}: x_m -> x_i^-1 x_m x_i for m <= k"""
    if not 1 <= k <= rank:
        raise GeneratorIndexError(k, rank)
    by = _gen(rank, i)
    if inverse:
        by = invert(by)
    return EndoTable.from_images(rank, {m: conjugate(_gen(rank, m), by)
                                        for m in range(1, k + 1)})


def random_ia_pair(rank: int,
                   rng: np.random.Generator,
                   max_factors: int = 4,
                   basis_conjugating: bool = False) -> Tuple[EndoTable, EndoTable]:
    """
    Random IA automorphism with its inverse

    Built as a product of at most max_factors generators
    epsilon_ij (and epsilon_ijk from rank 3), each possibly inverted. With
    basis_conjugating set only epsilon_ij is used; those tables also descend to
    the reduced free group.

    Args:
        rank: Rank of the free group
        rng: Seeded numpy generator
        max_factors: Upper bound on the number of generator factors
        basis_conjugating: Skip the epsilon_ijk generators

    Returns:
        (table, inverse table)
    """
    table = EndoTable.identity(rank)
    inverse = EndoTable.identity(rank)
    if rank < 2:
        return table, inverse
    count = int(rng.integers(1, max_factors + 1))
    for _ in range(count):
        flip = bool(rng.integers(0, 2))
        if rank >= 3 and not basis_conjugating and rng.integers(0, 2) == 1:
            i, j, k = (int(x) + 1 for x in rng.choice(rank, size=3, replace=False))
            factor = epsilon_commutator(rank, i, j, k, inverse=flip)
            factor_inv = epsilon_commutator(rank, i, j, k, inverse=not flip)
        else:
            i, j = (int(x) + 1 for x in rng.choice(rank, size=2, replace=False))
            factor = epsilon(rank, i, j, inverse=flip)
            factor_inv = epsilon(rank, i, j, inverse=not flip)
        table = compose(table, factor)
        inverse = compose(factor_inv, inverse)
    return table, inverse

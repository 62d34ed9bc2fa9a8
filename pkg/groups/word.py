"""
Words in a single free factor.

A word is stored as run-length syllables ``(generator, exponent)`` and always
carries the rank of its factor; binary operations check ranks.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple, Union

import numpy as np

from groups.errors import GeneratorIndexError, RankMismatchError
from groups.word_parser import FREE_GENERATOR, parse_letters

Syllable = Tuple[int, int]
RawOccurrence = Union[int, Syllable]


@dataclass(frozen=True)
class AbVector:
    """Exponent sum per generator, the image in H1"""
    entries: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __add__(self, other: "AbVector") -> "AbVector":
        if self.rank != other.rank:
            raise RankMismatchError(self.rank, other.rank, "AbVector addition")
        return AbVector(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "AbVector") -> "AbVector":
        if self.rank != other.rank:
            raise RankMismatchError(self.rank, other.rank, "AbVector subtraction")
        return AbVector(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


@dataclass(frozen=True)
class Word:
    """Freely reduced word in the free group of the given rank"""
    rank: int
    syllables: Tuple[Syllable, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"Rank must be positive, got {self.rank}")
        previous = None
        for generator, exponent in self.syllables:
            if not 1 <= generator <= self.rank:
                raise GeneratorIndexError(generator, self.rank)
            if exponent == 0 or generator == previous:
                raise ValueError(
                    f"Syllables {self.syllables} are not in run-length normal form"
                )
            previous = generator

    @classmethod
    def identity(cls, rank: int) -> "Word":
        return cls(rank)

    @classmethod
    def generator(cls, rank: int, index: int, exponent: int = 1) -> "Word":
        return free_reduce([(index, exponent)], rank)

    @classmethod
    def parse(cls, text: str, rank: int) -> "Word":
        """Parse ``x1 x2^-1 [x1, x2]``-style text into a reduced word"""
        def check(index: int):
            if not 1 <= index <= rank:
                return f"generator x{index} out of range 1..{rank}"
            return None

        return free_reduce(parse_letters(text, FREE_GENERATOR, check_symbol=check), rank)

    @property
    def length(self) -> int:
        return sum(abs(exponent) for _, exponent in self.syllables)

    def is_identity(self) -> bool:
        return not self.syllables

    def letters(self) -> Iterator[Syllable]:
        """Unit-exponent expansion, left to right"""
        for generator, exponent in self.syllables:
            step = 1 if exponent > 0 else -1
            for _ in range(abs(exponent)):
                yield (generator, step)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, k: int) -> "Word":
        return power(self, k)

    def format(self, symbol: str = "x") -> str:
        if not self.syllables:
            return "1"
        parts = []
        for generator, exponent in self.syllables:
            parts.append(f"{symbol}{generator}" if exponent == 1
                         else f"{symbol}{generator}^{exponent}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()


def free_reduce(raw: Iterable[RawOccurrence], rank: int) -> Word:
    """
    Freely reduce a sequence of generator occurrences

    Args:
        raw: Occurrences, either signed ints (``-2`` is x2^-1) or (generator, exponent) pairs
        rank: Rank of the free factor

    Returns:
        The reduced word
    """
    stack: List[List[int]] = []
    for occurrence in raw:
        if isinstance(occurrence, tuple):
            generator, exponent = occurrence
        else:
            generator, exponent = abs(occurrence), (1 if occurrence > 0 else -1)
        if not 1 <= generator <= rank:
            raise GeneratorIndexError(generator, rank)
        if exponent == 0:
            continue
        if stack and stack[-1][0] == generator:
            stack[-1][1] += exponent
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([generator, exponent])
    return Word(rank, tuple((g, e) for g, e in stack))


def multiply(a: Word, b: Word) -> Word:
    if a.rank != b.rank:
        raise RankMismatchError(a.rank, b.rank, "multiply")
    if not a.syllables:
        return b
    if not b.syllables:
        return a
    return free_reduce(a.syllables + b.syllables, a.rank)


def invert(a: Word) -> Word:
    return Word(a.rank, tuple((g, -e) for g, e in reversed(a.syllables)))


def power(a: Word, k: int) -> Word:
    """a^k by repeated squaring; a single syllable just scales its exponent"""
    base = a if k >= 0 else invert(a)
    count = abs(k)
    if count == 0 or base.is_identity():
        return Word.identity(a.rank)
    if len(base.syllables) == 1:
        generator, exponent = base.syllables[0]
        return Word(a.rank, ((generator, exponent * count),))
    result = Word.identity(a.rank)
    while count:
        if count & 1:
            result = multiply(result, base)
        count >>= 1
        if count:
            base = multiply(base, base)
    return result


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a b a^-1 b^-1"""
    return multiply(multiply(a, b), multiply(invert(a), invert(b)))


def conjugate(a: Word, by: Word) -> Word:
    """by^-1 a by"""
    return multiply(multiply(invert(by), a), by)


def exponent_sums(a: Word) -> AbVector:
    entries = [0] * a.rank
    for generator, exponent in a.syllables:
        entries[generator - 1] += exponent
    return AbVector(tuple(entries))


def enumerate_reduced_words(rank: int, max_length: int) -> List[Word]:
    """All reduced words of length <= max_length, by length then letter order x1, x1^-1, x2, ..."""
    alphabet = [(g, s) for g in range(1, rank + 1) for s in (1, -1)]
    layer: List[Tuple[Syllable, ...]] = [()]
    words = [Word.identity(rank)]
    for _ in range(max_length):
        next_layer = []
        for letters in layer:
            for letter in alphabet:
                if letters and letters[-1] == (letter[0], -letter[1]):
                    continue
                next_layer.append(letters + (letter,))
        words.extend(free_reduce(letters, rank) for letters in next_layer)
        layer = next_layer
    return words

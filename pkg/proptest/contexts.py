"""
Ordered groups the property suites run against.

A context knows how to draw, multiply, compare, print and shrink its
elements, and which CLI flags reproduce it in a ``compare`` invocation.
"""

import itertools
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable, List, Tuple

import numpy as np

from groups.automorphism import apply, random_ia_pair
from groups.errors import SuiteContextError
from groups.magnus import magnus_compare
from groups.ordering import OrderVerdict
from groups.reduced_magnus import reduced_compare, reduced_equal, reduced_expand
from groups.word import Word, enumerate_reduced_words, exponent_sums, free_reduce, invert, multiply
from proptest.generators import random_tower_letters, random_word, tower_alphabet
from tower.normal_form import (
    TowerElement,
    normalize,
    parse_tower_element,
    retraction,
    tower_ab,
    tower_compare,
    tower_invert,
    tower_multiply,
)
from tower.spec import TowerSpec, ensure_valid

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Transform:
    """An order-preserving candidate map on the words of one free factor"""
    description: str
    rank: int
    apply: Callable[[Word], Word]
    compare: Callable[[Word, Word], OrderVerdict]
    format: Callable[[Word], str]


def shrink_word(w: Word) -> List[Word]:
    """Distinct words with one letter dropped"""
    letters = [g * s for g, s in w.letters()]
    seen = []
    for index in range(len(letters)):
        candidate = free_reduce(letters[:index] + letters[index + 1:], w.rank)
        if candidate not in seen:
            seen.append(candidate)
    return seen


class OrderContext(ABC):
    """Base class for ordered-group contexts"""

    def __init__(self, name: str, flags: str):
        self.name = name
        self.flags = flags

    @abstractmethod
    def identity(self) -> Any:
        pass

    @abstractmethod
    def multiply(self, a: Any, b: Any) -> Any:
        pass

    @abstractmethod
    def invert(self, a: Any) -> Any:
        pass

    @abstractmethod
    def compare(self, a: Any, b: Any) -> OrderVerdict:
        pass

    @abstractmethod
    def equal(self, a: Any, b: Any) -> bool:
        pass

    @abstractmethod
    def random_element(self, rng: np.random.Generator, max_length: int) -> Any:
        pass

    @abstractmethod
    def parse(self, text: str) -> Any:
        pass

    @abstractmethod
    def format(self, a: Any) -> str:
        pass

    @abstractmethod
    def size(self, a: Any) -> int:
        pass

    @abstractmethod
    def shrink(self, a: Any) -> List[Any]:
        pass

    @abstractmethod
    def ab_key(self, a: Any) -> Tuple[int, ...]:
        pass

    @abstractmethod
    def enumerate(self, max_length: int) -> List[Any]:
        """Distinct elements spelled by at most max_length letters"""

    @abstractmethod
    def random_transform(self, rng: np.random.Generator, max_length: int) -> Transform:
        pass

    @property
    def has_lower_action(self) -> bool:
        """Whether random_transform can draw an order-preserving action"""
        return True

    @property
    def has_retraction(self) -> bool:
        return False

    def diagram(self, a: Any) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        raise SuiteContextError(f"{self.name} has no retraction; diagram needs a tower of length >= 2")

    def is_positive(self, a: Any) -> bool:
        return self.compare(self.identity(), a).is_less

    def conjugate(self, a: Any, h: Any) -> Any:
        """h a h^-1"""
        return self.multiply(self.multiply(h, a), self.invert(h))


class FreeGroupContext(OrderContext):
    """Free group of a given rank under the Magnus or reduced Magnus order"""

    def __init__(self, rank: int, reduced: bool = False):
        flags = f"--rank {rank}" + (" --reduced" if reduced else "")
        kind = "reduced free" if reduced else "free"
        super().__init__(f"{kind} group of rank {rank}", flags)
        self.rank = rank
        self.reduced = reduced

    def identity(self) -> Word:
        return Word.identity(self.rank)

    def multiply(self, a: Word, b: Word) -> Word:
        return multiply(a, b)

    def invert(self, a: Word) -> Word:
        return invert(a)

    def compare(self, a: Word, b: Word) -> OrderVerdict:
        return reduced_compare(a, b) if self.reduced else magnus_compare(a, b)

    def equal(self, a: Word, b: Word) -> bool:
        return reduced_equal(a, b) if self.reduced else a == b

    def random_element(self, rng: np.random.Generator, max_length: int) -> Word:
        return random_word(rng, self.rank, max_length)

    def parse(self, text: str) -> Word:
        return Word.parse(text, self.rank)

    def format(self, a: Word) -> str:
        return a.format()

    def size(self, a: Word) -> int:
        return a.length

    def shrink(self, a: Word) -> List[Word]:
        return shrink_word(a)

    def ab_key(self, a: Word) -> Tuple[int, ...]:
        return exponent_sums(a).entries

    def enumerate(self, max_length: int) -> List[Word]:
        words = enumerate_reduced_words(self.rank, max_length)
        if not self.reduced:
            return words
        distinct, keys = [], set()
        for w in words:
            key = frozenset(reduced_expand(w).terms.items())
            if key not in keys:
                keys.add(key)
                distinct.append(w)
        return distinct

    def random_transform(self, rng: np.random.Generator, max_length: int) -> Transform:
        table, _ = random_ia_pair(self.rank, rng, basis_conjugating=self.reduced)
        description = "; ".join(table.format().splitlines())
        return Transform(description, self.rank,
                         lambda w: apply(table, w), self.compare, self.format)


class TowerContext(OrderContext):
    """A validated tower under the eastern lexicographic order"""

    def __init__(self, spec: TowerSpec, flags: str):
        ensure_valid(spec)
        super().__init__(f"tower {spec.name or spec.ranks}", flags)
        self.spec = spec
        self.alphabet = tower_alphabet(spec.ranks)

    @property
    def has_lower_action(self) -> bool:
        return self.spec.length >= 2

    @property
    def has_retraction(self) -> bool:
        return self.spec.length >= 2

    def identity(self) -> TowerElement:
        return TowerElement.identity(self.spec)

    def multiply(self, a: TowerElement, b: TowerElement) -> TowerElement:
        return tower_multiply(a, b, self.spec)

    def invert(self, a: TowerElement) -> TowerElement:
        return tower_invert(a, self.spec)

    def compare(self, a: TowerElement, b: TowerElement) -> OrderVerdict:
        return tower_compare(a, b, self.spec)

    def equal(self, a: TowerElement, b: TowerElement) -> bool:
        return self.compare(a, b).is_equal

    def random_element(self, rng: np.random.Generator, max_length: int) -> TowerElement:
        return normalize(random_tower_letters(rng, self.alphabet, max_length), self.spec)

    def parse(self, text: str) -> TowerElement:
        return parse_tower_element(text, self.spec)

    def format(self, a: TowerElement) -> str:
        return a.format()

    def size(self, a: TowerElement) -> int:
        return sum(w.length for w in a.components)

    def _from_letters(self, letters) -> TowerElement:
        return normalize([((f, g), s) for f, g, s in letters], self.spec)

    def shrink(self, a: TowerElement) -> List[TowerElement]:
        letters = a.letters()
        seen = []
        for index in range(len(letters)):
            candidate = self._from_letters(letters[:index] + letters[index + 1:])
            if candidate not in seen:
                seen.append(candidate)
        return seen

    def ab_key(self, a: TowerElement) -> Tuple[int, ...]:
        return tower_ab(a, self.spec).eastern_key()

    def enumerate(self, max_length: int) -> List[TowerElement]:
        letters = [(f, g, s) for f, g in self.alphabet for s in (1, -1)]
        elements = [self.identity()]
        seen = {elements[0]}
        for length in range(1, max_length + 1):
            for spelling in itertools.product(letters, repeat=length):
                if any(x[:2] == y[:2] and x[2] == -y[2] for x, y in zip(spelling, spelling[1:])):
                    continue
                element = self._from_letters(spelling)
                if element not in seen:
                    seen.add(element)
                    elements.append(element)
        logger.info(f"Enumerated {len(elements)} elements of {self.name} up to length {max_length}")
        return elements

    def _single_component(self, k: int, w: Word) -> str:
        components = [Word.identity(r) for r in self.spec.ranks]
        components[k - 1] = w
        return TowerElement(tuple(components)).format()

    def random_transform(self, rng: np.random.Generator, max_length: int) -> Transform:
        """Action of a random element of the lower tower on a random kernel factor"""
        if self.spec.length < 2:
            raise SuiteContextError(f"{self.name} has one factor; nothing acts on it")
        k = int(rng.integers(2, self.spec.length + 1))
        raw = random_tower_letters(rng, tower_alphabet(self.spec.ranks, below=k), max_length)
        letters = [(f, g, 1 if s > 0 else -1) for (f, g), s in raw for _ in range(abs(s))]
        spelled = " ".join(f"g{f}.{g}" + ("" if s > 0 else "^-1") for f, g, s in letters) or "1"
        spec = self.spec
        return Transform(
            f"conjugation of factor {k} by {spelled}",
            spec.ranks[k - 1],
            lambda w: spec.act(letters, w, k),
            lambda a, b: spec.compare_in_factor(k, a, b),
            lambda w: self._single_component(k, w),
        )

    def diagram(self, a: TowerElement) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """(drop_last(ab(a)), ab(retraction(a))) as eastern keys"""
        if self.spec.length < 2:
            return super().diagram(a)
        lower = self.spec.truncated(self.spec.length - 1)
        return (tower_ab(a, self.spec).drop_last().eastern_key(),
                tower_ab(retraction(a, self.spec), lower).eastern_key())


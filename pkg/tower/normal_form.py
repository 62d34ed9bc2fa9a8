"""
Normal forms, group law and the eastern order on a tower.

An element is stored as components (w_1, ..., w_l) and means w_l ... w_1, so the
factor-1 word sits rightmost. Normalisation rewrites adjacent blocks with

    u . y = (u y u^-1) . u = act(u^-1, y) . u

for a block u of a lower factor followed by a block y of a higher factor. Each
left-to-right pass moves higher blocks leftwards and merges equal-factor
neighbours; passes repeat until none applies. Factor indices of the blocks
decrease strictly at the fixpoint. Each swap removes one inversion of the
block-index sequence and merges add none, which bounds the passes.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from groups.errors import RetractionError, TowerMismatchError
from groups.ordering import OrderVerdict
from groups.word import AbVector, Word, exponent_sums, invert, multiply
from groups.word_parser import TOWER_GENERATOR, parse_letters
from tower.spec import TowerLetter, TowerSpec, ensure_valid, word_letters

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

# ((factor, generator), exponent)
RawTowerSyllable = Tuple[Tuple[int, int], int]


@dataclass(frozen=True)
class TowerElement:
    """Normal form: components[i-1] is the word in factor i"""
    components: Tuple[Word, ...]

    @classmethod
    def identity(cls, spec: TowerSpec) -> "TowerElement":
        return cls(tuple(Word.identity(r) for r in spec.ranks))

    @classmethod
    def generator(cls, spec: TowerSpec, factor: int, index: int, exponent: int = 1) -> "TowerElement":
        components = list(cls.identity(spec).components)
        components[factor - 1] = Word.generator(spec.ranks[factor - 1], index, exponent)
        return cls(tuple(components))

    @property
    def length(self) -> int:
        return len(self.components)

    def is_identity(self) -> bool:
        return all(w.is_identity() for w in self.components)

    def component(self, factor: int) -> Word:
        return self.components[factor - 1]

    def letters(self) -> List[TowerLetter]:
        """Unit letters of w_l ... w_1, left to right"""
        result: List[TowerLetter] = []
        for factor in range(self.length, 0, -1):
            result.extend(word_letters(factor, self.components[factor - 1]))
        return result

    def format(self) -> str:
        parts = [f"({self.components[k - 1].format(f'g{k}.')})"
                 for k in range(self.length, 0, -1)
                 if not self.components[k - 1].is_identity()]
        return " ".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class TowerAb:
    """Exponent sums per factor, block i for factor i"""
    blocks: Tuple[AbVector, ...]

    def eastern_key(self) -> Tuple[int, ...]:
        """Block 1 first, entries in generator order within a block"""
        return tuple(entry for block in self.blocks for entry in block.entries)

    def drop_last(self) -> "TowerAb":
        return TowerAb(self.blocks[:-1])

    def __le__(self, other: "TowerAb") -> bool:
        return self.eastern_key() <= other.eastern_key()

    def __lt__(self, other: "TowerAb") -> bool:
        return self.eastern_key() < other.eastern_key()

    def __str__(self) -> str:
        return "(" + ", ".join(str(b) for b in self.blocks) + ")"


def _check_element(g: TowerElement, spec: TowerSpec):
    if g.length != spec.length:
        raise TowerMismatchError(
            f"Element has {g.length} components, tower has {spec.length} factors"
        )
    for index, (word, rank) in enumerate(zip(g.components, spec.ranks), start=1):
        if word.rank != rank:
            raise TowerMismatchError(
                f"Component {index} has rank {word.rank}, factor {index} has rank {rank}"
            )


def _push(blocks: List[List], factor: int, word: Word):
    if word.is_identity():
        return
    if blocks and blocks[-1][0] == factor:
        merged = multiply(blocks[-1][1], word)
        if merged.is_identity():
            blocks.pop()
        else:
            blocks[-1][1] = merged
        return
    blocks.append([factor, word])


def _rewrite(blocks: List[List], spec: TowerSpec) -> List[List]:
    passes = 0
    changed = True
    while changed:
        changed = False
        passes += 1
        out: List[List] = []
        for factor, word in blocks:
            if out and out[-1][0] < factor:
                low_factor, low_word = out.pop()
                moved = spec.act(word_letters(low_factor, invert(low_word)), word, factor)
                _push(out, factor, moved)
                _push(out, low_factor, low_word)
                changed = True
            else:
                _push(out, factor, word)
        blocks = out
    if passes > 50:
        logger.info(f"Normal form needed {passes} rewriting passes")
    return blocks


def _from_blocks(blocks: Iterable[Tuple[int, Word]], spec: TowerSpec) -> TowerElement:
    rewritten = _rewrite([[f, w] for f, w in blocks if not w.is_identity()], spec)
    components = [Word.identity(r) for r in spec.ranks]
    for factor, word in rewritten:
        components[factor - 1] = word
    return TowerElement(tuple(components))


def _blocks(g: TowerElement) -> List[Tuple[int, Word]]:
    return [(k, g.components[k - 1]) for k in range(g.length, 0, -1)]


def normalize(raw: Sequence[RawTowerSyllable], spec: TowerSpec, validate: bool = True) -> TowerElement:
    """
    Normal form of a mixed word over all tower generators

    Args:
        raw: ((factor, generator), exponent) pairs, left to right
        spec: Tower spec
        validate: Validate the spec first (cached per spec instance)

    Returns:
        The unique normal form
    """
    if validate:
        ensure_valid(spec)
    blocks = []
    for (factor, generator), exponent in raw:
        if not 1 <= factor <= spec.length:
            raise TowerMismatchError(f"Unknown generator g{factor}.{generator}")
        rank = spec.ranks[factor - 1]
        if not 1 <= generator <= rank:
            raise TowerMismatchError(f"Unknown generator g{factor}.{generator}")
        blocks.append((factor, Word.generator(rank, generator, exponent)))
    return _from_blocks(blocks, spec)


def parse_tower_letters(text: str, spec: TowerSpec) -> List[RawTowerSyllable]:
    """Parse ``g2.1 g1.1^-1``-style text against the tower's generators"""
    def check(symbol: Tuple[int, int]) -> Optional[str]:
        factor, generator = symbol
        if not 1 <= factor <= spec.length:
            return f"unknown generator g{factor}.{generator}: no factor {factor}"
        if not 1 <= generator <= spec.ranks[factor - 1]:
            return (f"unknown generator g{factor}.{generator}: factor {factor} "
                    f"has rank {spec.ranks[factor - 1]}")
        return None

    return parse_letters(text, TOWER_GENERATOR,
                         make_symbol=lambda groups: (int(groups[0]), int(groups[1])),
                         check_symbol=check)


def parse_tower_element(text: str, spec: TowerSpec) -> TowerElement:
    return normalize(parse_tower_letters(text, spec), spec)


def tower_multiply(g: TowerElement, h: TowerElement, spec: TowerSpec) -> TowerElement:
    ensure_valid(spec)
    _check_element(g, spec)
    _check_element(h, spec)
    return _from_blocks(_blocks(g) + _blocks(h), spec)


def tower_invert(g: TowerElement, spec: TowerSpec) -> TowerElement:
    ensure_valid(spec)
    _check_element(g, spec)
    return _from_blocks([(k, invert(w)) for k, w in reversed(_blocks(g))], spec)


def tower_compare(g: TowerElement, h: TowerElement, spec: TowerSpec) -> OrderVerdict:
    """Eastern lexicographic order: factor 1 decides first"""
    ensure_valid(spec)
    _check_element(g, spec)
    _check_element(h, spec)
    for k in range(1, spec.length + 1):
        verdict = spec.compare_in_factor(k, g.components[k - 1], h.components[k - 1])
        if not verdict.is_equal:
            return verdict.with_factor(k)
    return OrderVerdict.equal()


def tower_ab(g: TowerElement, spec: TowerSpec) -> TowerAb:
    _check_element(g, spec)
    return TowerAb(tuple(exponent_sums(w) for w in g.components))


def retraction(g: TowerElement, spec: TowerSpec) -> TowerElement:
    """Drop the kernel component; the result lives in spec.truncated(l - 1)"""
    _check_element(g, spec)
    if spec.length == 1:
        raise RetractionError("Retraction needs a tower with at least two factors")
    return TowerElement(g.components[:-1])

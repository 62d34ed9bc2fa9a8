"""
Reduced Magnus expansion into the square-free quotient ring.

Any monomial with a repeated variable is zero, so x_i maps to 1 + X_i and
x_i^-1 to 1 - X_i exactly. Polynomials are finite and the word problem and
the order of the reduced free group are decided without truncation.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional

from groups.errors import GeneratorIndexError, RankMismatchError, ReducedRankError
from groups.magnus import compare_terms, format_series
from groups.ordering import Monomial, OrderVerdict, Sign, Verdict
from groups.word import Word, commutator, conjugate, invert
from utils.config import get_settings

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


def _is_square_free(monomial: Monomial) -> bool:
    return len(set(monomial)) == len(monomial)


@dataclass(frozen=True, eq=True)
class SquareFreePoly:
    """Exact polynomial whose monomials use pairwise distinct variables"""
    rank: int
    terms: Dict[Monomial, int] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"Rank must be positive, got {self.rank}")
        clean = {}
        for monomial, coefficient in self.terms.items():
            if coefficient == 0 or not _is_square_free(monomial):
                continue
            for var in monomial:
                if not 1 <= var <= self.rank:
                    raise GeneratorIndexError(var, self.rank)
            clean[tuple(monomial)] = coefficient
        object.__setattr__(self, "terms", clean)

    def coefficient(self, monomial: Iterable[int]) -> int:
        return self.terms.get(tuple(monomial), 0)

    @property
    def max_degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def __add__(self, other: "SquareFreePoly") -> "SquareFreePoly":
        return sf_add(self, other)

    def __sub__(self, other: "SquareFreePoly") -> "SquareFreePoly":
        return sf_sub(self, other)

    def __mul__(self, other: "SquareFreePoly") -> "SquareFreePoly":
        return sf_mul(self, other)

    def __str__(self) -> str:
        return format_series(self.terms)


def sf_one(rank: int) -> SquareFreePoly:
    return SquareFreePoly(rank, {(): 1})


def sf_variable(rank: int, index: int) -> SquareFreePoly:
    if not 1 <= index <= rank:
        raise GeneratorIndexError(index, rank)
    return SquareFreePoly(rank, {(index,): 1})


def sf_add(a: SquareFreePoly, b: SquareFreePoly) -> SquareFreePoly:
    if a.rank != b.rank:
        raise RankMismatchError(a.rank, b.rank, "sf_add")
    terms = dict(a.terms)
    for monomial, coefficient in b.terms.items():
        terms[monomial] = terms.get(monomial, 0) + coefficient
    return SquareFreePoly(a.rank, terms)


def sf_sub(a: SquareFreePoly, b: SquareFreePoly) -> SquareFreePoly:
    return sf_add(a, SquareFreePoly(b.rank, {m: -c for m, c in b.terms.items()}))


def sf_mul(a: SquareFreePoly, b: SquareFreePoly) -> SquareFreePoly:
    if a.rank != b.rank:
        raise RankMismatchError(a.rank, b.rank, "sf_mul")
    product: Dict[Monomial, int] = {}
    for left, left_coefficient in a.terms.items():
        used = set(left)
        for right, right_coefficient in b.terms.items():
            if used.intersection(right):
                continue
            key = left + right
            product[key] = product.get(key, 0) + left_coefficient * right_coefficient
    return SquareFreePoly(a.rank, product)


def _check_rank(rank: int, limit: Optional[int]):
    limit = limit if limit is not None else get_settings().reduced_max_rank
    if rank > limit:
        logger.error(f"Error expanding in reduced ring: rank {rank} exceeds guard {limit}")
        raise ReducedRankError(rank, limit)


def reduced_expand(w: Word, max_rank: Optional[int] = None) -> SquareFreePoly:
    """Exact image of w under the reduced Magnus map"""
    _check_rank(w.rank, max_rank)
    terms: Dict[Monomial, int] = {(): 1}
    for generator, exponent in w.syllables:
        # (1 + X)^e = 1 + e X once X^2 = 0
        expanded = dict(terms)
        for monomial, coefficient in terms.items():
            if generator in monomial:
                continue
            key = monomial + (generator,)
            expanded[key] = expanded.get(key, 0) + coefficient * exponent
        terms = {m: c for m, c in expanded.items() if c}
    return SquareFreePoly(w.rank, terms)


def reduced_equal(u: Word, v: Word, max_rank: Optional[int] = None) -> bool:
    """Equality in the reduced free group"""
    if u.rank != v.rank:
        raise RankMismatchError(u.rank, v.rank, "reduced_equal")
    if u == v:
        return True
    return reduced_expand(u, max_rank).terms == reduced_expand(v, max_rank).terms


def reduced_compare(u: Word, v: Word, max_rank: Optional[int] = None) -> OrderVerdict:
    """Reduced Magnus ordering; always decided, no deepening"""
    if u.rank != v.rank:
        raise RankMismatchError(u.rank, v.rank, "reduced_compare")
    if u == v:
        return OrderVerdict.equal()
    verdict = compare_terms(reduced_expand(u, max_rank).terms,
                            reduced_expand(v, max_rank).terms,
                            u.rank)
    if verdict.verdict is Verdict.AGREE:
        return OrderVerdict.equal()
    return verdict


def reduced_sign(w: Word) -> Sign:
    verdict = reduced_compare(Word.identity(w.rank), w)
    if verdict.is_equal:
        return Sign.ZERO
    return Sign.POSITIVE if verdict.is_less else Sign.NEGATIVE


def reduced_relator(j: int, g: Word) -> Word:
    """[x_j, g x_j g^-1], trivial in the reduced free group"""
    x = Word.generator(g.rank, j)
    return commutator(x, conjugate(x, invert(g)))

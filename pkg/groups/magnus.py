"""
Truncated non-commutative power series over Z and the Magnus ordering.

The Magnus map sends x_i to 1 + X_i and x_i^-1 to 1 - X_i + X_i^2 - ...;
two words are compared at the smallest degree where their expansions differ,
scanning the monomials of that degree lexicographically with X1 < X2 < ...
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple

from groups.errors import (
    DegreeCeilingError,
    GeneratorIndexError,
    NotInUnitGroupError,
    RankMismatchError,
)
from groups.ordering import Monomial, OrderVerdict, Sign, Verdict, format_monomial
from groups.word import Word, invert, multiply
from utils.config import get_settings

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

Terms = Dict[Monomial, int]


@dataclass(frozen=True, eq=True)
class MagnusSeries:
    """Truncated series: coefficients of every monomial of degree <= degree"""
    rank: int
    degree: int
    terms: Dict[Monomial, int] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"Rank must be positive, got {self.rank}")
        if self.degree < 0:
            raise ValueError(f"Truncation degree must be nonnegative, got {self.degree}")
        clean = {}
        for monomial, coefficient in self.terms.items():
            if coefficient == 0 or len(monomial) > self.degree:
                continue
            for var in monomial:
                if not 1 <= var <= self.rank:
                    raise GeneratorIndexError(var, self.rank)
            clean[tuple(monomial)] = coefficient
        object.__setattr__(self, "terms", clean)

    def coefficient(self, monomial: Iterable[int]) -> int:
        return self.terms.get(tuple(monomial), 0)

    @property
    def constant(self) -> int:
        return self.terms.get((), 0)

    def __add__(self, other: "MagnusSeries") -> "MagnusSeries":
        return series_add(self, other)

    def __sub__(self, other: "MagnusSeries") -> "MagnusSeries":
        return series_sub(self, other)

    def __mul__(self, other: "MagnusSeries") -> "MagnusSeries":
        return series_mul(self, other)

    def __neg__(self) -> "MagnusSeries":
        return series_neg(self)

    def __str__(self) -> str:
        return format_series(self.terms)


def series_one(rank: int, degree: int) -> MagnusSeries:
    return MagnusSeries(rank, degree, {(): 1})


def series_variable(rank: int, index: int, degree: int) -> MagnusSeries:
    """The bare variable X_index"""
    if not 1 <= index <= rank:
        raise GeneratorIndexError(index, rank)
    return MagnusSeries(rank, degree, {(index,): 1})


def _check_ranks(a, b, operation: str):
    if a.rank != b.rank:
        raise RankMismatchError(a.rank, b.rank, operation)


def series_add(a: MagnusSeries, b: MagnusSeries) -> MagnusSeries:
    _check_ranks(a, b, "series_add")
    terms = dict(a.terms)
    for monomial, coefficient in b.terms.items():
        terms[monomial] = terms.get(monomial, 0) + coefficient
    return MagnusSeries(a.rank, min(a.degree, b.degree), terms)


def series_neg(a: MagnusSeries) -> MagnusSeries:
    return MagnusSeries(a.rank, a.degree, {m: -c for m, c in a.terms.items()})


def series_sub(a: MagnusSeries, b: MagnusSeries) -> MagnusSeries:
    return series_add(a, series_neg(b))


def _mul_terms(a: Terms, b: Terms, degree: int) -> Terms:
    product: Terms = {}
    for left, left_coefficient in a.items():
        room = degree - len(left)
        if room < 0:
            continue
        for right, right_coefficient in b.items():
            if len(right) > room:
                continue
            key = left + right
            product[key] = product.get(key, 0) + left_coefficient * right_coefficient
    return product


def series_mul(a: MagnusSeries, b: MagnusSeries) -> MagnusSeries:
    _check_ranks(a, b, "series_mul")
    degree = min(a.degree, b.degree)
    return MagnusSeries(a.rank, degree, _mul_terms(a.terms, b.terms, degree))


def truncate(s: MagnusSeries, degree: int) -> MagnusSeries:
    return MagnusSeries(s.rank, min(s.degree, degree), s.terms)


def series_degree_part(s: MagnusSeries, d: int) -> Terms:
    """Homogeneous part of degree d"""
    return {m: c for m, c in s.terms.items() if len(m) == d}


def geometric_inverse(s: MagnusSeries) -> MagnusSeries:
    """Inverse of 1 + W as 1 - W + W^2 - ..., exact up to the truncation degree"""
    if s.constant != 1:
        raise NotInUnitGroupError(
            f"Geometric inverse needs constant coefficient 1, got {s.constant}"
        )
    negated_tail = {m: -c for m, c in s.terms.items() if m}
    result: Terms = {(): 1}
    power: Terms = {(): 1}
    for _ in range(s.degree):
        power = _mul_terms(power, negated_tail, s.degree)
        if not power:
            break
        for monomial, coefficient in power.items():
            result[monomial] = result.get(monomial, 0) + coefficient
    return MagnusSeries(s.rank, s.degree, result)


def syllable_coefficients(exponent: int, degree: int) -> List[int]:
    """Coefficients of (1 + X)^exponent up to X^degree, any integer exponent"""
    if exponent >= 0:
        return [comb(exponent, k) for k in range(degree + 1)]
    n = -exponent
    return [(-1) ** k * comb(n + k - 1, k) for k in range(degree + 1)]


def _expand_terms(w: Word, degree: int) -> Terms:
    terms: Terms = {(): 1}
    for generator, exponent in w.syllables:
        coefficients = syllable_coefficients(exponent, degree)
        expanded: Terms = {}
        for monomial, coefficient in terms.items():
            tail = ()
            for k in range(degree - len(monomial) + 1):
                factor = coefficients[k]
                if factor:
                    key = monomial + tail
                    expanded[key] = expanded.get(key, 0) + coefficient * factor
                tail += (generator,)
        terms = {m: c for m, c in expanded.items() if c}
    return terms


class ExpansionCache:
    """Bounded LRU memo of Magnus expansions keyed by (word, degree)"""

    def __init__(self, maxsize: int = 4096):
        self.maxsize = maxsize
        self._expand = lru_cache(maxsize=maxsize)(_compute_expansion)

    def expand(self, w: Word, degree: int) -> MagnusSeries:
        return self._expand(w, degree)

    @property
    def hits(self) -> int:
        return self._expand.cache_info().hits

    @property
    def misses(self) -> int:
        return self._expand.cache_info().misses

    def clear(self):
        self._expand.cache_clear()

    def __len__(self) -> int:
        return self._expand.cache_info().currsize


def _compute_expansion(w: Word, degree: int) -> MagnusSeries:
    return MagnusSeries(w.rank, degree, _expand_terms(w, degree))


@lru_cache(maxsize=1)
def shared_cache() -> ExpansionCache:
    """Process-wide cache used when MAGNUS_CACHE is on"""
    return ExpansionCache(get_settings().magnus_cache_size)


def _resolve_cache(cache: Optional[ExpansionCache]) -> Optional[ExpansionCache]:
    if cache is not None:
        return cache
    return shared_cache() if get_settings().magnus_cache else None


def magnus_expand(w: Word, degree: int, cache: Optional[ExpansionCache] = None) -> MagnusSeries:
    """Image of w under the Magnus map, truncated at the given degree"""
    if degree < 0:
        raise ValueError(f"Truncation degree must be nonnegative, got {degree}")
    cache = _resolve_cache(cache)
    if cache is not None:
        return cache.expand(w, degree)
    return _compute_expansion(w, degree)


def compare_terms(a: Terms, b: Terms, degree: int) -> OrderVerdict:
    """First (degree, lex) monomial where the coefficients differ"""
    differing = [
        m for m in set(a) | set(b)
        if len(m) <= degree and a.get(m, 0) != b.get(m, 0)
    ]
    if not differing:
        return OrderVerdict(Verdict.AGREE, degree=degree)
    first = min(differing, key=lambda m: (len(m), m))
    verdict = Verdict.LESS if a.get(first, 0) < b.get(first, 0) else Verdict.GREATER
    return OrderVerdict(verdict, degree=len(first), monomial=first)


def series_compare(a: MagnusSeries, b: MagnusSeries) -> OrderVerdict:
    """LESS/GREATER at the first differing degree, or AGREE up to min truncation"""
    _check_ranks(a, b, "series_compare")
    return compare_terms(a.terms, b.terms, min(a.degree, b.degree))


def magnus_compare(u: Word,
                   v: Word,
                   start_degree: Optional[int] = None,
                   max_degree: Optional[int] = None,
                   cache: Optional[ExpansionCache] = None) -> OrderVerdict:
    """
    Compare two words under the Magnus ordering

    Equality is settled by free reduction; otherwise the truncation degree
    starts at start_degree and doubles until the expansions separate.

    Args:
        u: Left word
        v: Right word
        start_degree: First truncation degree (default MAGNUS_START_DEGREE)
        max_degree: Ceiling D_max (default MAGNUS_MAX_DEGREE)
        cache: Optional expansion memo

    Returns:
        LESS, EQUAL or GREATER with the deciding degree and monomial
    """
    if u.rank != v.rank:
        raise RankMismatchError(u.rank, v.rank, "magnus_compare")
    if multiply(invert(u), v).is_identity():
        return OrderVerdict.equal()

    settings = get_settings()
    degree = start_degree or settings.magnus_start_degree
    ceiling = max_degree or settings.magnus_max_degree
    degree = min(degree, ceiling)
    while True:
        verdict = series_compare(magnus_expand(u, degree, cache), magnus_expand(v, degree, cache))
        if verdict.verdict is not Verdict.AGREE:
            if degree > 8:
                logger.info(f"Magnus comparison needed truncation degree {degree}")
            return verdict
        if degree >= ceiling:
            logger.error(f"Error comparing {u} and {v}: ceiling {ceiling} reached")
            raise DegreeCeilingError(ceiling)
        degree = min(degree * 2, ceiling)


def sign(w: Word, cache: Optional[ExpansionCache] = None) -> Sign:
    """Position of w relative to the identity"""
    verdict = magnus_compare(Word.identity(w.rank), w, cache=cache)
    if verdict.is_equal:
        return Sign.ZERO
    return Sign.POSITIVE if verdict.is_less else Sign.NEGATIVE


def lower_central_depth(w: Word, degree: int) -> Optional[int]:
    """Smallest degree of a non-constant term of the expansion, None up to degree"""
    series = magnus_expand(w, degree)
    for d in range(1, degree + 1):
        if series_degree_part(series, d):
            return d
    return None


def format_series(terms: Dict[Monomial, int]) -> str:
    """
    Print terms in (degree, lex) order: ``1 + X1*X2 - X2*X1``, ``1 + 2 X1``
    """
    ordered = sorted(((m, c) for m, c in terms.items() if c), key=lambda t: (len(t[0]), t[0]))
    if not ordered:
        return "0"
    pieces = []
    for index, (monomial, coefficient) in enumerate(ordered):
        magnitude = abs(coefficient)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = format_monomial(monomial)
        else:
            body = f"{magnitude} {format_monomial(monomial)}"
        if index == 0:
            pieces.append(body if coefficient > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coefficient > 0 else f"- {body}")
    return " ".join(pieces)

import itertools

import pytest
from hypothesis import given

from groups.errors import DegreeCeilingError, NotInUnitGroupError, RankMismatchError
from groups.magnus import (
    ExpansionCache,
    MagnusSeries,
    format_series,
    geometric_inverse,
    lower_central_depth,
    magnus_compare,
    magnus_expand,
    series_compare,
    series_one,
    series_variable,
    shared_cache,
    sign,
    truncate,
)
from groups.ordering import Sign, Verdict
from groups.word import Word, commutator, enumerate_reduced_words, invert
from strategies import words
from utils.config import get_settings


def w(text: str, rank: int = 2) -> Word:
    return Word.parse(text, rank)


def test_expand_commutator():
    series = magnus_expand(w("[x1, x2]"), 2)
    assert str(series) == "1 + X1*X2 - X2*X1"


def test_expand_inverse_generator():
    assert str(magnus_expand(w("x1^-1", 1), 3)) == "1 - X1 + X1^2 - X1^3"


def test_expand_power():
    assert str(magnus_expand(w("x1^2", 1), 2)) == "1 + 2 X1 + X1^2"


def test_expansion_is_multiplicative():
    u, v = w("x1 x2^-1"), w("x2^2 x1")
    assert magnus_expand(u * v, 4) == magnus_expand(u, 4) * magnus_expand(v, 4)


def test_geometric_inverse_matches_inverse_word():
    u = w("x1 x2 x1")
    assert geometric_inverse(magnus_expand(u, 4)) == magnus_expand(invert(u), 4)


def test_geometric_inverse_needs_unit():
    with pytest.raises(NotInUnitGroupError):
        geometric_inverse(MagnusSeries(1, 2, {(): 2}))


def test_format_series_zero_and_monomials():
    assert format_series({}) == "0"
    assert format_series({(1, 1, 2): -3}) == "-3 X1^2*X2"


def test_compare_generators():
    verdict = magnus_compare(w("x2"), w("x1"))
    assert verdict.verdict is Verdict.LESS
    assert str(verdict) == "LESS (decided at degree 1, monomial X1)"
    assert magnus_compare(w("x1"), w("x2")).is_greater


def test_compare_equal_words():
    assert magnus_compare(w("x1 x2 x2^-1"), w("x1")).is_equal


def test_commutator_is_positive():
    bracket = commutator(w("x1"), w("x2"))
    verdict = magnus_compare(Word.identity(2), bracket)
    assert verdict.is_less
    assert verdict.degree == 2
    assert verdict.monomial == (1, 2)
    assert sign(bracket) is Sign.POSITIVE
    assert sign(invert(bracket)) is Sign.NEGATIVE
    assert sign(Word.identity(2)) is Sign.ZERO


def test_deepening_reaches_higher_degree():
    # [[x1, x2], x2] first differs from 1 in degree 3
    deep = commutator(commutator(w("x1"), w("x2")), w("x2"))
    verdict = magnus_compare(Word.identity(2), deep, start_degree=2)
    assert verdict.degree == 3


def test_degree_ceiling():
    bracket = commutator(w("x1"), w("x2"))
    with pytest.raises(DegreeCeilingError):
        magnus_compare(Word.identity(2), bracket, start_degree=1, max_degree=1)


def test_rank_mismatch():
    with pytest.raises(RankMismatchError):
        magnus_compare(w("x1", 1), w("x1", 2))


def test_series_compare_agree():
    verdict = series_compare(magnus_expand(w("[x1, x2]"), 1), magnus_expand(Word.identity(2), 1))
    assert verdict.verdict is Verdict.AGREE


def test_lower_central_depth():
    assert lower_central_depth(w("x1"), 3) == 1
    assert lower_central_depth(w("[x1, x2]"), 3) == 2
    assert lower_central_depth(Word.identity(2), 3) is None


def test_expansion_cache():
    cache = ExpansionCache()
    magnus_expand(w("x1 x2"), 3, cache)
    magnus_expand(w("x1 x2"), 3, cache)
    assert cache.hits == 1
    assert cache.misses == 1
    assert len(cache) == 1


def test_expansion_cache_is_bounded():
    cache = ExpansionCache(maxsize=2)
    for text in ("x1", "x2", "x1 x2"):
        magnus_expand(w(text), 3, cache)
    assert len(cache) == 2
    magnus_expand(w("x1"), 3, cache)
    assert cache.misses == 4
    magnus_expand(w("x1 x2"), 3, cache)
    assert cache.hits == 1
    cache.clear()
    assert len(cache) == 0


def test_shared_cache_size_comes_from_settings(monkeypatch):
    monkeypatch.setenv("MAGNUS_CACHE_SIZE", "8")
    get_settings.cache_clear()
    shared_cache.cache_clear()
    try:
        assert shared_cache().maxsize == 8
        assert shared_cache() is shared_cache()
    finally:
        get_settings.cache_clear()
        shared_cache.cache_clear()


def letter_expansion(generator: int, step: int, degree: int):
    x = series_variable(2, generator, degree)
    if step > 0:
        return series_one(2, degree) + x
    return geometric_inverse(series_one(2, degree) + x)


def assert_letterwise_product(word: Word, degree: int):
    product = series_one(2, degree)
    for generator, step in word.letters():
        product = product * letter_expansion(generator, step, degree)
    assert magnus_expand(word, degree) == product


def test_expansion_is_the_product_of_letter_series():
    for word in enumerate_reduced_words(2, 3):
        assert_letterwise_product(word, 5)


@pytest.mark.slow
def test_expansion_is_the_product_of_letter_series_up_to_length_five():
    for word in enumerate_reduced_words(2, 5):
        assert_letterwise_product(word, 5)


def test_expansion_is_multiplicative_on_short_pairs():
    short = enumerate_reduced_words(2, 2)
    for degree in range(6):
        for u, v in itertools.product(short, repeat=2):
            assert magnus_expand(u * v, degree) == magnus_expand(u, degree) * magnus_expand(v, degree)


@given(words(2, 6), words(2, 6))
def test_expansion_is_multiplicative_on_random_pairs(u, v):
    assert magnus_expand(u * v, 4) == magnus_expand(u, 4) * magnus_expand(v, 4)


def test_generator_series_and_truncation():
    for degree in range(5):
        assert magnus_expand(w("x2"), degree) == series_one(2, degree) + series_variable(2, 2, degree)
    for word in enumerate_reduced_words(2, 3):
        assert truncate(magnus_expand(word, 5), 3) == magnus_expand(word, 3)
    assert magnus_expand(Word.identity(2), 4) == series_one(2, 4)


@given(words(2, 4), words(2, 4), words(2, 3))
def test_order_is_antisymmetric_and_bi_invariant(u, v, g):
    verdict = magnus_compare(u, v).as_int()
    assert magnus_compare(v, u).as_int() == -verdict
    assert magnus_compare(g * u, g * v).as_int() == verdict
    assert magnus_compare(u * g, v * g).as_int() == verdict

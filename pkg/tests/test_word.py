import itertools

import pytest
from hypothesis import given

from groups.errors import GeneratorIndexError, WordSyntaxError
from groups.word import (
    Word,
    commutator,
    conjugate,
    enumerate_reduced_words,
    exponent_sums,
    free_reduce,
    invert,
    multiply,
    power,
)
from strategies import raw_words, words


def test_free_reduce_cancels_and_merges():
    w = free_reduce([1, 2, -2, 1, 3], 3)
    assert w.syllables == ((1, 2), (3, 1))
    assert w.length == 3


def test_free_reduce_to_identity():
    assert free_reduce([1, 2, -2, -1], 2).is_identity()


def test_generator_out_of_range():
    with pytest.raises(GeneratorIndexError):
        free_reduce([3], 2)


def test_format():
    assert Word.parse("x1 x2^-1", 2).format() == "x1 x2^-1"
    assert Word.identity(2).format() == "1"
    assert Word.parse("x1 x1 x1", 1).format() == "x1^3"


def test_parse_commutator_and_groups():
    a, b = Word.generator(2, 1), Word.generator(2, 2)
    assert Word.parse("[x1, x2]", 2) == commutator(a, b)
    assert Word.parse("x1 x2 x1^-1 x2^-1", 2) == commutator(a, b)
    assert Word.parse("(x1 x2)^-2", 2) == power(invert(a * b), 2)
    assert Word.parse("x1*x2", 2) == a * b
    assert Word.parse("1", 2).is_identity()


def test_commutator_and_conjugate_conventions():
    a, b = Word.generator(2, 1), Word.generator(2, 2)
    assert commutator(a, b).format() == "x1 x2 x1^-1 x2^-1"
    assert conjugate(a, b).format() == "x2^-1 x1 x2"


def test_group_laws():
    u = Word.parse("x1 x2^2 x1^-1", 2)
    v = Word.parse("x2^-1 x1", 2)
    assert multiply(u, invert(u)).is_identity()
    assert invert(multiply(u, v)) == multiply(invert(v), invert(u))
    assert power(u, 0).is_identity()
    assert power(u, -1) == invert(u)


def test_exponent_sums():
    w = Word.parse("x1 x2 x1^-1 x2^3", 2)
    assert exponent_sums(w).entries == (0, 4)
    assert str(exponent_sums(w)) == "(0,4)"


@pytest.mark.parametrize("text,column", [
    ("", 1),
    ("x1 ^", 5),
    ("x1 )", 4),
    ("x1 x3", 4),
    ("[x1 x2]", 7),
])
def test_syntax_error_columns(text, column):
    with pytest.raises(WordSyntaxError) as info:
        Word.parse(text, 2)
    assert info.value.column == column
    assert f"at column {column}" in str(info.value)


def test_unknown_generator_message():
    with pytest.raises(WordSyntaxError, match="generator x3 out of range 1..2"):
        Word.parse("x1 x3", 2)


def test_enumerate_counts_by_length():
    counts = [len(enumerate_reduced_words(2, length)) for length in range(5)]
    assert counts == [1, 5, 17, 53, 161]
    words = enumerate_reduced_words(2, 3)
    assert len(set(words)) == len(words)


def test_high_powers_stay_one_syllable():
    big = Word.parse("x1^1000000000", 2)
    assert big.syllables == ((1, 10 ** 9),)
    assert big.length == 10 ** 9
    assert Word.parse("(x1^-1)^-1000000000", 2) == big
    assert power(Word.generator(2, 2), -10 ** 9).syllables == ((2, -10 ** 9),)
    assert multiply(big, Word.parse("x1^-999999999", 2)).format() == "x1"


@pytest.mark.parametrize("k", range(-4, 5))
def test_power_matches_repeated_product(k):
    for text in ("x1 x2^-1", "x1 x2 x1^-1", "[x1, x2]"):
        a = Word.parse(text, 2)
        expected = Word.identity(2)
        for _ in range(abs(k)):
            expected = multiply(expected, a if k > 0 else invert(a))
        assert power(a, k) == expected
        assert Word.parse(f"({text})^{k}", 2) == expected


def test_conjugate_power_collapses():
    a = Word.parse("x1 x2 x1^-1", 2)
    assert power(a, 1000).format() == "x1 x2^1000 x1^-1"


@given(raw_words(3, 12))
def test_free_reduce_is_idempotent(raw):
    once = free_reduce(raw, 3)
    assert free_reduce(list(once.syllables), 3) == once
    assert free_reduce([g * s for g, s in once.letters()], 3) == once
    assert all(e != 0 for _, e in once.syllables)
    assert all(a[0] != b[0] for a, b in zip(once.syllables, once.syllables[1:]))


def test_inverse_on_every_short_word():
    for u in enumerate_reduced_words(2, 4):
        assert multiply(u, invert(u)).is_identity()
        assert multiply(invert(u), u).is_identity()
        assert invert(invert(u)) == u


def test_associativity_on_short_triples():
    short = enumerate_reduced_words(2, 2)
    for a, b, c in itertools.product(short, repeat=3):
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@pytest.mark.slow
def test_associativity_on_every_triple_up_to_length_four():
    short = enumerate_reduced_words(2, 4)
    for a, b, c in itertools.product(short, repeat=3):
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@given(words(3), words(3), words(3))
def test_group_laws_on_random_words(a, b, c):
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    assert invert(multiply(a, b)) == multiply(invert(b), invert(a))
    assert multiply(a, Word.identity(3)) == a


def test_exponent_sums_is_a_homomorphism():
    short = enumerate_reduced_words(2, 3)
    for u, v in itertools.product(short, repeat=2):
        total = exponent_sums(multiply(u, v)).entries
        assert total == tuple(a + b for a, b in zip(exponent_sums(u).entries,
                                                    exponent_sums(v).entries))
    assert exponent_sums(Word.identity(2)).entries == (0, 0)

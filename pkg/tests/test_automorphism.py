import itertools

import numpy as np
import pytest
from hypothesis import given

from groups.automorphism import (
    EndoTable,
    apply,
    compose,
    compose_all,
    epsilon,
    epsilon_commutator,
    exponent_matrix,
    is_IA,
    partial_conjugation,
    random_ia_pair,
    verify_inverse_pair,
)
from groups.errors import BiorderError, RankMismatchError
from groups.magnus import magnus_compare
from groups.word import Word, enumerate_reduced_words
from strategies import ia_pairs, words


def w(text: str, rank: int = 3) -> Word:
    return Word.parse(text, rank)


def test_epsilon_images():
    table = epsilon(3, 1, 2)
    assert table.image(1).format() == "x2^-1 x1 x2"
    assert table.image(2).format() == "x2"
    assert table.format().splitlines()[0] == "x1 -> x2^-1 x1 x2"


def test_parse_table_text():
    parsed = EndoTable.parse("x1 -> x2^-1 x1 x2  # conjugate\n", 3)
    assert parsed == epsilon(3, 1, 2)
    assert EndoTable.parse("x1 -> x1; x3 -> x3 [x1, x2]", 3) == epsilon_commutator(3, 3, 1, 2)


def test_parse_table_rejects_duplicates():
    with pytest.raises(BiorderError, match="listed twice"):
        EndoTable.parse("x1 -> x2; x1 -> x3", 3)


def test_apply_is_a_homomorphism():
    table = epsilon_commutator(3, 1, 2, 3)
    u, v = w("x1 x2^-1"), w("x3 x1^2")
    assert apply(table, u * v) == apply(table, u) * apply(table, v)
    assert table(u) == apply(table, u)


def test_apply_keeps_high_powers_compact():
    table = EndoTable.parse("x1 -> x2^3; x2 -> x1", 2)
    big = Word.parse("x1^1000000000 x2^-5", 2)
    assert apply(table, big).syllables == ((2, 3 * 10 ** 9), (1, -5))
    conjugated = apply(epsilon(2, 1, 2), Word.parse("x1^-1000000000", 2))
    assert conjugated.format() == "x2^-1 x1^-1000000000 x2"


def test_apply_rank_mismatch():
    with pytest.raises(RankMismatchError):
        apply(epsilon(3, 1, 2), w("x1", 2))


def test_compose_order():
    s, t = epsilon(3, 1, 2), epsilon(3, 2, 3)
    u = w("x1 x2")
    assert apply(compose(s, t), u) == apply(s, apply(t, u))
    assert compose_all([s, t], 3) == compose(s, t)


def test_inverse_pairs():
    assert verify_inverse_pair(epsilon(3, 1, 2), epsilon(3, 1, 2, inverse=True))
    assert verify_inverse_pair(epsilon_commutator(3, 1, 2, 3),
                               epsilon_commutator(3, 1, 2, 3, inverse=True))
    assert not verify_inverse_pair(epsilon(3, 1, 2), epsilon(3, 1, 2))


def test_partial_conjugation_is_a_product_of_epsilons():
    product = compose_all([epsilon(3, 1, 2), epsilon(3, 3, 2)], 3)
    assert partial_conjugation(3, 3, 2) == product


def test_is_IA():
    assert is_IA(epsilon(3, 1, 2))
    assert is_IA(epsilon_commutator(3, 1, 2, 3))
    flip = EndoTable(1, (Word.generator(1, 1, -1),))
    assert not is_IA(flip)
    swap = EndoTable(2, (Word.generator(2, 2), Word.generator(2, 1)))
    assert not is_IA(swap)
    assert np.array_equal(exponent_matrix(swap), np.array([[0, 1], [1, 0]]))


def test_identity_table():
    assert EndoTable.identity(3).is_identity()
    assert not epsilon(3, 1, 2).is_identity()


def test_random_ia_pair_is_seeded_and_inverse():
    first = random_ia_pair(3, np.random.default_rng(7))
    second = random_ia_pair(3, np.random.default_rng(7))
    assert first == second
    table, inverse = first
    assert is_IA(table)
    assert verify_inverse_pair(table, inverse)


def test_ia_automorphism_preserves_magnus_order():
    table, _ = random_ia_pair(3, np.random.default_rng(11))
    pairs = [("x1", "x2"), ("[x1, x2]", "1"), ("x3^-1 x1", "x2 x3")]
    for left, right in pairs:
        u, v = w(left), w(right)
        assert magnus_compare(u, v).as_int() == magnus_compare(table(u), table(v)).as_int()


def test_compose_with_identity_and_inner_cancel():
    t = epsilon(3, 1, 2)
    identity = EndoTable.identity(3)
    assert compose(identity, t) == t
    assert compose(t, identity) == t
    by_x2 = EndoTable.parse("x1 -> x2^-1 x1 x2; x3 -> x2^-1 x3 x2", 3)
    by_x2_inv = EndoTable.parse("x1 -> x2 x1 x2^-1; x3 -> x2 x3 x2^-1", 3)
    assert compose(by_x2, by_x2_inv).is_identity()


def rank_two_ia_generators():
    return [epsilon(2, i, j, inverse=inverse)
            for i, j in ((1, 2), (2, 1)) for inverse in (False, True)]


def assert_verdicts_kept(tables, pairs):
    for table in tables:
        for u, v in pairs:
            assert magnus_compare(u, v).as_int() == magnus_compare(table(u), table(v)).as_int()


def test_ia_generators_keep_verdicts_on_short_pairs():
    short = enumerate_reduced_words(2, 2)
    assert_verdicts_kept(rank_two_ia_generators(), itertools.product(short, repeat=2))


@pytest.mark.slow
def test_ia_generators_keep_verdicts_up_to_length_four():
    short = enumerate_reduced_words(2, 4)
    for table in rank_two_ia_generators():
        assert_verdicts_kept([table], itertools.product(short, repeat=2))


@given(ia_pairs(3), words(3, 5), words(3, 5))
def test_random_ia_tables_keep_verdicts(pair, u, v):
    table, inverse = pair
    assert_verdicts_kept([table, inverse], [(u, v)])


def test_ia_generators_are_closed_under_compose():
    generators = [epsilon(3, i, j) for i, j in itertools.permutations(range(1, 4), 2)]
    generators += [epsilon_commutator(3, 1, 2, 3), epsilon_commutator(3, 2, 1, 3, inverse=True)]
    for s, t in itertools.product(generators, repeat=2):
        assert is_IA(compose(s, t))
        assert is_IA(compose_all([s, t, s], 3))


@given(ia_pairs(3), ia_pairs(3))
def test_random_ia_tables_are_closed_under_compose(first, second):
    (s, s_inverse), (t, t_inverse) = first, second
    product = compose(s, t)
    assert is_IA(product)
    assert verify_inverse_pair(product, compose(t_inverse, s_inverse))

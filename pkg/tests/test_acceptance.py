from functools import cmp_to_key

import pytest

from groups.automorphism import apply, compose, random_ia_pair
from groups.magnus import magnus_compare
from groups.reduced_magnus import reduced_expand, reduced_relator
from groups.word import enumerate_reduced_words, invert
from presets.bundle import witness_image
from presets.families import PresetFactory, partial_inner, upper_mccool
from proptest.contexts import FreeGroupContext, TowerContext
from proptest.generators import make_rng, random_word
from proptest.suites import run_suite
from tower.normal_form import tower_multiply

TOWER_PRESETS = ["pure_braid:3", "pure_braid:4", "upper_mccool:4", "partial_inner:3",
                 "pure_monomial:2,2"]


def tower_context(name: str) -> TowerContext:
    return TowerContext(PresetFactory.create_from_text(name).tower, f"--preset {name}")


def test_reduced_relators_vanish_for_short_conjugators():
    for g in enumerate_reduced_words(3, 3):
        assert reduced_expand(g * invert(g)).is_one()
        for j in range(1, 4):
            assert reduced_expand(reduced_relator(j, g)).is_one()


@pytest.mark.slow
def test_magnus_order_separates_words_up_to_length_six():
    words = enumerate_reduced_words(2, 6)
    assert len(words) == 1457
    ordered = sorted(words, key=cmp_to_key(lambda a, b: magnus_compare(a, b).as_int()))
    for left, right in zip(ordered, ordered[1:]):
        assert magnus_compare(left, right).is_less


@pytest.mark.slow
def test_bi_invariance_rank_three():
    result = run_suite("bi-invariance", FreeGroupContext(3), 0, 10000, 6)
    assert result.ok, result.lines()


@pytest.mark.slow
def test_ia_invariance_rank_three():
    result = run_suite("ia-invariance", FreeGroupContext(3), 0, 1000, 6)
    assert result.ok, result.lines()


def assert_ia_tables_keep_verdicts(tables: int, pairs: int, seed: int):
    rng = make_rng(seed)
    for _ in range(tables):
        table, _ = random_ia_pair(3, rng)
        for _ in range(pairs):
            u, v = random_word(rng, 3, 6), random_word(rng, 3, 6)
            before = magnus_compare(u, v)
            after = magnus_compare(apply(table, u), apply(table, v))
            assert before.as_int() == after.as_int(), (table.format(), u.format(), v.format())


def test_each_ia_table_keeps_many_verdicts():
    assert_ia_tables_keep_verdicts(20, 50, 11)


# one table per 10^3 pairs, 10^3 tables
@pytest.mark.slow
def test_thousand_ia_tables_on_thousand_pairs_each():
    assert_ia_tables_keep_verdicts(1000, 1000, 0)


@pytest.mark.slow
@pytest.mark.parametrize("name", TOWER_PRESETS)
@pytest.mark.parametrize("suite,iterations", [
    ("bi-invariance", 1000),
    ("positive-cone", 1000),
    ("gen-torsion", 1000),
    ("ab-respecting", 500),
    ("diagram", 500),
])
def test_tower_presets(name, suite, iterations):
    result = run_suite(suite, tower_context(name), 7, iterations, 6)
    assert result.ok, result.lines()


@pytest.mark.slow
@pytest.mark.parametrize("bundle", [upper_mccool(3), upper_mccool(4),
                                    partial_inner(3), partial_inner(4)],
                         ids=lambda b: b.name)
def test_witness_agrees_with_tower_multiplication(bundle):
    context = TowerContext(bundle.tower, "")
    rng = make_rng(3)
    for _ in range(1000):
        g, h = context.random_element(rng, 6), context.random_element(rng, 6)
        product = tower_multiply(g, h, bundle.tower)
        assert witness_image(bundle, product) == compose(witness_image(bundle, g),
                                                         witness_image(bundle, h))

import numpy as np
import pytest

from groups.errors import InvalidTowerError, SuiteContextError, UnknownSuiteError
from groups.ordering import OrderVerdict, Verdict
from groups.word import Word
from presets.families import klein_bottle
from proptest.contexts import FreeGroupContext, TowerContext, shrink_word
from proptest.generators import make_rng, random_word, tower_alphabet
from proptest.suites import PropertySuiteFactory, run_suite
from tower.spec import TowerSpec

SUITES = ["order-axioms", "bi-invariance", "ia-invariance", "positive-cone",
          "gen-torsion", "ab-respecting"]


class ShortlexContext(FreeGroupContext):
    """A total order that is not bi-invariant"""

    def compare(self, a, b):
        key_a, key_b = (a.length, tuple(a.letters())), (b.length, tuple(b.letters()))
        if key_a == key_b:
            return OrderVerdict.equal()
        return OrderVerdict(Verdict.LESS if key_a < key_b else Verdict.GREATER)


def test_random_word_is_seeded():
    assert random_word(make_rng(3), 3, 6) == random_word(make_rng(3), 3, 6)
    rng = np.random.default_rng(5)
    assert all(random_word(rng, 2, 4).length <= 4 for _ in range(50))


def test_tower_alphabet():
    assert tower_alphabet([1, 2]) == [(1, 1), (2, 1), (2, 2)]
    assert tower_alphabet([1, 2, 3], below=3) == [(1, 1), (2, 1), (2, 2)]


def test_shrink_word():
    assert shrink_word(Word.parse("x1 x2", 2)) == [Word.parse("x2", 2), Word.parse("x1", 2)]
    assert shrink_word(Word.parse("x1 x2 x1^-1", 2))[1] == Word.identity(2)


def test_order_axioms_exhaustive_by_default():
    result = run_suite("order-axioms", FreeGroupContext(2), 0, 10, 3)
    assert result.ok
    assert result.elements == 53
    assert result.total == 53 * 53
    assert result.line() == "PASS 2809/2809 (exhaustive, 53 elements)"


def test_order_axioms_exhaustive_reduced():
    context = FreeGroupContext(2, reduced=True)
    result = run_suite("order-axioms", context, 0, 10, 2, exhaustive=True)
    assert result.ok
    assert result.elements == len(context.enumerate(2))


@pytest.mark.parametrize("suite", SUITES)
def test_free_group_suites_pass(suite):
    result = run_suite(suite, FreeGroupContext(3), 1, 40, 4, exhaustive=False)
    assert result.ok, result.lines()
    assert result.passed == 40


@pytest.mark.parametrize("suite", ["order-axioms", "bi-invariance", "ia-invariance", "gen-torsion"])
def test_reduced_free_group_suites_pass(suite):
    result = run_suite(suite, FreeGroupContext(3, reduced=True), 2, 40, 4, exhaustive=False)
    assert result.ok, result.lines()


@pytest.mark.parametrize("suite", SUITES + ["diagram"])
def test_tower_suites_pass(suite, mccool3):
    context = TowerContext(mccool3, "--preset upper_mccool:3")
    result = run_suite(suite, context, 4, 30, 4, exhaustive=False)
    assert result.ok, result.lines()


def test_seed_fixes_the_report():
    first = run_suite("bi-invariance", FreeGroupContext(2), 9, 25, 4).record()
    second = run_suite("bi-invariance", FreeGroupContext(2), 9, 25, 4).record()
    assert first == second
    assert first["status"] == "PASS"
    assert first["exhaustive"] is False


def test_failure_is_shrunk_and_rechecked():
    context = ShortlexContext(2)
    result = run_suite("bi-invariance", context, 0, 200, 4, exhaustive=False)
    assert not result.ok
    lines = result.lines()
    assert lines[0].startswith("FAIL ")
    assert lines[-1].startswith('recheck: biorder compare --rank 2 "')
    assert result.record()["status"] == "FAIL"
    assert result.counterexample.case_index < 200


def test_diagram_needs_a_retraction():
    with pytest.raises(SuiteContextError):
        run_suite("diagram", FreeGroupContext(2), 0, 5, 3)
    with pytest.raises(SuiteContextError):
        run_suite("ia-invariance", TowerContext(TowerSpec.direct_product([2]), ""), 0, 5, 3)


def test_exhaustive_only_for_order_axioms():
    with pytest.raises(SuiteContextError):
        run_suite("bi-invariance", FreeGroupContext(2), 0, 5, 2, exhaustive=True)


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError, match="Unsupported property suite: nope"):
        PropertySuiteFactory.create_suite("nope")
    assert "diagram" in PropertySuiteFactory.get_available_suites()


def test_invalid_tower_context():
    with pytest.raises(InvalidTowerError):
        TowerContext(klein_bottle().tower, "")


def test_tower_enumerate_is_distinct(mccool3):
    elements = TowerContext(mccool3, "").enumerate(2)
    assert len(elements) == len(set(elements))
    # g1.1 commutes with g2.2, so 4 of the 30 two-letter spellings repeat
    assert len(elements) == 33


@pytest.mark.slow
def test_exhaustive_rank_two_length_four():
    result = run_suite("order-axioms", FreeGroupContext(2), 0, 10, 4)
    assert result.ok
    assert result.elements == 161

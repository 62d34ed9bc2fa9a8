"""
Property suites for bi-ordered groups.

Cases are drawn up front from one seeded generator and evaluated in case
order, so a seed fixes the whole report. The first failing case is shrunk
greedily and printed with a ``compare`` command that re-checks it.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from itertools import permutations
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np

from groups.errors import SuiteContextError, UnknownSuiteError
from proptest.contexts import FreeGroupContext, OrderContext, shrink_word
from proptest.generators import make_rng, random_word

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

Case = Tuple[Any, ...]
SHRINK_STEPS = 200
# order-axioms on a free context goes exhaustive by default up to this length
EXHAUSTIVE_DEFAULT_MAX_LENGTH = 4


@dataclass(frozen=True)
class Failure:
    """What went wrong, and the two elements a compare call needs to see it"""
    detail: str
    left: str
    right: str
    command: str = "compare"


@dataclass
class Counterexample:
    """Shrunk failing case"""
    case_index: int
    detail: str
    elements: List[str]
    recheck: str


@dataclass
class SuiteResult:
    """Outcome of one suite run"""
    suite: str
    context: str
    seed: int
    passed: int
    total: int
    elements: Optional[int] = None
    counterexample: Optional[Counterexample] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None and self.passed == self.total

    def line(self) -> str:
        text = f"{'PASS' if self.ok else 'FAIL'} {self.passed}/{self.total}"
        if self.elements is not None:
            text += f" (exhaustive, {self.elements} elements)"
        return text

    def lines(self) -> List[str]:
        out = [self.line()]
        if self.counterexample:
            ce = self.counterexample
            out.append(f"counterexample (case {ce.case_index}): {ce.detail}")
            out.extend(f"  {text}" for text in ce.elements)
            out.append(f"recheck: {ce.recheck}")
        return out

    def record(self) -> Dict[str, Any]:
        ce = self.counterexample
        return {
            "command": "proptest",
            "suite": self.suite,
            "context": self.context,
            "seed": self.seed,
            "status": "PASS" if self.ok else "FAIL",
            "passed": self.passed,
            "total": self.total,
            "exhaustive": self.elements is not None,
            "counterexample": ce.detail if ce else None,
            "recheck": ce.recheck if ce else None,
        }


class PropertySuite(ABC):
    """Base class for property suites"""

    name = ""
    description = ""

    def prepare(self, context: OrderContext):
        """Raise SuiteContextError when the suite cannot run in context"""

    @abstractmethod
    def draw(self, context: OrderContext, rng: np.random.Generator, max_length: int) -> Case:
        pass

    @abstractmethod
    def check(self, context: OrderContext, case: Case) -> Optional[Failure]:
        pass

    def size(self, context: OrderContext, case: Case) -> int:
        return sum(context.size(x) for x in case)

    def candidates(self, context: OrderContext, case: Case) -> Iterator[Case]:
        for position, element in enumerate(case):
            for smaller in context.shrink(element):
                yield case[:position] + (smaller,) + case[position + 1:]

    def describe(self, context: OrderContext, case: Case) -> List[str]:
        return [context.format(x) for x in case]

    def shrink(self, context: OrderContext, case: Case) -> Tuple[Case, Failure]:
        """Drop single letters while the property still fails"""
        failure = self.check(context, case)
        for _ in range(SHRINK_STEPS):
            current = self.size(context, case)
            for candidate in self.candidates(context, case):
                if self.size(context, candidate) >= current:
                    continue
                candidate_failure = self.check(context, candidate)
                if candidate_failure is not None:
                    case, failure = candidate, candidate_failure
                    break
            else:
                break
        return case, failure

    def run(self, context: OrderContext, seed: int, iterations: int, max_length: int) -> SuiteResult:
        """
        Run the suite on iterations seeded cases

        Args:
            context: Group and order under test
            seed: Seed of the numpy generator
            iterations: Number of cases
            max_length: Maximum letter count per drawn element

        Returns:
            A SuiteResult with the shrunk first counterexample, if any
        """
        self.prepare(context)
        logger.info(f"Running suite {self.name} on {context.name}: seed {seed}, {iterations} cases")
        rng = make_rng(seed)
        cases = [self.draw(context, rng, max_length) for _ in range(iterations)]
        passed = 0
        first: Optional[Tuple[int, Case]] = None
        for index, case in enumerate(cases):
            if self.check(context, case) is None:
                passed += 1
            elif first is None:
                first = (index, case)
        result = SuiteResult(self.name, context.name, seed, passed, iterations)
        if first is not None:
            index, case = first
            case, failure = self.shrink(context, case)
            result.counterexample = Counterexample(
                index, failure.detail, self.describe(context, case),
                f'biorder {failure.command} {context.flags} "{failure.left}" "{failure.right}"'
                if failure.command == "compare"
                else f'biorder {failure.command} {context.flags} "{failure.left}"',
            )
            logger.warning(f"Suite {self.name} failed at case {index}: {failure.detail}")
        return result

    def run_exhaustive(self, context: OrderContext, max_length: int) -> SuiteResult:
        raise SuiteContextError(f"Suite {self.name} has no exhaustive mode")


class OrderAxiomsSuite(PropertySuite):
    """Antisymmetry, trichotomy and transitivity"""

    name = "order-axioms"
    description = "strict total order on random triples, or exhaustively on short words"

    def draw(self, context, rng, max_length) -> Case:
        return tuple(context.random_element(rng, max_length) for _ in range(3))

    def check(self, context, case) -> Optional[Failure]:
        for a, b in permutations(case, 2):
            verdict = context.compare(a, b)
            if verdict.as_int() != -context.compare(b, a).as_int():
                return Failure("comparison is not antisymmetric", context.format(a), context.format(b))
            if verdict.is_equal != context.equal(a, b):
                return Failure("EQUAL disagrees with group equality",
                               context.format(a), context.format(b))
        for a, b, c in permutations(case, 3):
            if (context.compare(a, b).is_less and context.compare(b, c).is_less
                    and not context.compare(a, c).is_less):
                return Failure(f"{context.format(a)} < {context.format(b)} < {context.format(c)} "
                               "but not transitive", context.format(a), context.format(c))
        return None

    def run_exhaustive(self, context: OrderContext, max_length: int) -> SuiteResult:
        """All pairs of distinct elements of length <= max_length, checked as a verdict matrix"""
        elements = context.enumerate(max_length)
        n = len(elements)
        logger.info(f"Running exhaustive {self.name} on {n} elements of {context.name}")
        matrix = np.zeros((n, n), dtype=np.int64)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                matrix[i, j] = context.compare(a, b).as_int()

        less = matrix < 0
        through = (less.astype(np.int64) @ less.astype(np.int64)) > 0
        off_diagonal = ~np.eye(n, dtype=bool)
        checks = [
            ("comparison of an element with itself is not EQUAL", np.eye(n, dtype=bool) & (matrix != 0)),
            ("comparison is not antisymmetric", matrix != -matrix.T),
            ("distinct elements compare EQUAL", off_diagonal & (matrix == 0)),
            ("order is not transitive", through & ~less),
        ]
        violations = np.zeros((n, n), dtype=bool)
        for _, mask in checks:
            violations |= mask
        result = SuiteResult(self.name, context.name, 0, int(n * n - violations.sum()), n * n, elements=n)
        for detail, mask in checks:
            hits = np.argwhere(mask)
            if len(hits):
                i, j = (int(x) for x in hits[0])
                shown = [elements[i], elements[j]]
                if detail == "order is not transitive":
                    k = int(np.flatnonzero(less[i] & less[:, j])[0])
                    shown = [elements[i], elements[k], elements[j]]
                left, right = context.format(elements[i]), context.format(elements[j])
                result.counterexample = Counterexample(
                    i * n + j, detail, [context.format(x) for x in shown],
                    f'biorder compare {context.flags} "{left}" "{right}"',
                )
                logger.warning(f"Exhaustive {self.name} failed: {detail} at {left}, {right}")
                break
        return result


class BiInvarianceSuite(PropertySuite):
    """u < v implies c u d < c v d"""

    name = "bi-invariance"
    description = "verdicts survive multiplication on both sides"

    def draw(self, context, rng, max_length) -> Case:
        return tuple(context.random_element(rng, max_length) for _ in range(4))

    def check(self, context, case) -> Optional[Failure]:
        u, v, c, d = case
        before = context.compare(u, v)
        left = context.multiply(context.multiply(c, u), d)
        right = context.multiply(context.multiply(c, v), d)
        after = context.compare(left, right)
        if before.as_int() != after.as_int():
            return Failure(f"u vs v is {before.verdict.value} but c u d vs c v d is {after.verdict.value}",
                           context.format(left), context.format(right))
        return None


class IAInvarianceSuite(PropertySuite):
    """IA automorphisms, or actions of the lower tower on a kernel factor, keep verdicts"""

    name = "ia-invariance"
    description = "order preserved by automorphisms trivial on H1"

    def prepare(self, context):
        if not context.has_lower_action:
            raise SuiteContextError(f"{self.name} needs a tower with at least two factors")

    def draw(self, context, rng, max_length) -> Case:
        transform = context.random_transform(rng, max_length)
        u = random_word(rng, transform.rank, max_length)
        v = random_word(rng, transform.rank, max_length)
        return (u, v, transform)

    def size(self, context, case) -> int:
        return case[0].length + case[1].length

    def candidates(self, context, case) -> Iterator[Case]:
        u, v, transform = case
        for smaller in shrink_word(u):
            yield (smaller, v, transform)
        for smaller in shrink_word(v):
            yield (u, smaller, transform)

    def describe(self, context, case) -> List[str]:
        u, v, transform = case
        return [transform.format(u), transform.format(v), f"map: {transform.description}"]

    def check(self, context, case) -> Optional[Failure]:
        u, v, transform = case
        before = transform.compare(u, v)
        image_u, image_v = transform.apply(u), transform.apply(v)
        after = transform.compare(image_u, image_v)
        if before.as_int() != after.as_int():
            return Failure(f"verdict {before.verdict.value} became {after.verdict.value} "
                           f"under {transform.description}",
                           transform.format(image_u), transform.format(image_v))
        return None


class PositiveConeSuite(PropertySuite):
    """P P in P and a P a^-1 in P"""

    name = "positive-cone"
    description = "positive cone closed under products and conjugation"

    def draw(self, context, rng, max_length) -> Case:
        return tuple(context.random_element(rng, max_length) for _ in range(3))

    def check(self, context, case) -> Optional[Failure]:
        g, h, a = case
        identity = context.format(context.identity())
        if context.is_positive(g) and context.is_positive(h):
            product = context.multiply(g, h)
            if not context.is_positive(product):
                return Failure("product of positive elements is not positive",
                               identity, context.format(product))
        for x in (g, h):
            if context.is_positive(x):
                conjugate = context.conjugate(x, a)
                if not context.is_positive(conjugate):
                    return Failure("conjugate of a positive element is not positive",
                                   identity, context.format(conjugate))
        return None


class GeneralizedTorsionSuite(PropertySuite):
    """No product of conjugates of g != 1 is trivial"""

    name = "gen-torsion"
    description = "products of up to five conjugates keep the sign of g"

    def draw(self, context, rng, max_length) -> Case:
        count = int(rng.integers(1, 6))
        return tuple(context.random_element(rng, max_length) for _ in range(count + 1))

    def check(self, context, case) -> Optional[Failure]:
        g, conjugators = case[0], case[1:]
        identity = context.identity()
        sign = context.compare(identity, g).as_int()
        if sign == 0:
            return None
        product = identity
        for h in conjugators:
            conjugate = context.conjugate(g, h)
            if context.compare(identity, conjugate).as_int() != sign:
                return Failure("a conjugate of g has the opposite sign",
                               context.format(identity), context.format(conjugate))
            product = context.multiply(product, conjugate)
        if context.compare(identity, product).as_int() != sign:
            detail = ("product of conjugates is trivial" if context.equal(product, identity)
                      else "product of conjugates has the wrong sign")
            return Failure(detail, context.format(identity), context.format(product))
        return None


class AbRespectingSuite(PropertySuite):
    """g < h implies ab(g) <= ab(h) lexicographically"""

    name = "ab-respecting"
    description = "abelianization is order-respecting"

    def draw(self, context, rng, max_length) -> Case:
        return tuple(context.random_element(rng, max_length) for _ in range(2))

    def check(self, context, case) -> Optional[Failure]:
        g, h = case
        verdict = context.compare(g, h)
        key_g, key_h = context.ab_key(g), context.ab_key(h)
        if (verdict.is_less and key_g > key_h) or (verdict.is_greater and key_g < key_h):
            return Failure(f"{verdict.verdict.value} but ab {key_g} vs {key_h}",
                           context.format(g), context.format(h))
        return None


class DiagramSuite(PropertySuite):
    """Dropping the last ab block equals ab of the retraction"""

    name = "diagram"
    description = "abelianization commutes with retraction"

    def prepare(self, context):
        if not context.has_retraction:
            raise SuiteContextError(f"{self.name} needs a tower with at least two factors")

    def draw(self, context, rng, max_length) -> Case:
        return (context.random_element(rng, max_length),)

    def check(self, context, case) -> Optional[Failure]:
        lhs, rhs = context.diagram(case[0])
        if lhs != rhs:
            text = context.format(case[0])
            return Failure(f"ab then drop gives {lhs}, retraction then ab gives {rhs}",
                           text, text, command="normalize")
        return None


SUITES: Dict[str, PropertySuite] = {
    suite.name: suite for suite in (
        OrderAxiomsSuite(),
        BiInvarianceSuite(),
        IAInvarianceSuite(),
        PositiveConeSuite(),
        GeneralizedTorsionSuite(),
        AbRespectingSuite(),
        DiagramSuite(),
    )
}


class PropertySuiteFactory:
    """Factory class to look up property suites"""

    @staticmethod
    def create_suite(name: str) -> PropertySuite:
        suite = SUITES.get(name.strip().lower())
        if suite is None:
            raise UnknownSuiteError(f"Unsupported property suite: {name}")
        return suite

    @staticmethod
    def get_available_suites() -> List[str]:
        """Get list of available property suites"""
        return list(SUITES)


def run_suite(name: str,
              context: OrderContext,
              seed: int,
              iterations: int,
              max_length: int,
              exhaustive: Optional[bool] = None) -> SuiteResult:
    """
    Run a suite by name

    order-axioms on a free context with max_length <= 4 is exhaustive unless
    exhaustive is False; otherwise a suite only goes exhaustive when asked.
    """
    suite = PropertySuiteFactory.create_suite(name)
    if exhaustive is None:
        exhaustive = (isinstance(suite, OrderAxiomsSuite)
                      and isinstance(context, FreeGroupContext)
                      and max_length <= EXHAUSTIVE_DEFAULT_MAX_LENGTH)
    if exhaustive:
        return suite.run_exhaustive(context, max_length)
    return suite.run(context, seed, iterations, max_length)

"""
Tower specs: iterated semidirect products of (reduced) free factors.

Factor 1 is the quotient end. The action of generator x_{i,p} on a higher
factor k is stored as a table with its inverse and encodes the relation
x_{i,p}^-1 y x_{i,p} = alpha(x_{i,p})(y). The action of a word composes its
generator tables in reading order.
"""

import logging
import operator
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from groups.automorphism import (
    EndoTable,
    WordEquality,
    apply,
    is_IA,
    verify_inverse_pair,
)
from groups.errors import BiorderError, InvalidTowerError
from groups.magnus import magnus_compare
from groups.ordering import OrderVerdict
from groups.reduced_magnus import reduced_compare, reduced_equal
from groups.word import Word
from utils.config import get_settings

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

# (source factor, source generator, target factor)
ActionKey = Tuple[int, int, int]
# (factor, generator, +1 or -1)
TowerLetter = Tuple[int, int, int]


class FactorKind(Enum):
    FREE = "Free"
    REDUCED_FREE = "ReducedFree"

    @classmethod
    def parse(cls, name: str) -> "FactorKind":
        key = name.strip().lower().replace("_", "").replace("-", "")
        if key == "free":
            return cls.FREE
        if key in ("reducedfree", "reduced"):
            return cls.REDUCED_FREE
        raise ValueError(f"Unsupported factor kind: {name}")


@dataclass(frozen=True)
class Factor:
    """One free factor of the tower"""
    rank: int
    kind: FactorKind = FactorKind.FREE


@dataclass(frozen=True)
class ActionPair:
    """alpha(x_{i,p}) on one target factor, with its inverse"""
    table: EndoTable
    inverse: EndoTable


@dataclass(frozen=True)
class ValidationIssue:
    """One violated invariant"""
    check: str
    location: str
    detail: str

    def __str__(self) -> str:
        return f"{self.check} at {self.location}: {self.detail}"


@dataclass
class ValidationReport:
    """Every violated invariant of a tower spec; empty means valid"""
    issues: List[ValidationIssue] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.issues

    def add(self, check: str, location: str, detail: str):
        self.issues.append(ValidationIssue(check, location, detail))

    def summary(self) -> str:
        if self.is_valid:
            return "valid"
        return "; ".join(str(issue) for issue in self.issues)

    def rows(self) -> List[Dict[str, str]]:
        return [{"check": i.check, "location": i.location, "detail": i.detail}
                for i in self.issues]


@dataclass(frozen=True)
class TowerSpec:
    """Factors 1..l with action tables; omitted actions are identities"""
    factors: Tuple[Factor, ...]
    actions: Dict[ActionKey, ActionPair] = field(default_factory=dict, hash=False)
    name: str = ""
    provenance: str = ""

    def __post_init__(self):
        if not self.factors:
            raise BiorderError("A tower needs at least one factor")
        object.__setattr__(self, "factors", tuple(self.factors))

    @classmethod
    def direct_product(cls,
                       ranks: Sequence[int],
                       kinds: Optional[Sequence[FactorKind]] = None,
                       name: str = "") -> "TowerSpec":
        kinds = kinds or [FactorKind.FREE] * len(ranks)
        return cls(tuple(Factor(r, k) for r, k in zip(ranks, kinds)), {}, name=name)

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def ranks(self) -> Tuple[int, ...]:
        return tuple(f.rank for f in self.factors)

    def factor(self, index: int) -> Factor:
        if not 1 <= index <= self.length:
            raise BiorderError(f"Factor index {index} out of range 1..{self.length}")
        return self.factors[index - 1]

    def action(self, source_factor: int, source_generator: int, target_factor: int) -> ActionPair:
        pair = self.actions.get((source_factor, source_generator, target_factor))
        if pair is None:
            identity = EndoTable.identity(self.factor(target_factor).rank)
            return ActionPair(identity, identity)
        return pair

    def truncated(self, m: int) -> "TowerSpec":
        """The tower of the first m factors"""
        if not 1 <= m <= self.length:
            raise BiorderError(f"Cannot truncate a tower of length {self.length} to {m}")
        actions = {key: pair for key, pair in self.actions.items() if key[2] <= m}
        return TowerSpec(self.factors[:m], actions, name=self.name, provenance=self.provenance)

    def equality(self, k: int) -> WordEquality:
        """Word equality in factor k's group"""
        if self.factor(k).kind is FactorKind.REDUCED_FREE:
            return reduced_equal
        return operator.eq

    def compare_in_factor(self, k: int, u: Word, v: Word) -> OrderVerdict:
        if self.factor(k).kind is FactorKind.REDUCED_FREE:
            return reduced_compare(u, v)
        return magnus_compare(u, v)

    def act(self, letters: Iterable[TowerLetter], word: Word, target_factor: int) -> Word:
        """u^-1 word u for u spelled by letters of lower factors"""
        for factor, generator, step in letters:
            if factor >= target_factor:
                raise BiorderError(
                    f"Factor {factor} does not act on factor {target_factor}"
                )
            pair = self.action(factor, generator, target_factor)
            word = apply(pair.table if step > 0 else pair.inverse, word)
        return word


def word_letters(factor: int, word: Word) -> List[TowerLetter]:
    return [(factor, generator, step) for generator, step in word.letters()]


def _check_structure(spec: TowerSpec, report: ValidationReport):
    guard = get_settings().reduced_max_rank
    for index, factor in enumerate(spec.factors, start=1):
        if factor.rank < 1:
            report.add("rank", f"factor {index}", f"rank must be positive, got {factor.rank}")
        if factor.kind is FactorKind.REDUCED_FREE and factor.rank > guard:
            report.add("rank", f"factor {index}",
                       f"reduced factor rank {factor.rank} exceeds guard {guard}")
    for (i, p, k), pair in sorted(spec.actions.items()):
        location = f"i={i}, p={p}, k={k}"
        if not (1 <= i < k <= spec.length):
            report.add("index", location, "source factor must be lower than target factor")
            continue
        if not 1 <= p <= spec.factors[i - 1].rank:
            report.add("index", location,
                       f"source generator out of range 1..{spec.factors[i - 1].rank}")
            continue
        target_rank = spec.factors[k - 1].rank
        for label, table in (("table", pair.table), ("inverse_table", pair.inverse)):
            if table.rank != target_rank:
                report.add("rank-mismatch", location,
                           f"{label} has rank {table.rank}, factor {k} has rank {target_rank}")


def _check_actions(spec: TowerSpec, report: ValidationReport):
    for (i, p, k), pair in sorted(spec.actions.items()):
        location = f"i={i}, p={p}, k={k}"
        for label, table in (("table", pair.table), ("inverse_table", pair.inverse)):
            if not is_IA(table):
                report.add("non-IA", location,
                           f"{label} does not act trivially on the abelianization")
        if not verify_inverse_pair(pair.table, pair.inverse, spec.equality(k)):
            report.add("inverse-pair", location, "table and inverse_table do not compose to the identity")


def _check_compatibility(spec: TowerSpec, report: ValidationReport):
    """Actions on factor k respect the relations between lower factors"""
    length = spec.length
    for k in range(3, length + 1):
        equal = spec.equality(k)
        generators = [Word.generator(spec.factors[k - 1].rank, z)
                      for z in range(1, spec.factors[k - 1].rank + 1)]
        for j in range(2, k):
            for i in range(1, j):
                for p in range(1, spec.factors[i - 1].rank + 1):
                    conjugated = spec.action(i, p, j).table
                    for q in range(1, spec.factors[j - 1].rank + 1):
                        lhs_letters = [(i, p, -1), (j, q, 1), (i, p, 1)]
                        rhs_letters = word_letters(j, conjugated.images[q - 1])
                        for z, generator in enumerate(generators, start=1):
                            lhs = spec.act(lhs_letters, generator, k)
                            rhs = spec.act(rhs_letters, generator, k)
                            if not equal(lhs, rhs):
                                report.add(
                                    "compatibility",
                                    f"g{i}.{p}, g{j}.{q} on g{k}.{z}",
                                    f"{lhs} != {rhs}",
                                )


def validate_spec(spec: TowerSpec) -> ValidationReport:
    """
    Check every tower invariant

    Returns:
        A report listing rank mismatches, non-IA tables, failed inverse pairs
        and incompatible actions; empty iff the spec is valid
    """
    report = ValidationReport()
    _check_structure(spec, report)
    if report.is_valid:
        _check_actions(spec, report)
    if report.is_valid:
        _check_compatibility(spec, report)
    if report.is_valid:
        logger.info(f"Tower spec {spec.name or spec.ranks} is valid")
    else:
        logger.warning(f"Tower spec {spec.name or spec.ranks} has {len(report.issues)} issue(s)")
    return report


def ensure_valid(spec: TowerSpec) -> TowerSpec:
    """Validate once per spec instance; raise InvalidTowerError on findings"""
    report = getattr(spec, "_report", None)
    if report is None:
        report = validate_spec(spec)
        object.__setattr__(spec, "_report", report)
    if not report.is_valid:
        raise InvalidTowerError(report)
    return spec

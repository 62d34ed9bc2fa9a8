from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

Monomial = Tuple[int, ...]


class Verdict(Enum):
    LESS = "LESS"
    EQUAL = "EQUAL"
    GREATER = "GREATER"
    # raw truncated series only
    AGREE = "AGREE"


class Sign(Enum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def format_monomial(monomial: Monomial) -> str:
    """X1^2*X2 style; the empty monomial prints as 1"""
    if not monomial:
        return "1"
    parts = []
    run_var, run_len = monomial[0], 0
    for var in monomial:
        if var == run_var:
            run_len += 1
            continue
        parts.append(f"X{run_var}" if run_len == 1 else f"X{run_var}^{run_len}")
        run_var, run_len = var, 1
    parts.append(f"X{run_var}" if run_len == 1 else f"X{run_var}^{run_len}")
    return "*".join(parts)


@dataclass(frozen=True)
class OrderVerdict:
    """
    Outcome of a comparison.

    For group elements the verdict is LESS, EQUAL or GREATER. For raw truncated
    series it may also be AGREE, meaning all coefficients up to ``degree`` coincide.
    ``degree`` and ``monomial`` name the first differing term; ``factor`` is set
    by tower comparisons.
    """
    verdict: Verdict
    degree: Optional[int] = None
    monomial: Optional[Monomial] = None
    factor: Optional[int] = None

    @classmethod
    def equal(cls) -> "OrderVerdict":
        return cls(Verdict.EQUAL)

    @property
    def is_less(self) -> bool:
        return self.verdict is Verdict.LESS

    @property
    def is_equal(self) -> bool:
        return self.verdict is Verdict.EQUAL

    @property
    def is_greater(self) -> bool:
        return self.verdict is Verdict.GREATER

    def as_int(self) -> int:
        """-1, 0, 1; AGREE counts as 0"""
        if self.verdict is Verdict.LESS:
            return -1
        if self.verdict is Verdict.GREATER:
            return 1
        return 0

    def with_factor(self, factor: int) -> "OrderVerdict":
        return OrderVerdict(self.verdict, self.degree, self.monomial, factor)

    def __str__(self) -> str:
        if self.verdict is Verdict.EQUAL:
            return "EQUAL"
        if self.verdict is Verdict.AGREE:
            return f"AGREE (up to degree {self.degree})"
        where = []
        if self.factor is not None:
            where.append(f"factor {self.factor}")
        where.append(f"degree {self.degree}")
        where.append(f"monomial {format_monomial(self.monomial)}")
        return f"{self.verdict.value} (decided at {', '.join(where)})"

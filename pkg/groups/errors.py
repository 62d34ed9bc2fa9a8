from typing import Optional


class BiorderError(ValueError):
    """Base class for every error raised by the library"""


class RankMismatchError(BiorderError):
    """Two operands live in free factors of different rank"""

    def __init__(self, left: int, right: int, operation: str = "operation"):
        super().__init__(f"Rank mismatch in {operation}: {left} != {right}")
        self.left = left
        self.right = right


class GeneratorIndexError(BiorderError):
    """A generator index lies outside 1..rank"""

    def __init__(self, index: int, rank: int):
        super().__init__(f"Generator index {index} out of range 1..{rank}")
        self.index = index
        self.rank = rank


class WordSyntaxError(BiorderError):
    """Malformed word text, annotated with a 1-based column"""

    def __init__(self, message: str, text: str, column: int):
        super().__init__(f"{message} at column {column}: {text!r}")
        self.text = text
        self.column = column


class NotInUnitGroupError(BiorderError):
    """A series whose constant coefficient is not 1 has no geometric inverse"""


class DegreeCeilingError(BiorderError):
    """Iterative deepening hit the configured truncation ceiling"""

    def __init__(self, ceiling: int):
        super().__init__(
            f"No difference found up to truncation degree {ceiling}; "
            f"raise MAGNUS_MAX_DEGREE or check the inputs"
        )
        self.ceiling = ceiling


class ReducedRankError(BiorderError):
    """Reduced expansions refuse ranks above the configured guard"""

    def __init__(self, rank: int, limit: int):
        super().__init__(
            f"Reduced Magnus expansion supports rank <= {limit}, got {rank}"
        )
        self.rank = rank
        self.limit = limit


class TowerMismatchError(BiorderError):
    """An element does not belong to the tower it is used with"""


class InvalidTowerError(BiorderError):
    """A tower spec failed validation; the report lists every issue"""

    def __init__(self, report):
        super().__init__(f"Invalid tower spec: {report.summary()}")
        self.report = report


class SpecFileError(BiorderError):
    """Malformed tower-spec file, annotated with its position"""

    def __init__(self, message: str, position: str, source: Optional[str] = None):
        where = f"{source}: " if source else ""
        super().__init__(f"{where}{position}: {message}")
        self.position = position
        self.source = source


class RetractionError(BiorderError):
    """Retraction needs at least two factors"""


class UnsupportedPresetError(BiorderError):
    """Preset parameters outside the supported range"""


class UnknownSuiteError(BiorderError):
    """No property suite with the requested name"""


class SuiteContextError(BiorderError):
    """The property suite cannot run in the requested context"""

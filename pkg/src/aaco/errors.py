"""Exception hierarchy shared by every module."""

from __future__ import annotations


class AacoError(Exception):
    """Base class for all domain errors raised by the toolkit."""


class CapExceeded(AacoError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"ground set of size {n} exceeds subset cap {cap}")
        self.n = n
        self.cap = cap


class AxiomViolation(AacoError):
    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"rank function violates {axiom} at {witness}")


class NotABasis(AacoError):
    pass


class ElementInBasis(AacoError):
    pass


class EmptyCode(AacoError):
    pass


class LengthMismatch(AacoError):
    pass


class AlphabetMismatch(AacoError):
    pass


class DuplicateWord(AacoError):
    pass


class NotAlmostAffine(AacoError):
    def __init__(self, witness: int, size: int):
        self.witness = witness
        self.size = size
        super().__init__(
            f"puncture on mask {witness:#b} has {size} words, not a power of q"
        )


class WordNotInCode(AacoError):
    pass


class Degenerate(AacoError):
    def __init__(self, position: int):
        self.position = position
        super().__init__(f"code is degenerate at position {position}")


class IndexOutOfRange(AacoError):
    pass


class EnumerationBudgetExceeded(AacoError):
    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(f"enumeration needs {needed} candidates, budget is {budget}")


class ConsistencyError(AacoError):
    """Two computations that must agree produced different results."""


class RankDeficient(AacoError):
    pass


class NotAGenerator(AacoError):
    pass


class DivisibilityViolated(AacoError):
    pass


class NotMultilinear(AacoError):
    pass


class FieldError(AacoError):
    pass


class InvalidSideMap(AacoError):
    def __init__(self, condition: str, witness: tuple):
        self.condition = condition
        self.witness = witness
        super().__init__(f"side map violates {condition}: {witness}")


class MessageLengthMismatch(AacoError):
    pass


class ParseError(AacoError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")

"""Exception hierarchy.

Every error the library raises on bad input derives from ``HatError`` so the
CLI can map the whole family to exit status 2.
"""


class HatError(ValueError):
    pass


# game model

class GameSpecError(HatError):
    """Malformed game description (bad key, wrong type)."""


class LoopInVisibility(HatError):
    def __init__(self, prisoner):
        super().__init__(f"prisoner {prisoner} sees itself")
        self.prisoner = prisoner


class NonSurjectiveInnings(HatError):
    def __init__(self, missing):
        super().__init__(f"innings skip {sorted(missing)}")
        self.missing = sorted(missing)


class TooFewPrisoners(HatError):
    pass


class TooFewColors(HatError):
    pass


class UnknownPrisonerId(HatError, KeyError):
    def __init__(self, prisoner):
        super().__init__(f"unknown prisoner {prisoner!r}")
        self.prisoner = prisoner

    __str__ = ValueError.__str__


class InapplicableConditions(HatError):
    pass


class DuplicateTarget(HatError):
    pass


class NotFiniteSupport(HatError):
    """A sum or parity was requested over infinitely many nonzero values."""


# strategy engine

class MismatchedPredictor(HatError):
    pass


class PredictorError(HatError):
    """A predictor produced an out-of-range or non-uniform declaration."""


class RequiresCompleteVisibility(HatError):
    pass


class RequiresSquareGame(HatError):
    pass


class RequiresSimultaneous(HatError):
    pass


class RequiresMultiInning(HatError):
    pass


class RequiresTwoColors(HatError):
    pass


class NotACycle(HatError):
    pass


class RequiresS1S2(HatError):
    pass


class RequiresS4S5S6(HatError):
    pass


class RequiresS1S4(HatError):
    pass


class RequiresIntColors(HatError):
    pass


class RequiresOmegaCompleteSimultaneous(HatError):
    pass


class FillOutsideSubcolors(HatError):
    pass


# parity

class ParityDomainMismatch(HatError):
    pass


class NotRobust(HatError):
    pass


class NotFiniteError(HatError):
    pass


# evaluator / search / lab

class SpaceTooLarge(HatError):
    def __init__(self, size, cap):
        super().__init__(f"space of {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class SampledReportNotConclusive(HatError):
    pass


class GraphHasCycle(HatError):
    pass


class EdgePresent(HatError):
    pass


class TooManyNodes(HatError):
    pass


class UnknownTheorem(HatError):
    pass


class BudgetExceeded(HatError):
    pass

"""Exception hierarchy shared by all gridsmith modules."""


class GridsmithError(Exception):
    """Base class for every error raised by this package."""


# dataset
class UnknownColumn(GridsmithError):
    pass


class UnknownCategoryValue(GridsmithError):
    pass


class EmptyDataset(GridsmithError):
    pass


class TooFewCases(GridsmithError):
    pass


class InvalidSpec(GridsmithError):
    pass


# dfnn
class InvalidHyperparameters(GridsmithError):
    pass


class ShapeMismatch(GridsmithError):
    pass


class NonFiniteLoss(GridsmithError):
    """Raised only when divergence cannot be contained; training normally
    freezes the last finite state instead of raising."""


# evaluation
class DegenerateLabels(GridsmithError):
    pass


# searchspace
class RangeOutOfPool(GridsmithError):
    pass


class NTooLarge(GridsmithError):
    pass


class CenterNotOnGrid(GridsmithError):
    pass


class NoCandidateOutsideNeighborhood(GridsmithError):
    pass


class EmptyLedger(GridsmithError):
    pass


# campaign
class BudgetTooSmall(GridsmithError):
    pass


# explain
class KTooLarge(GridsmithError):
    pass


class TooManyFeatures(GridsmithError):
    pass


class TooFewSamples(GridsmithError):
    pass


class EmptyMatrix(GridsmithError):
    pass


class TooFewRows(GridsmithError):
    pass


class LedgerTooSmall(GridsmithError):
    pass


# fixtures
class UnknownFixture(GridsmithError):
    pass

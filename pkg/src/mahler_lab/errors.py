"""Exception hierarchy shared by every stage of the pipeline."""


class MahlerLabError(Exception):
    """Base class; the CLI maps these to exit code 3."""


class InvalidInput(MahlerLabError, ValueError):
    """Malformed user input (bad JSON, wrong shapes). CLI exit code 2."""


# exact arithmetic
class InsufficientData(MahlerLabError):
    pass


class NotQuadratic(MahlerLabError):
    pass


# Mahler equations
class UnderdeterminedSeries(MahlerLabError):
    pass


class InconsistentSeed(MahlerLabError):
    pass


class PoleOnPath(MahlerLabError):
    def __init__(self, point, message=None):
        self.point = point
        super().__init__(message or f"a_0 vanishes at pullback point {point}")


class PrecisionLoss(MahlerLabError):
    pass


class CoefficientVanishesAtXi(MahlerLabError):
    pass


class NoConvergence(MahlerLabError):
    pass


class EigenvalueSelectionError(MahlerLabError):
    def __init__(self, message, measured, root_moduli):
        self.measured = measured
        self.root_moduli = list(root_moduli)
        super().__init__(f"{message} (measured k^gamma={measured}, root moduli={self.root_moduli})")


class NoMatchingRoot(EigenvalueSelectionError):
    pass


class AmbiguousMatch(EigenvalueSelectionError):
    pass


# regular sequences
class NoDominantRealRoot(MahlerLabError):
    pass


class NotNonnegative(MahlerLabError):
    pass


# independence
class NonPositiveElement(MahlerLabError):
    pass


class MixedFields(MahlerLabError):
    pass


class IncommensurableBases(MahlerLabError):
    pass


class HypothesisUnavailable(MahlerLabError):
    """A function has neither a certified eigenvalue nor a growth constant."""


# catalog
class UnknownEntry(MahlerLabError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotCoprime(MahlerLabError, ValueError):
    pass


class NotOddPrime(MahlerLabError, ValueError):
    pass

"""Exception hierarchy shared by every natlab module."""

from __future__ import annotations


class NatlabError(ValueError):
    """Base class for all domain errors raised by natlab."""


class BudgetExceeded(NatlabError):
    """An exhaustive computation was requested above its desk-scale limit."""

    def __init__(self, what: str, limit: str):
        super().__init__(f"{what} exceeds budget ({limit})")
        self.what = what
        self.limit = limit


# -- point sets -------------------------------------------------------------

class InvalidNat(NatlabError):
    """A point set violates one of the defining conditions."""


class MissingRoot(InvalidNat):
    def __init__(self):
        super().__init__("(0, 0) is not in the point set")


class AmbiguousParent(InvalidNat):
    def __init__(self, point):
        super().__init__(f"point {point} has both a row and a column predecessor")
        self.point = point


class Orphan(InvalidNat):
    def __init__(self, point):
        super().__init__(f"point {point} has no predecessor")
        self.point = point


class EmptyLine(InvalidNat):
    def __init__(self, axis: str, index: int):
        super().__init__(f"empty line {axis}={index}")
        self.axis = axis
        self.index = index


class IncompatibleCodes(NatlabError):
    """A code pair is not a pair of linear extensions for the given tree."""


class UnknownNode(NatlabError):
    def __init__(self, node):
        super().__init__(f"unknown node {node!r}")
        self.node = node


# -- tableaux ---------------------------------------------------------------

class InvalidTableau(NatlabError):
    pass


class EdgeOutOfRange(NatlabError):
    pass


class NotInImage(NatlabError):
    pass


class WidthMismatch(NatlabError):
    pass


# -- complete trees and identities ------------------------------------------

class TrivialTree(NatlabError):
    pass


class InvalidInterlace(NatlabError):
    pass


class TrivialInput(NatlabError):
    pass


class SingularMatrix(NatlabError):
    pass


# -- diagrams ---------------------------------------------------------------

class NotInD0(NatlabError):
    pass


class NotInD1(NatlabError):
    pass


class InvalidPolyomino(NatlabError):
    pass

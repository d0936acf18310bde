"""Exception types shared across the package."""

from __future__ import annotations


class AntiRamseyError(Exception):
    """Base class for every error raised by this package."""


# --- latin rectangles -------------------------------------------------------

class LatinError(AntiRamseyError, ValueError):
    pass


class RaggedGrid(LatinError):
    pass


class NegativeSymbol(LatinError):
    pass


class RowRepeat(LatinError):
    def __init__(self, row: int, symbol: int):
        super().__init__(f"symbol {symbol} repeats in row {row}")
        self.row = row
        self.symbol = symbol


class ColRepeat(LatinError):
    def __init__(self, col: int, symbol: int):
        super().__init__(f"symbol {symbol} repeats in column {col}")
        self.col = col
        self.symbol = symbol


class DimensionMismatch(AntiRamseyError, ValueError):
    pass


class PreconditionViolated(AntiRamseyError, ValueError):
    pass


# --- algebra ----------------------------------------------------------------

class NotPrime(AntiRamseyError, ValueError):
    pass


class NotPrimePower(AntiRamseyError, ValueError):
    pass


class CapExceeded(AntiRamseyError, ValueError):
    pass


class NoGeneratorFound(AntiRamseyError, RuntimeError):
    pass


class InvariantFailed(AntiRamseyError, RuntimeError):
    pass


class WrongShape(AntiRamseyError, ValueError):
    pass


class RainbowPairExists(AntiRamseyError, ValueError):
    pass


class AxiomFailure(AntiRamseyError, RuntimeError):
    pass


# --- constructions ----------------------------------------------------------

class SymbolCountMismatch(AntiRamseyError, ValueError):
    pass


class BadParameters(AntiRamseyError, ValueError):
    pass


class MultiplierTooSmall(AntiRamseyError, ValueError):
    pass


# --- search -----------------------------------------------------------------

class BudgetExhausted(AntiRamseyError):
    """The node budget ran out before the search could reach a verdict."""

    def __init__(self, nodes: int, max_nodes: int):
        super().__init__(f"node budget exhausted after {nodes} nodes (max {max_nodes})")
        self.nodes = nodes
        self.max_nodes = max_nodes


class DomainViolation(AntiRamseyError, ValueError):
    pass


class ParseError(AntiRamseyError, ValueError):
    pass

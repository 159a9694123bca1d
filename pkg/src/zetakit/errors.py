"""Exception taxonomy shared by all zetakit modules."""


class ZetakitError(Exception):
    """Base class for everything this package raises on purpose."""


class PoleError(ZetakitError, ValueError):
    """Evaluation requested at (or within 1e-14 of) a pole."""


class DomainError(ZetakitError, ValueError):
    """Argument outside the documented domain of the operation."""


class ConvergenceError(ZetakitError, ArithmeticError):
    """A series or quadrature failed to reach its tolerance within budget."""


class PathError(ZetakitError, ValueError):
    """An integration path violates its geometric constraints."""


class TableCapError(ZetakitError, ValueError):
    """Requested index exceeds the configured constant-table cap."""

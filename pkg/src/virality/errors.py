"""Exception hierarchy. The CLI maps these onto exit codes."""


class ViralityError(Exception):
    """Base class for all package errors."""


class ConfigError(ViralityError, ValueError):
    """Bad configuration or arguments (exit code 1)."""


class DataError(ViralityError, ValueError):
    """Malformed or unusable input data (exit code 2)."""

    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}"
        if line is not None:
            where += f":{line}" if where else f"line {line}"
        super().__init__(f"{where}: {message}" if where else message)


class RankDeficientError(DataError):
    """Design matrix columns are linearly dependent."""

    def __init__(self, message, columns=()):
        self.columns = tuple(columns)
        super().__init__(message)


class ConvergenceError(ViralityError, ArithmeticError):
    """Numerical failure: non-convergence or separation (exit code 3)."""

"""Exception hierarchy shared across the package."""


class TsBenchError(Exception):
    """Base class for all errors raised by tsbench."""


class ConfigError(TsBenchError, ValueError):
    """Invalid evaluation or command-line configuration."""


# ingestion

class MissingColumnError(TsBenchError, KeyError):
    def __init__(self, column, available=()):
        self.column = column
        self.available = tuple(available)
        super().__init__(column)

    def __str__(self):
        return f"column {self.column!r} not found (available: {', '.join(self.available)})"


class UnparseableValueError(TsBenchError, ValueError):
    def __init__(self, row, cell):
        self.row = row
        self.cell = cell
        super().__init__(f"row {row}: cannot parse {cell!r} as a finite number")


class UnknownDatasetError(TsBenchError, KeyError):
    def __str__(self):
        return f"unknown dataset {self.args[0]!r}"


class InvalidSplitError(ConfigError):
    pass


class PatchTooLargeError(ConfigError):
    pass


# metrics

class LengthMismatchError(TsBenchError, ValueError):
    pass


class EmptyInputError(TsBenchError, ValueError):
    pass


class ZeroObservationError(TsBenchError, ValueError):
    pass


class ZeroVarianceError(TsBenchError, ValueError):
    pass


# registries

class DuplicateNameError(TsBenchError, ValueError):
    pass


class UnknownNameError(TsBenchError, KeyError):
    def __str__(self):
        return str(self.args[0])


# forecasting

class SeriesTooShortError(TsBenchError, ValueError):
    pass


class UnsupportedStrategyError(TsBenchError, ValueError):
    pass


class ForecastStepError(TsBenchError):
    """A forecaster failed part-way through a multi-step strategy."""

    def __init__(self, step, cause):
        self.step = step
        self.cause = cause
        super().__init__(f"step {step}: {cause}")


# testbench

class DuplicateMethodError(DuplicateNameError):
    pass


class UnknownMethodError(UnknownNameError):
    pass

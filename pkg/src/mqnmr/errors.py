class MQNMRError(Exception):
    """Base class for errors raised by mqnmr."""


class ConfigError(MQNMRError, ValueError):
    """Invalid user-supplied configuration."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class InvalidStateError(MQNMRError, ValueError):
    """A matrix fails the density-matrix or Hermiticity contract."""


class NumericResidueError(MQNMRError, ArithmeticError):
    """A quantity that must be real or nonnegative came out with a large residue."""

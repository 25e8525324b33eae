"""Exception hierarchy shared by all xal modules.

The CLI maps these onto exit codes: configuration / argument / structural
problems exit 2, data and I/O problems exit 3, numerical failures exit 4.
"""


class XalError(Exception):
    """Base class for all xal errors."""


class ConfigError(XalError, ValueError):
    """A configuration value is invalid; the message names the offending key."""


class ArgumentError(XalError, ValueError):
    """A runtime argument is out of range or has a mismatched shape."""


class StructuralError(XalError, KeyError):
    """Named structures (attention layers, injection sites, windows) disagree."""

    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return str(self.args[0]) if self.args else ""


class DataError(XalError):
    """Corpus or file-system problem; the message carries the path context."""


class NumericsError(XalError, RuntimeError):
    """Non-finite loss or gradient encountered during training."""

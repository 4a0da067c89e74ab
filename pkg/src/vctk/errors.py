"""Exception types shared across the toolkit.

Everything user-facing (bad JSON, parity violations, malformed move words,
unknown catalog names) raises InputError so the CLI can map it to a single
"bad input data" exit code. Internal contract violations use plain
AssertionError / ArithmeticError.
"""


class VctkError(Exception):
    """Base class for toolkit errors."""


class InputError(VctkError, ValueError):
    """Invalid user-supplied data: dimensions, parity, names, move words."""


class CapExceeded(VctkError):
    """A search or closure ran past its node budget."""

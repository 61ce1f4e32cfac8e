"""Error kinds shared across the package.

The CLI maps these onto exit codes: InputError is a malformed or
out-of-contract input (exit 2), CapError is a resource cap that would have
to be raised explicitly (exit 3).  Everything else is a genuine bug.
"""


class InputError(ValueError):
    """Bad user-supplied input: malformed text, violated precondition."""


class CapError(RuntimeError):
    """A computation was refused because it exceeds a configured cap."""

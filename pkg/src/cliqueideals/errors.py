import os


class CilError(Exception):
    """Base class for errors raised by this package."""


class UndefinedError(CilError, ValueError):
    """An invariant that is not defined for the input (e.g. dual of the zero ideal)."""


class DegenerateError(CilError, ValueError):
    """A construction reached a degenerate case it does not handle."""


class NotChordalError(CilError, ValueError):
    pass


class SizeGuardError(CilError):
    """Input exceeds the exhaustive-enumeration size guard."""


DEFAULT_MAX_N = 12


def max_n() -> int:
    """Vertex-count guard for 2^n enumerations; ``CIL_MAX_N`` overrides it."""
    raw = os.environ.get("CIL_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise CilError(f"CIL_MAX_N must be an integer, got {raw!r}") from None


def check_size(n: int, what: str = "input") -> None:
    limit = max_n()
    if n > limit:
        raise SizeGuardError(
            f"{what} has {n} vertices; exhaustive enumeration is limited to n <= {limit} "
            "(set CIL_MAX_N to override)"
        )

"""Exception hierarchy shared across the package."""

from __future__ import annotations


class CogmechError(Exception):
    """Base class for every error raised by this package."""


class DigraphError(CogmechError, ValueError):
    """A digraph could not be built or a vertex/arc reference is invalid."""


class WalkError(CogmechError, ValueError):
    """A vertex sequence is not a walk of its host, or walks cannot be joined."""

    def __init__(self, message: str, index: int | None = None) -> None:
        super().__init__(message)
        self.index = index


class ResourceLimitError(CogmechError):
    """Enumeration or permutation search exceeded its configured guard."""


class NoGroundError(CogmechError):
    """An operation needs a ground but the digraph has none."""


class NotAGroundError(CogmechError, ValueError):
    """A candidate vertex set fails one or more base characteristics."""

    def __init__(self, message: str, failing: tuple[str, ...] = ()) -> None:
        super().__init__(message)
        self.failing = failing


class UncoverableError(CogmechError):
    """No selection of uniters can complete a characterization."""

    def __init__(self, message: str, vertices: tuple[str, ...] = ()) -> None:
        super().__init__(message)
        self.vertices = vertices


class ModeMismatchError(CogmechError, ValueError):
    """Two formization tables were compared under different modes."""


class FormatError(CogmechError, ValueError):
    """Malformed input text; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class TableSizeError(CogmechError, ValueError):
    """A formization table and a digraph (or two tables) differ in vertex count."""

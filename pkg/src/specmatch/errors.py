"""Exception types shared across the library."""


class InvalidEdge(ValueError):
    """Edge is a self-loop or otherwise not a valid vertex pair."""


class IndexOutOfRange(IndexError):
    """Vertex index outside 0..n-1."""


class ParseError(ValueError):
    """Malformed serialized graph. Carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class InvalidParameter(ValueError):
    """Parameter outside the documented domain."""


class InvalidSpec(ValueError):
    """Family parameters violate the family's arithmetic constraints."""


class ConstructionFailed(RuntimeError):
    """A constructive recipe produced a graph that fails its own verification."""


class InvalidMatrix(ValueError):
    """Matrix input is not symmetric / not square."""


class NoConvergence(RuntimeError):
    """Iterative eigensolver exceeded its iteration cap."""


class TooLarge(ValueError):
    """Input exceeds a brute-force or dense-solver cap."""


class InvalidPartition(ValueError):
    """Vertex partition has an empty block or does not cover 0..n-1."""


class InvalidInput(ValueError):
    """Generic precondition failure on operation input."""


class NotBipartite(ValueError):
    """Operation requires a bipartite graph."""


class InvalidWeight(ValueError):
    """Fractional matching weight outside [0, 1]."""


class UnknownEdge(ValueError):
    """Fractional matching assigns weight to a non-edge."""


class HypothesisUnmet(ValueError):
    """Graph fails a checker's structural hypothesis (connectivity, order)."""

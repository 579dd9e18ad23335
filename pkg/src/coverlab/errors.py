"""Exception types shared across the package."""


class CoverlabError(Exception):
    """Base class for all coverlab errors."""


class IndexOutOfRange(CoverlabError):
    pass


class SelfLoop(CoverlabError):
    pass


class EmptyPiece(CoverlabError):
    pass


class BadParameter(CoverlabError):
    pass


class ParseError(CoverlabError):
    pass


class FormatError(CoverlabError):
    pass


class Disconnected(CoverlabError):
    pass


class DisconnectedMember(CoverlabError):
    pass


class BadInput(CoverlabError):
    pass


class FreenessViolated(CoverlabError):
    """A required forbidden-subgraph condition fails.

    Carries the name of the forbidden graph and the embedding witness
    (a tuple of host vertices inducing the forbidden copy).
    """

    def __init__(self, name, witness):
        self.name = name
        self.witness = tuple(witness)
        super().__init__(f"forbidden graph {name} found at vertices {sorted(self.witness)}")


class PathTooLong(CoverlabError):
    pass


class StarTooLarge(CoverlabError):
    pass


class InternalInvariantBroken(CoverlabError):
    """A runtime check of a construction-time claim failed."""

"""Exception hierarchy.  The CLI maps each family to its own exit status."""


class CiteWeightError(Exception):
    """Base class for all library errors."""


class InvalidArgumentError(CiteWeightError, ValueError):
    pass


class InvalidRankError(InvalidArgumentError):
    pass


class EmptyInputError(CiteWeightError, ValueError):
    pass


class ParseError(CiteWeightError, ValueError):
    """Malformed input; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(CiteWeightError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResolutionError(CiteWeightError, LookupError):
    """The researcher's rank could not be determined for a publication."""

    def __init__(self, message, pub_id=None):
        self.pub_id = pub_id
        super().__init__(message)


class ResearcherNotAuthorError(ResolutionError):
    pass


class AmbiguousAuthorError(ResolutionError):
    pass


class AlphabeticalOrderWarning(UserWarning):
    """Rank taken from a venue that orders authors alphabetically."""

    def __init__(self, pub_id, rank):
        self.pub_id = pub_id
        self.rank = rank
        super().__init__(f"{pub_id}: authors listed alphabetically; rank {rank} carries no contribution signal")

    def as_dict(self):
        return {"warning": "alphabetical-order", "id": self.pub_id, "rank": self.rank}

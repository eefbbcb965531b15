"""Exceptions raised on invalid input or failed internal consistency checks."""


class HomflyError(ValueError):
    """Base class for domain errors; the CLI maps these to exit code 1."""


class MalformedToken(HomflyError):
    pass


class GeneratorOutOfRange(HomflyError):
    pass


class NotAKnot(HomflyError):
    """The braid closes to a link with more than one component."""


class NormalizationFailure(HomflyError):
    """No unit t^k makes the Alexander polynomial symmetric with value 1 at t=1."""


class WitnessMismatch(HomflyError):
    """A witness braid did not produce the expected z^k coefficient."""


class DimensionDeficit(HomflyError):
    """Observed rank fell short of the predicted dimension."""

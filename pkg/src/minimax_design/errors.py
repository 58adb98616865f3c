"""Exception types raised across the toolkit.

Every failure mode has its own class so callers (and the CLI exit-code
mapping) can dispatch on type rather than parse messages.
"""


class MinimaxDesignError(Exception):
    """Base class for all toolkit errors."""


# --- strategy / matrix validation ---

class NegativeWeight(MinimaxDesignError):
    def __init__(self, index, value):
        self.index = index
        self.value = value
        super().__init__(f"weight {value!r} at index {index} is negative")


class SumNotOne(MinimaxDesignError):
    def __init__(self, total, deviation):
        self.total = total
        self.deviation = deviation
        super().__init__(f"weights sum to {total!r} (off by {deviation!r})")


class DimensionMismatch(MinimaxDesignError):
    pass


# --- LP engine ---

class MalformedProgram(MinimaxDesignError):
    pass


class CapExceeded(MinimaxDesignError):
    pass


# --- designer ---

class SupportMismatch(MinimaxDesignError):
    pass


class SupportNotSmaller(MinimaxDesignError):
    pass


class SupportTooSmall(MinimaxDesignError):
    pass


class DegenerateSupport(MinimaxDesignError):
    pass


class NotSingleton(MinimaxDesignError):
    pass


class ParameterOutOfRange(MinimaxDesignError):
    pass


class CertificationFailed(MinimaxDesignError):
    pass


# --- verifier ---

class NotAMinimaxPair(MinimaxDesignError):
    pass


# --- learners ---

class BadDimension(MinimaxDesignError):
    pass


class NonFiniteLoss(MinimaxDesignError):
    pass


class NonFiniteInput(MinimaxDesignError):
    pass


# --- column player / arena ---

class MissingFeedback(MinimaxDesignError):
    pass


class NonCertifiedGame(MinimaxDesignError):
    pass


class EmptyTrajectory(MinimaxDesignError):
    pass


class BadInstance(MinimaxDesignError):
    pass


class MisroutedPolicy(MinimaxDesignError):
    pass

class UsageError(ValueError):
    """A call violated a documented precondition (dead handle, bad order, ...)."""


class OracleRefused(ValueError):
    """Input exceeds the configured brute-force oracle cap."""

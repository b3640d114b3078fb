from backend.core.BroadcastError import BroadcastError


class ProbabilityDomainError(BroadcastError, ValueError):
    pass

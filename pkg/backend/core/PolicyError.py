from backend.core.BroadcastError import BroadcastError


class PolicyError(BroadcastError):
    pass

from backend.core.BroadcastError import BroadcastError


class EnumerationLimitError(BroadcastError):
    pass

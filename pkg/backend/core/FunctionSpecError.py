from backend.core.BroadcastError import BroadcastError


class FunctionSpecError(BroadcastError, ValueError):
    pass

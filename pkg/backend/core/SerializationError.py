from backend.core.BroadcastError import BroadcastError


class SerializationError(BroadcastError):
    pass

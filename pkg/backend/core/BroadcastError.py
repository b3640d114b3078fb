class BroadcastError(Exception):
    pass

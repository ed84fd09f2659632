"""Exception hierarchy shared by the transfer pipeline."""


class TransferError(Exception):
    """Base class for every error raised by stereosms."""


class RangeViolation(TransferError, ValueError):
    """A code point lies outside the transmittable alphabet."""

    def __init__(self, position, point):
        self.position = position
        self.point = point
        super().__init__(f"code point {point} at position {position} is not in [32,287]")


class MalformedHeader(TransferError, ValueError):
    """A rendered segment does not start with three ASCII digits."""


class TooManySegments(TransferError):
    """Payload needs more segments than the 000-999 index space allows."""

    def __init__(self, needed, limit=1000):
        self.needed = needed
        self.limit = limit
        super().__init__(f"payload needs {needed} segments, at most {limit} are addressable")


class MissingSegments(TransferError):
    """Reassembly found gaps in the segment indices."""

    def __init__(self, missing):
        self.missing = sorted(missing)
        shown = ", ".join(f"{i:03d}" for i in self.missing[:20])
        if len(self.missing) > 20:
            shown += f", ... ({len(self.missing)} total)"
        super().__init__(f"missing segments: {shown}")


class ConflictingDuplicate(TransferError):
    """Two segments share an index but carry different bodies."""

    def __init__(self, index):
        self.index = index
        super().__init__(f"conflicting bodies for segment {index:03d}")


class StorageFailure(TransferError, OSError):
    """A record could not be written to or read from the inbox store."""


class OversizeMessage(TransferError, ValueError):
    """A message handed to the channel exceeds its per-message capacity."""

    def __init__(self, position, length, capacity):
        self.position = position
        self.length = length
        self.capacity = capacity
        super().__init__(
            f"message {position} has {length} code points, channel capacity is {capacity}")


class MalformedPpm(TransferError, ValueError):
    """Input is not an 8-bit binary (P6) PPM image."""

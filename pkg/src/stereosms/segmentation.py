"""Concatenated-SMS framing: split text into indexed segments and back.

Every segment is rendered as a 3-digit zero-padded decimal index followed by
its slice of the payload text, e.g. ``"000"`` + body.  The receiver orders
segments by that index, so delivery order does not matter.
"""

import math
from dataclasses import dataclass

from .errors import ConflictingDuplicate, MalformedHeader, MissingSegments, TooManySegments

HEADER_LEN = 3
MAX_SEGMENTS = 1000
DEFAULT_CAPACITY = 70
_DIGITS = frozenset("0123456789")


@dataclass(frozen=True)
class SegmentPlan:
    """Per-message size budget, in code points, header included."""

    capacity_points: int = DEFAULT_CAPACITY

    def __post_init__(self):
        if isinstance(self.capacity_points, bool) or not isinstance(self.capacity_points, int):
            raise TypeError("capacity_points must be an int")
        if self.capacity_points < HEADER_LEN + 1:
            raise ValueError(
                f"capacity_points must be >= {HEADER_LEN + 1}, got {self.capacity_points}")

    @property
    def body_capacity(self):
        return self.capacity_points - HEADER_LEN

    def segment_count(self, n_points):
        """Number of segments `split` produces for a payload of ``n_points``."""
        return max(1, math.ceil(n_points / self.body_capacity))


@dataclass(frozen=True)
class Segment:
    index: int
    body: str

    def __post_init__(self):
        if not 0 <= self.index < MAX_SEGMENTS:
            raise ValueError(f"segment index {self.index} outside 0..{MAX_SEGMENTS - 1}")


def split(payload, plan=SegmentPlan()):
    """Cut ``payload`` into consecutive segments of ``plan.body_capacity`` points.

    An empty payload yields a single segment with an empty body.
    """
    size = plan.body_capacity
    count = plan.segment_count(len(payload))
    if count > MAX_SEGMENTS:
        raise TooManySegments(count, MAX_SEGMENTS)
    return [Segment(i, payload[i * size:(i + 1) * size]) for i in range(count)]


def render(segment):
    return f"{segment.index:03d}{segment.body}"


def parse(rendered):
    if len(rendered) < HEADER_LEN:
        raise MalformedHeader(f"segment too short for header: {rendered!r}")
    head = rendered[:HEADER_LEN]
    # str.isdigit() would also accept non-ASCII digits
    if not _DIGITS.issuperset(head):
        raise MalformedHeader(f"header is not three ASCII digits: {head!r}")
    return Segment(int(head), rendered[HEADER_LEN:])


def collect(segments):
    """Index -> body map with exact duplicates dropped.

    Raises `ConflictingDuplicate` when one index carries two different bodies.
    """
    bodies = {}
    for seg in segments:
        seen = bodies.get(seg.index)
        if seen is None:
            bodies[seg.index] = seg.body
        elif seen != seg.body:
            raise ConflictingDuplicate(seg.index)
    return bodies


def missing_indices(indices, expected_count=None):
    """Indices absent from ``indices``.

    With ``expected_count`` unknown, a transfer is taken to span 0..max(indices),
    so only interior gaps can be reported.
    """
    present = set(indices)
    if expected_count is None:
        expected_count = max(present) + 1 if present else 1
    return [i for i in range(expected_count) if i not in present]


def reassemble(segments, expected_count=None):
    """Concatenate segment bodies in index order.

    ``segments`` may arrive in any order and contain exact duplicates.  When
    ``expected_count`` is given, exactly indices ``0..expected_count-1`` must
    be present; otherwise the indices must be contiguous from 0.
    """
    if expected_count is not None and not 1 <= expected_count <= MAX_SEGMENTS:
        raise ValueError(f"expected_count must be in 1..{MAX_SEGMENTS}, got {expected_count}")
    bodies = collect(segments)
    gaps = missing_indices(bodies, expected_count)
    if gaps:
        raise MissingSegments(gaps)
    if expected_count is not None and len(bodies) > expected_count:
        extra = sorted(i for i in bodies if i >= expected_count)
        raise ValueError(f"segments beyond expected count {expected_count}: {extra}")
    return "".join(bodies[i] for i in range(len(bodies)))


# -- segments file -----------------------------------------------------------
#
# One rendered segment per line, UTF-8, LF separated, optional leading
# "#count=<k>" line.  Bodies never contain LF or CR (they map to 266/269).

COUNT_PREFIX = "#count="


def dump_segments(segments, count=None):
    """Serialize rendered segment texts (or `Segment` objects) to file bytes."""
    lines = []
    if count is not None:
        lines.append(f"{COUNT_PREFIX}{count}")
    for seg in segments:
        lines.append(render(seg) if isinstance(seg, Segment) else seg)
    if not lines:
        return b""
    return ("\n".join(lines) + "\n").encode("utf-8")


def load_lines(data):
    """Split segments-file bytes into ``(count, lines)``.

    ``count`` is the value of a leading ``#count=`` line, or None.  Lines are
    returned unparsed so callers can decide how to treat malformed ones.
    """
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    # not splitlines(): that also breaks on U+0085, a legal body point
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    count = None
    if lines and lines[0].startswith(COUNT_PREFIX):
        count = int(lines.pop(0)[len(COUNT_PREFIX):])
    return count, lines


def write_segments_file(path, segments, count=None):
    with open(path, "wb") as fh:
        fh.write(dump_segments(segments, count))


def read_segments_file(path):
    with open(path, "rb") as fh:
        return load_lines(fh.read())

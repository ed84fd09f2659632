"""Byte <-> text mapping for carrying binary payloads in SMS bodies.

Each payload byte becomes one character.  Bytes 32-255 keep their value;
the control bytes 0-31, which handsets and SMSCs treat specially, are lifted
to code points 256-287.  A payload of ``n`` bytes therefore always becomes
``n`` characters.

Text is represented as a Python ``str``: one character per code point, so the
UTF-8 file form is simply ``text.encode("utf-8")``.
"""

import re

from .errors import RangeViolation

CONTROL_LIMIT = 32
SHIFT = 256
MAX_POINT = SHIFT + CONTROL_LIMIT - 1  # 287

_ENCODE_TABLE = {b: SHIFT + b for b in range(CONTROL_LIMIT)}
_DECODE_TABLE = {SHIFT + b: b for b in range(CONTROL_LIMIT)}
_INVALID = re.compile(r"[^\x20-\u011f]")


def encode_bytes(payload):
    """Map a byte stream to SMS-safe text of the same length.

    ``payload`` may be ``bytes``, ``bytearray``, ``memoryview`` or any iterable
    of ints in [0, 255].
    """
    # bytes() rejects ints outside [0, 255]
    return bytes(payload).decode("latin-1").translate(_ENCODE_TABLE)


def check_text(text):
    """Raise `RangeViolation` for the first character outside [32, 287]."""
    bad = _INVALID.search(text)
    if bad is not None:
        raise RangeViolation(bad.start(), ord(bad.group()))


def decode_text(text):
    """Inverse of `encode_bytes`.

    Raises `RangeViolation` if any code point is in [0, 31] or above 287,
    which can only come from a corrupted or foreign payload.
    """
    if not isinstance(text, str):
        text = from_code_points(text)
    check_text(text)
    return text.translate(_DECODE_TABLE).encode("latin-1")


def code_points(text):
    """List of integer code points of ``text``."""
    return [ord(c) for c in text]


def from_code_points(points):
    """Build text from integer code points.

    Only Unicode validity is checked here; alphabet range is `check_text`'s job.
    """
    points = list(points)
    for i, p in enumerate(points):
        if not 0 <= p <= 0x10FFFF:
            raise RangeViolation(i, p)
    return "".join(map(chr, points))

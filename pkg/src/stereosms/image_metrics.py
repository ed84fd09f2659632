"""Transfer-cost figures for a payload: characters, messages, unique colors.

Only 8-bit binary PPM (P6) is decoded natively; it is used solely to count
distinct RGB colors.  The payload itself is treated as opaque bytes.
"""

from dataclasses import dataclass

import numpy as np

from .errors import MalformedPpm
from .segmentation import SegmentPlan, split
from .transcode import encode_bytes

_WHITESPACE = b" \t\n\r\x0b\x0c"


@dataclass(frozen=True, eq=False)
class RgbImage:
    """Row-major 8-bit RGB image; ``pixels`` has shape (height, width, 3)."""

    pixels: np.ndarray

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.ndim != 3 or px.shape[2] != 3:
            raise ValueError(f"pixels must have shape (height, width, 3), got {px.shape}")
        if px.shape[0] < 1 or px.shape[1] < 1:
            raise ValueError("image must be at least 1x1")
        if px.dtype != np.uint8:
            if px.size and (px.min() < 0 or px.max() > 255):
                raise ValueError("channel values must be in [0, 255]")
            px = px.astype(np.uint8)
        object.__setattr__(self, "pixels", px)

    @classmethod
    def from_triples(cls, width, height, triples):
        px = np.asarray(list(triples), dtype=np.int64)
        if px.shape != (width * height, 3):
            raise ValueError(f"expected {width * height} (r, g, b) triples, got {len(px)}")
        return cls(px.reshape(height, width, 3))

    @property
    def width(self):
        return self.pixels.shape[1]

    @property
    def height(self):
        return self.pixels.shape[0]


def _header_tokens(data, count, pos):
    """Read ``count`` whitespace-separated tokens, skipping ``#`` comments."""
    tokens = []
    n = len(data)
    while len(tokens) < count:
        while pos < n and data[pos] in _WHITESPACE:
            pos += 1
        if pos < n and data[pos] == ord("#"):
            eol = data.find(b"\n", pos)
            if eol < 0:
                raise MalformedPpm("header ends inside a comment")
            pos = eol + 1
            continue
        start = pos
        while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
            pos += 1
        if start == pos:
            raise MalformedPpm("truncated header")
        tokens.append(bytes(data[start:pos]))
    return tokens, pos


def parse_ppm(data):
    """Decode a binary P6 PPM with maxval 255."""
    data = bytes(data)
    if data[:2] != b"P6":
        raise MalformedPpm(f"bad magic {data[:2]!r}, only binary P6 is supported")
    tokens, pos = _header_tokens(data, 3, 2)
    try:
        width, height, maxval = (int(t) for t in tokens)
    except ValueError:
        raise MalformedPpm(f"non-numeric header field in {tokens!r}") from None
    if width < 1 or height < 1:
        raise MalformedPpm(f"bad dimensions {width}x{height}")
    if maxval != 255:
        raise MalformedPpm(f"maxval must be 255, got {maxval}")
    if pos >= len(data) or data[pos] not in _WHITESPACE:
        raise MalformedPpm("missing whitespace after maxval")
    pos += 1
    expected = 3 * width * height
    payload = data[pos:]
    if len(payload) != expected:
        raise MalformedPpm(f"pixel data is {len(payload)} bytes, expected {expected}")
    px = np.frombuffer(payload, dtype=np.uint8).reshape(height, width, 3)
    return RgbImage(px)


def read_ppm(path):
    with open(path, "rb") as fh:
        return parse_ppm(fh.read())


def dump_ppm(image):
    header = f"P6\n{image.width} {image.height}\n255\n".encode("ascii")
    return header + image.pixels.tobytes()


def unique_colors(image):
    px = image.pixels.reshape(-1, 3).astype(np.uint32)
    packed = (px[:, 0] << 16) | (px[:, 1] << 8) | px[:, 2]
    return int(np.unique(packed).size)


@dataclass(frozen=True)
class TransferStats:
    characters: int
    messages: int
    unique_colors: int | None = None

    def to_csv(self):
        colors = "-" if self.unique_colors is None else str(self.unique_colors)
        return f"{self.characters},{self.messages},{colors}"

    def to_table(self, name=None):
        rows = [("characters", self.characters), ("messages", self.messages),
                ("unique colors", "-" if self.unique_colors is None else self.unique_colors)]
        lines = [] if name is None else [name]
        lines += [f"  {label:<14}{value:>10}" for label, value in rows]
        return "\n".join(lines)


def transfer_stats(payload, plan=SegmentPlan(), image=None):
    """Characters, messages and (when ``image`` is given) unique colors.

    Raises `TooManySegments` if the payload does not fit in 1000 messages.
    """
    text = encode_bytes(payload)
    messages = len(split(text, plan))
    colors = None if image is None else unique_colors(image)
    return TransferStats(len(text), messages, colors)

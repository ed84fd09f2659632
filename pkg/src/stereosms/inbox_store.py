"""Persistent store for received segments.

A store is a directory holding one append-only log file per transfer.  Each
record in a log is framed as::

    <index: 3 ASCII digits><length: decimal ASCII>\\n<body: UTF-8, `length` bytes>

e.g. ``b"0013\\nABC"`` for segment 1 with body ``"ABC"``.  A frame cut short by
a crash is detected on open and dropped from the end of the log.
"""

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from urllib.parse import quote, unquote

from .errors import ConflictingDuplicate, StorageFailure
from .segmentation import Segment, reassemble
from .transcode import check_text, decode_text

log = logging.getLogger(__name__)

LOG_SUFFIX = ".log"


@dataclass(frozen=True)
class InboxRecord:
    transfer_id: str
    index: int
    body_bytes: bytes

    @property
    def body(self):
        return self.body_bytes.decode("utf-8")

    def to_segment(self):
        return Segment(self.index, self.body)


def derive_transfer_id(sender, first_seen):
    """Locally unique id from a sender address and first-seen time.

    ``first_seen`` is a `datetime` or a POSIX timestamp.
    """
    if hasattr(first_seen, "strftime"):
        stamp = first_seen.strftime("%Y%m%dT%H%M%S")
    else:
        stamp = f"{int(first_seen)}"
    return f"{sender}@{stamp}"


def _frame(index, body_bytes):
    return f"{index:03d}{len(body_bytes)}\n".encode("ascii") + body_bytes


def _scan(data):
    """Parse frames from raw log bytes.

    Returns ``(frames, good_length)`` where ``good_length`` is the byte offset
    just past the last complete frame.
    """
    frames = []
    pos = 0
    n = len(data)
    while pos < n:
        nl = data.find(b"\n", pos)
        if nl < 0:
            break
        head = data[pos:nl]
        if len(head) < 4 or not head.isdigit():
            raise StorageFailure(f"corrupt frame header at byte {pos}: {head[:16]!r}")
        index = int(head[:3])
        length = int(head[3:])
        end = nl + 1 + length
        if end > n:
            break
        frames.append((index, data[nl + 1:end]))
        pos = end
    return frames, pos


class InboxStore:
    """Directory-backed record store, one writer at a time.

    Usable as a context manager; `close` releases open log handles.  Records
    are fsync'd before `put_record` returns unless ``fsync=False``.
    """

    def __init__(self, path, fsync=True):
        self.path = Path(path)
        self.fsync = fsync
        try:
            self.path.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise StorageFailure(f"cannot create store at {self.path}: {exc}") from exc
        self._index = {}  # transfer_id -> {index: body_bytes}
        self._handles = {}

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def close(self):
        for fh in self._handles.values():
            try:
                fh.close()
            except OSError:
                log.warning("error closing %s", fh.name)
        self._handles.clear()

    def _log_path(self, transfer_id):
        if not transfer_id:
            raise ValueError("transfer_id must be a non-empty string")
        return self.path / (quote(transfer_id, safe="") + LOG_SUFFIX)

    def _load(self, transfer_id):
        cached = self._index.get(transfer_id)
        if cached is not None:
            return cached
        path = self._log_path(transfer_id)
        records = {}
        try:
            data = path.read_bytes()
        except FileNotFoundError:
            data = b""
        except OSError as exc:
            raise StorageFailure(f"cannot read {path}: {exc}") from exc
        frames, good = _scan(data)
        if good < len(data):
            log.warning("dropping %d trailing bytes of a truncated frame in %s",
                        len(data) - good, path)
            try:
                with open(path, "r+b") as fh:
                    fh.truncate(good)
            except OSError as exc:
                raise StorageFailure(f"cannot repair {path}: {exc}") from exc
        for index, body in frames:
            if records.setdefault(index, body) != body:
                raise StorageFailure(f"{path} holds conflicting records for index {index:03d}")
        self._index[transfer_id] = records
        return records

    def _handle(self, transfer_id):
        fh = self._handles.get(transfer_id)
        if fh is None:
            path = self._log_path(transfer_id)
            try:
                fh = open(path, "ab")
            except OSError as exc:
                raise StorageFailure(f"cannot open {path}: {exc}") from exc
            self._handles[transfer_id] = fh
        return fh

    def put_record(self, transfer_id, segment):
        """Persist ``segment`` under ``transfer_id``.

        Returns True if stored, False for an exact duplicate.  A different body
        for an already stored index raises `ConflictingDuplicate`.
        """
        check_text(segment.body)
        records = self._load(transfer_id)
        body_bytes = segment.body.encode("utf-8")
        existing = records.get(segment.index)
        if existing is not None:
            if existing != body_bytes:
                raise ConflictingDuplicate(segment.index)
            return False
        fh = self._handle(transfer_id)
        try:
            fh.write(_frame(segment.index, body_bytes))
            fh.flush()
            if self.fsync:
                os.fsync(fh.fileno())
        except OSError as exc:
            raise StorageFailure(f"cannot append to {fh.name}: {exc}") from exc
        records[segment.index] = body_bytes
        return True

    def list_records(self, transfer_id):
        records = self._load(transfer_id)
        return [InboxRecord(transfer_id, i, records[i]) for i in sorted(records)]

    def transfer_ids(self):
        try:
            names = sorted(p.name for p in self.path.iterdir())
        except OSError as exc:
            raise StorageFailure(f"cannot list {self.path}: {exc}") from exc
        return [unquote(n[:-len(LOG_SUFFIX)]) for n in names if n.endswith(LOG_SUFFIX)]

    def reconstruct(self, transfer_id, expected_count=None):
        """Rebuild the original payload bytes of ``transfer_id``."""
        segments = [r.to_segment() for r in self.list_records(transfer_id)]
        return decode_text(reassemble(segments, expected_count))

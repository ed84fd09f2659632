"""Command-line front end: send, receive, reconstruct, stats.

Exit codes: 0 success, 1 I/O or data error, 2 payload needs more than 1000
segments, 3 segments missing at reconstruction, 64 bad command line.
"""

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from urllib.parse import quote

from .channel_sim import ChannelProfile, transmit
from .errors import (ConflictingDuplicate, MalformedHeader, MalformedPpm, MissingSegments,
                     RangeViolation, StorageFailure, TooManySegments)
from .image_metrics import read_ppm, transfer_stats
from .inbox_store import InboxStore, derive_transfer_id
from .segmentation import (DEFAULT_CAPACITY, SegmentPlan, dump_segments, parse,
                           read_segments_file, render, split)
from .transcode import encode_bytes

log = logging.getLogger("stereosms")

EXIT_OK = 0
EXIT_IO = 1
EXIT_TOO_MANY = 2
EXIT_MISSING = 3
EXIT_USAGE = 64

MANIFEST_SUFFIX = ".manifest.json"


@dataclass
class TransferManifest:
    transfer_id: str
    segment_count: int
    payload_length: int
    source_name: str
    capacity_points: int = DEFAULT_CAPACITY

    def __post_init__(self):
        if not 1 <= self.segment_count <= 1000:
            raise ValueError(f"segment_count {self.segment_count} outside 1..1000")
        expected = SegmentPlan(self.capacity_points).segment_count(self.payload_length)
        if expected != self.segment_count:
            raise ValueError(f"segment_count {self.segment_count} does not match "
                             f"{self.payload_length} bytes at capacity {self.capacity_points}")

    def dumps(self):
        return json.dumps(asdict(self), indent=2) + "\n"

    @classmethod
    def load(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls(**json.load(fh))


def manifest_path(segments_path):
    return Path(str(segments_path) + MANIFEST_SUFFIX)


def _store_manifest_path(store_dir, transfer_id):
    return Path(store_dir) / (quote(transfer_id, safe="") + MANIFEST_SUFFIX)


class _Parser(argparse.ArgumentParser):
    # argparse's default exit status 2 would collide with the overflow code
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _capacity(value):
    n = int(value)
    if n < 4:
        raise argparse.ArgumentTypeError(f"capacity must be >= 4, got {n}")
    return n


def _probability(value):
    p = float(value)
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError(f"probability must be in [0, 1], got {p}")
    return p


def _window(value):
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"reorder window must be >= 0, got {n}")
    return n


def build_parser():
    parser = _Parser(prog="stereosms", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("send", help="encode and segment a file")
    p.add_argument("input", type=Path)
    p.add_argument("-o", "--output", type=Path,
                   help="segments file (default: stdout); manifest is written next to it")
    p.add_argument("--capacity", type=_capacity, default=DEFAULT_CAPACITY,
                   help="code points per message, header included (default: %(default)s)")
    p.add_argument("--transfer-id")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reorder-window", type=_window, default=0)
    p.add_argument("--dup-prob", type=_probability, default=0.0)
    p.add_argument("--loss-prob", type=_probability, default=0.0)

    p = sub.add_parser("receive", help="store segments from a segments file")
    p.add_argument("segments", type=Path)
    p.add_argument("--store", type=Path, required=True)
    p.add_argument("--transfer-id")

    p = sub.add_parser("reconstruct", help="rebuild a file from stored segments")
    p.add_argument("--store", type=Path, required=True)
    p.add_argument("--transfer-id", required=True)
    p.add_argument("--count", type=int, help="expected number of segments")
    p.add_argument("-o", "--output", type=Path, help="output file (default: stdout)")

    p = sub.add_parser("stats", help="characters,messages,unique_colors for a file")
    p.add_argument("input", type=Path)
    p.add_argument("--capacity", type=_capacity, default=DEFAULT_CAPACITY)
    p.add_argument("--ppm", type=Path, help="PPM image to count unique colors in")
    p.add_argument("--table", action="store_true", help="also print a readable table")
    return parser


def cmd_send(args):
    payload = args.input.read_bytes()
    plan = SegmentPlan(args.capacity)
    segments = split(encode_bytes(payload), plan)
    profile = ChannelProfile(args.capacity, args.reorder_window, args.dup_prob,
                             args.loss_prob, args.seed)
    rendered = transmit([render(s) for s in segments], profile)
    manifest = TransferManifest(
        transfer_id=args.transfer_id or derive_transfer_id(args.input.name, time.time()),
        segment_count=len(segments),
        payload_length=len(payload),
        source_name=args.input.name,
        capacity_points=args.capacity,
    )
    data = dump_segments(rendered)
    if args.output is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        sys.stderr.write(manifest.dumps())
    else:
        args.output.write_bytes(data)
        manifest_path(args.output).write_text(manifest.dumps(), encoding="utf-8")
        sys.stdout.write(manifest.dumps())
    return EXIT_OK


def cmd_receive(args):
    count, lines = read_segments_file(args.segments)
    manifest = None
    side = manifest_path(args.segments)
    if side.exists():
        manifest = TransferManifest.load(side)
    if args.transfer_id:
        transfer_id = args.transfer_id
    elif manifest is not None:
        transfer_id = manifest.transfer_id
    else:
        transfer_id = derive_transfer_id(args.segments.stem, os.stat(args.segments).st_mtime)

    stored = duplicate = malformed = conflicting = 0
    with InboxStore(args.store) as store:
        for lineno, line in enumerate(lines, 1):
            try:
                seg = parse(line)
                if store.put_record(transfer_id, seg):
                    stored += 1
                else:
                    duplicate += 1
            except (MalformedHeader, RangeViolation) as exc:
                log.warning("line %d skipped: %s", lineno, exc)
                malformed += 1
            except ConflictingDuplicate as exc:
                log.warning("line %d skipped: %s", lineno, exc)
                conflicting += 1
    if manifest is not None:
        manifest = TransferManifest(**{**asdict(manifest), "transfer_id": transfer_id})
        _store_manifest_path(args.store, transfer_id).write_text(manifest.dumps(),
                                                                 encoding="utf-8")
    elif count is not None:
        log.info("segments file declares %d segments", count)
    print(f"transfer_id={transfer_id} stored={stored} duplicate={duplicate} "
          f"malformed={malformed} conflicting={conflicting}")
    return EXIT_OK


def cmd_reconstruct(args):
    count = args.count
    side = _store_manifest_path(args.store, args.transfer_id)
    if count is None and side.exists():
        count = TransferManifest.load(side).segment_count
    if not args.store.is_dir():
        raise StorageFailure(f"no store at {args.store}")
    with InboxStore(args.store) as store:
        payload = store.reconstruct(args.transfer_id, count)
    if args.output is None:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
    else:
        args.output.write_bytes(payload)
    return EXIT_OK


def cmd_stats(args):
    payload = args.input.read_bytes()
    image = read_ppm(args.ppm) if args.ppm is not None else None
    stats = transfer_stats(payload, SegmentPlan(args.capacity), image)
    print(stats.to_csv())
    if args.table:
        print(stats.to_table(args.input.name))
    return EXIT_OK


COMMANDS = {
    "send": cmd_send,
    "receive": cmd_receive,
    "reconstruct": cmd_reconstruct,
    "stats": cmd_stats,
}


def main(argv=None):
    logging.basicConfig(format="stereosms: %(message)s", level=logging.WARNING)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except TooManySegments as exc:
        print(f"stereosms: {exc}", file=sys.stderr)
        return EXIT_TOO_MANY
    except MissingSegments as exc:
        print(f"stereosms: {exc}", file=sys.stderr)
        return EXIT_MISSING
    except (OSError, ValueError, MalformedPpm) as exc:
        # StorageFailure is an OSError; RangeViolation and MalformedPpm are ValueErrors
        print(f"stereosms: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

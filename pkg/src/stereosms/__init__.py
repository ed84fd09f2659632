"""Send binary files, such as stereo image pairs, as plain SMS text.

Pipeline::

    bytes --encode_bytes--> text --split--> segments --render--> SMS bodies
    SMS bodies --parse--> InboxStore --reassemble--> text --decode_text--> bytes
"""

from .channel_sim import ChannelProfile, SplitMix64, delivery_order, transmit
from .errors import (ConflictingDuplicate, MalformedHeader, MalformedPpm, MissingSegments,
                     OversizeMessage, RangeViolation, StorageFailure, TooManySegments,
                     TransferError)
from .image_metrics import (RgbImage, TransferStats, dump_ppm, parse_ppm, read_ppm,
                            transfer_stats, unique_colors)
from .inbox_store import InboxRecord, InboxStore, derive_transfer_id
from .segmentation import (DEFAULT_CAPACITY, MAX_SEGMENTS, Segment, SegmentPlan, parse,
                           reassemble, render, split)
from .transcode import code_points, decode_text, encode_bytes, from_code_points

__version__ = "0.1.0"

"""
Segmenting and surviving a noisy channel
========================================

Text is cut into messages of ``capacity`` code points, each starting with a
3-digit index.  The simulated channel shuffles and duplicates them; the
receiver only needs the indices to put things back together.
"""

import random

from stereosms import (ChannelProfile, SegmentPlan, decode_text, encode_bytes, parse,
                       reassemble, render, split, transmit)

payload = random.Random(0).randbytes(1000)
plan = SegmentPlan(capacity_points=70)  # one UCS-2 SMS
segments = split(encode_bytes(payload), plan)
print(f"{len(payload)} bytes -> {len(segments)} messages of <= {plan.capacity_points} points")

wire = [render(s) for s in segments]
profile = ChannelProfile(capacity_points=70, reorder_window=4, duplicate_prob=0.3, seed=42)
delivered = transmit(wire, profile)
print("delivery order:", " ".join(m[:3] for m in delivered))

text = reassemble([parse(m) for m in delivered], expected_count=len(segments))
assert decode_text(text) == payload
print("reassembled ok despite reordering and duplicates")

###############################################################################
# How many messages does a payload cost at different SMS sizes?

for capacity in (70, 140, 160):
    print(f"capacity {capacity:>3}: {SegmentPlan(capacity).segment_count(len(payload))} messages")

"""
Characters, messages and unique colors
======================================

The cost of sending an image is measured in characters (equal to its byte
length), messages, and, for the image itself, the number of distinct RGB
colors.  Here a synthetic stereo pair is built side by side and measured.
"""

import numpy as np

from stereosms import RgbImage, SegmentPlan, dump_ppm, parse_ppm, transfer_stats

rng = np.random.default_rng(1)
h, w = 48, 64
y, x = np.mgrid[0:h, 0:w]
left = np.stack([x * 4, y * 5, (x * y) % 256], axis=-1) % 256
right = np.roll(left, 3, axis=1)  # horizontal disparity of 3 pixels
pair = np.concatenate([left, right], axis=1).astype(np.uint8)
pair ^= rng.integers(0, 4, pair.shape, dtype=np.uint8)

data = dump_ppm(RgbImage(pair))
image = parse_ppm(data)

print("capacity  characters  messages  unique colors")
for capacity in (70, 140, 160):
    stats = transfer_stats(data, SegmentPlan(capacity), image)
    print(f"{capacity:>8}  {stats.characters:>10}  {stats.messages:>8}  {stats.unique_colors:>13}")

print()
print("CSV:", transfer_stats(data, SegmentPlan(160), image).to_csv())

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stereosms import (MalformedPpm, RgbImage, SegmentPlan, TooManySegments, TransferStats,
                       dump_ppm, parse_ppm, transfer_stats, unique_colors)

from conftest import make_ppm


def brute_unique(image):
    seen = []
    for row in image.pixels.tolist():
        for triple in row:
            if triple not in seen:
                seen.append(triple)
    return len(seen)


def test_parse_minimal():
    data = b"P6\n2 2\n255\n" + bytes(range(12))
    img = parse_ppm(data)
    assert (img.width, img.height) == (2, 2)
    assert img.pixels[1, 0].tolist() == [6, 7, 8]


def test_parse_comments_and_whitespace():
    data = b"P6 # made by hand\n# another\n  3\t1 #dims\n255\r" + bytes(9)
    img = parse_ppm(data)
    assert (img.width, img.height) == (3, 1)


@pytest.mark.parametrize("data", [
    b"P3\n1 1\n255\n0 0 0\n",
    b"P6\n1 1\n65535\n" + bytes(6),
    b"P6\n2 2\n255\n" + bytes(11),
    b"P6\n2 2\n255\n" + bytes(13),
    b"P6\n2 2",
    b"P6\n0 2\n255\n",
    b"P6\nx 2\n255\n" + bytes(12),
    b"P6\n1 1\n255" + bytes(3),
    b"",
])
def test_parse_rejects(data):
    with pytest.raises(MalformedPpm):
        parse_ppm(data)


def test_dump_parse_round_trip():
    data = make_ppm(17, 5)
    img = parse_ppm(data)
    assert dump_ppm(img) == data


def test_unique_examples():
    assert unique_colors(RgbImage.from_triples(2, 2, [(10, 20, 30)] * 4)) == 1
    img = RgbImage.from_triples(2, 2, [(255, 0, 0), (255, 0, 0), (0, 255, 0), (0, 0, 255)])
    assert unique_colors(img) == 3 == brute_unique(img)
    grad = RgbImage.from_triples(16, 16, [(i, i, i) for i in range(256)])
    assert unique_colors(grad) == 256


def test_channels_not_confused():
    # single-channel colors that an additive packing would merge
    img = RgbImage.from_triples(4, 1, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0)])
    assert unique_colors(img) == 4


@given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 2**32 - 1), st.integers(1, 256))
@settings(max_examples=100)
def test_unique_matches_brute_force(w, h, seed, levels):
    rng = np.random.default_rng(seed)
    px = rng.integers(0, levels, (h, w, 3), dtype=np.uint8)
    img = RgbImage(px)
    n = unique_colors(img)
    assert n == brute_unique(img)
    assert 1 <= n <= w * h


def test_image_validation():
    with pytest.raises(ValueError):
        RgbImage(np.zeros((2, 2), dtype=np.uint8))
    with pytest.raises(ValueError):
        RgbImage(np.zeros((0, 2, 3), dtype=np.uint8))
    with pytest.raises(ValueError):
        RgbImage(np.full((1, 1, 3), 256))
    with pytest.raises(ValueError):
        RgbImage.from_triples(2, 2, [(0, 0, 0)] * 3)


def test_stats_examples():
    assert transfer_stats(bytes(2244), SegmentPlan(452)) == TransferStats(2244, 5)
    assert transfer_stats(b"") == TransferStats(0, 1)
    assert transfer_stats(bytes(67)).messages == 1
    assert transfer_stats(bytes(68)).messages == 2
    with pytest.raises(TooManySegments):
        transfer_stats(bytes(70000))


def test_stats_with_image():
    data = make_ppm(8, 8)
    stats = transfer_stats(data, image=parse_ppm(data))
    assert stats.characters == len(data)
    assert stats.unique_colors == brute_unique(parse_ppm(data))
    assert stats.to_csv() == f"{len(data)},{stats.messages},{stats.unique_colors}"
    assert TransferStats(2244, 5).to_csv() == "2244,5,-"
    assert "unique colors" in stats.to_table("x")


@given(st.integers(0, 5000), st.integers(0, 5000), st.integers(4, 300))
def test_messages_monotone_in_characters(n1, n2, capacity):
    plan = SegmentPlan(capacity)
    lo, hi = sorted((n1, n2))
    try:
        assert transfer_stats(bytes(lo), plan).messages <= transfer_stats(bytes(hi), plan).messages
    except TooManySegments:
        pass


@given(st.integers(0, 5000), st.integers(4, 300), st.integers(4, 300))
def test_messages_non_increasing_in_capacity(n, c1, c2):
    small, big = sorted((c1, c2))
    try:
        a = transfer_stats(bytes(n), SegmentPlan(small)).messages
    except TooManySegments:
        return
    assert transfer_stats(bytes(n), SegmentPlan(big)).messages <= a

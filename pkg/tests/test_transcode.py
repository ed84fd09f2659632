import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stereosms import RangeViolation, code_points, decode_text, encode_bytes, from_code_points


def lookup_table():
    # built from the rule as stated, without touching the codec
    table = {}
    for b in range(256):
        table[b] = b + 256 if b <= 31 else b
    return table


@pytest.mark.parametrize("payload, points", [
    ([65], [65]),
    ([0], [256]),
    ([31, 32, 255], [287, 32, 255]),
    ([], []),
])
def test_encode_examples(payload, points):
    assert code_points(encode_bytes(payload)) == points


@pytest.mark.parametrize("points, payload", [
    ([256], [0]),
    ([65], [65]),
    ([287, 32], [31, 32]),
])
def test_decode_examples(points, payload):
    assert list(decode_text(from_code_points(points))) == payload
    assert list(decode_text(points)) == payload


def test_bijection_against_table():
    table = lookup_table()
    assert code_points(encode_bytes(bytes(range(256)))) == [table[b] for b in range(256)]
    assert sorted(table.values()) == list(range(32, 288))
    inverse = {p: b for b, p in table.items()}
    for p in range(32, 288):
        assert decode_text(chr(p)) == bytes([inverse[p]])


@pytest.mark.parametrize("bad", [0, 10, 13, 31, 288, 300, 0x10FFFF])
def test_decode_rejects_out_of_range(bad):
    with pytest.raises(RangeViolation) as info:
        decode_text("AB" + chr(bad))
    assert info.value.position == 2
    assert info.value.point == bad


def test_encode_rejects_non_bytes():
    with pytest.raises(ValueError):
        encode_bytes([256])


def test_utf8_file_form():
    assert chr(255).encode("utf-8") == b"\xc3\xbf"
    assert encode_bytes([0]).encode("utf-8") == b"\xc4\x80"
    assert encode_bytes([31]).encode("utf-8") == b"\xc4\x9f"


@given(st.binary(max_size=10000))
@settings(max_examples=300)
def test_round_trip(data):
    text = encode_bytes(data)
    assert len(text) == len(data)
    assert decode_text(text) == data


@given(st.binary(max_size=2000))
def test_range_safety(data):
    points = code_points(encode_bytes(data))
    assert all(32 <= p <= 287 for p in points)
    assert 10 not in points and 13 not in points

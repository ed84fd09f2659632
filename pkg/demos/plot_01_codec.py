"""
Turning bytes into SMS text
===========================

Every byte becomes exactly one character.  Printable and high bytes keep
their value; control bytes 0-31 are lifted to 256-287 so that no NUL, LF or
CR ever reaches the SMS body.
"""

from stereosms import code_points, decode_text, encode_bytes

payload = bytes([0, 10, 13, 31, 32, 65, 127, 200, 255])
text = encode_bytes(payload)
print("bytes      :", list(payload))
print("code points:", code_points(text))

# same length in, same length out
assert len(text) == len(payload)

# the UTF-8 file form: 255 -> C3 BF, 256 -> C4 80
print("utf-8      :", text.encode("utf-8").hex(" "))

# and back
assert decode_text(text) == payload
print("round trip ok")

"""8-bit portable graymap (P2 / P5) reading and writing."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import PgmParseError

_WS = b" \t\n\r\v\f"


class _Header:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0
        self.last = 0

    def skip_ws(self):
        d = self.data
        while self.pos < len(d):
            ch = d[self.pos : self.pos + 1]
            if ch == b"#":
                end = d.find(b"\n", self.pos)
                self.pos = len(d) if end < 0 else end + 1
            elif ch in _WS:
                self.pos += 1
            else:
                break

    def token(self) -> bytes:
        self.skip_ws()
        start = self.pos
        d = self.data
        while self.pos < len(d) and d[self.pos : self.pos + 1] not in _WS and d[self.pos : self.pos + 1] != b"#":
            self.pos += 1
        if start == self.pos:
            raise PgmParseError("unexpected end of header", start)
        return d[start : self.pos]

    def int_token(self, what: str) -> int:
        self.skip_ws()
        start = self.last = self.pos
        tok = self.token()
        if not tok.isdigit():
            raise PgmParseError(f"bad {what} {tok!r}", start)
        return int(tok)


def decode_pgm(data: bytes) -> np.ndarray:
    if len(data) < 2 or data[:2] not in (b"P5", b"P2"):
        raise PgmParseError(f"not a PGM file (magic {data[:2]!r})", 0)
    magic = data[:2]
    h = _Header(data)
    h.pos = 2
    width = h.int_token("width")
    height = h.int_token("height")
    maxval = h.int_token("maxval")
    maxpos = h.last
    if width < 1 or height < 1:
        raise PgmParseError(f"empty image {width}x{height}", maxpos)
    if not 1 <= maxval <= 255:
        raise PgmParseError(f"maxval {maxval} not in 1..255 (only 8-bit images are supported)", maxpos)
    count = width * height

    if magic == b"P5":
        if h.pos >= len(data) or data[h.pos : h.pos + 1] not in _WS:
            raise PgmParseError("missing whitespace after maxval", h.pos)
        start = h.pos + 1
        payload = data[start : start + count]
        if len(payload) < count:
            raise PgmParseError(f"truncated payload: {len(payload)} of {count} bytes", start + len(payload))
        pixels = np.frombuffer(payload, dtype=np.uint8)
        if pixels.max() > maxval:
            bad = int(np.argmax(pixels > maxval))
            raise PgmParseError(f"sample {pixels[bad]} exceeds maxval {maxval}", start + bad)
    else:
        values = []
        for _ in range(count):
            h.skip_ws()
            if h.pos >= len(data):
                raise PgmParseError(f"truncated payload: {len(values)} of {count} samples", h.pos)
            v = h.int_token("sample")
            if v > maxval:
                raise PgmParseError(f"sample {v} exceeds maxval {maxval}", h.last)
            values.append(v)
        pixels = np.array(values)
    return pixels.reshape(height, width).astype(float)


def encode_pgm(image) -> bytes:
    """Binary P5, maxval 255; values are rounded half-up and clamped."""
    a = np.asarray(image, dtype=float)
    if a.ndim != 2 or a.size == 0:
        raise ValueError(f"expected a non-empty 2-D image, got shape {a.shape}")
    q = np.clip(np.floor(a + 0.5), 0, 255).astype(np.uint8)
    h, w = q.shape
    return f"P5\n{w} {h}\n255\n".encode("ascii") + q.tobytes()


def read_pgm(path) -> np.ndarray:
    return decode_pgm(Path(path).read_bytes())


def write_pgm(image, path) -> None:
    Path(path).write_bytes(encode_pgm(image))

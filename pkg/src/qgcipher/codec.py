"""Byte <-> symbol mapping and on-disk stream formats.

In the ``bytes`` scheme each byte is one symbol in ``0..255``; symbol 256
marks a single pad appended to odd-length streams and 257 is reserved as
filler (dropped on decode).  This needs a modulus of at least 258, which the
default 313 satisfies.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

PAD = 256
FILLER = 257


class SymbolOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class Codec:
    n: int = 313
    scheme: str = "bytes"
    pad_symbol: int = PAD

    def __post_init__(self):
        if self.scheme not in ("bytes", "decimal-list"):
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if self.scheme == "bytes" and self.n < 258:
            raise ValueError(f"bytes scheme needs modulus >= 258, got {self.n}")

    def encode(self, data: bytes | Iterable[int]) -> list[int]:
        if self.scheme == "decimal-list":
            syms = [int(s) for s in data]
            for s in syms:
                if not 0 <= s < self.n:
                    raise SymbolOutOfRange(f"symbol {s} outside [0, {self.n})")
            return syms
        syms = list(bytes(data))
        if len(syms) % 2:
            syms.append(self.pad_symbol)
        return syms

    def decode(self, symbols: Sequence[int]) -> bytes | list[int]:
        if self.scheme == "decimal-list":
            return [int(s) for s in symbols]
        syms = [s for s in symbols if s != FILLER]
        if syms and syms[-1] == self.pad_symbol:
            syms.pop()
        for i, s in enumerate(syms):
            if not 0 <= s <= 255:
                raise SymbolOutOfRange(f"symbol {s} at position {i} is not a data byte")
        return bytes(syms)


def encode(codec: Codec, data) -> list[int]:
    return codec.encode(data)


def decode(codec: Codec, symbols: Sequence[int]):
    return codec.decode(symbols)


def format_symbols(symbols: Iterable[int]) -> str:
    """``56; 43; 105`` style text."""
    return "; ".join(str(int(s)) for s in symbols)


def parse_symbols(text: str) -> list[int]:
    parts = [p.strip() for p in text.replace("\n", ";").split(";")]
    try:
        return [int(p) for p in parts if p]
    except ValueError as e:
        raise SymbolOutOfRange(f"not a decimal symbol list: {e}") from None


def pack_symbols(symbols: Iterable[int]) -> bytes:
    """Two big-endian bytes per symbol."""
    out = bytearray()
    for s in symbols:
        if not 0 <= s < 1 << 16:
            raise SymbolOutOfRange(f"symbol {s} does not fit in 16 bits")
        out += s.to_bytes(2, "big")
    return bytes(out)


def unpack_symbols(data: bytes) -> list[int]:
    if len(data) % 2:
        raise SymbolOutOfRange("binary symbol stream has odd byte length")
    return [int.from_bytes(data[i:i + 2], "big") for i in range(0, len(data), 2)]

"""Factor records and the reference decoder."""

from typing import NamedTuple, Union


class Literal(NamedTuple):
    byte: int


class Copy(NamedTuple):
    length: int
    dist: int  # start-to-start distance back to the referenced occurrence


Factor = Union[Literal, Copy]


def decode(factors):
    out = bytearray()
    for f in factors:
        if isinstance(f, Literal):
            out.append(f.byte)
            continue
        src = len(out) - f.dist
        if f.dist < 1 or src < 0 or f.length < 1:
            raise ValueError(f"bad copy {f} at output offset {len(out)}")
        if f.dist >= f.length:
            out += out[src:src + f.length]
        else:
            # overlapping copy, byte by byte
            for k in range(f.length):
                out.append(out[src + k])
    return bytes(out)

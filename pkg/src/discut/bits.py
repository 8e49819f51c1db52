"""Small helpers for int-as-bitset vertex sets."""

from typing import Iterable, Iterator, List


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def to_list(x: int) -> List[int]:
    return list(iter_bits(x))


def from_iter(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def lowest(x: int) -> int:
    """Index of the lowest set bit (x must be nonzero)."""
    return (x & -x).bit_length() - 1


def popcount(x: int) -> int:
    return bin(x).count("1")

"""
Integer partitions as used to label nilpotent orbits of gl_n.

A partition is stored as a weakly decreasing tuple of positive parts.
Comparisons of partitions of different lengths pad with zeros.

>>> p = Partition.parse("5+4+3")
>>> p.transpose()
Partition(3, 3, 3, 2, 1)
>>> add(Partition(1, 1, 1), Partition(1, 1))
Partition(2, 2, 1)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import reduce
from itertools import accumulate, zip_longest
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition", "Order", "transpose", "add", "union", "dominance_compare",
    "not_dominated", "top_orbit", "top_orbit_closed_form", "partitions_of",
    "rectangle",
]


@dataclass(frozen=True, init=False)
class Partition:
    parts: tuple[int, ...]
    n: int = field(compare=False)

    def __init__(self, *parts: int):
        if len(parts) == 1 and not isinstance(parts[0], int):
            parts = tuple(parts[0])
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        """Build from any iterable of non-negative ints: zeros dropped, parts sorted."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Accepts "3+2+1", "3,2,1" or "[3, 2, 1]"; the empty string is the empty partition."""
        text = text.strip().strip("[]").strip()
        if not text:
            return cls()
        sep = "+" if "+" in text else ","
        try:
            parts = [int(tok) for tok in text.split(sep)]
        except ValueError:
            raise ValueError(f"cannot parse partition {text!r}") from None
        return cls(parts)

    def __str__(self) -> str:
        return "+".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self.parts))})"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        # zero beyond the last part, so prefix comparisons can pad implicitly
        if 0 <= i < len(self.parts):
            return self.parts[i]
        if i >= len(self.parts):
            return 0
        return self.parts[i]

    def prefix_sums(self, length: int | None = None) -> list[int]:
        length = len(self.parts) if length is None else length
        return list(accumulate(self[i] for i in range(length)))

    def transpose(self) -> Partition:
        return transpose(self)

    def to_json(self) -> list[int]:
        return list(self.parts)


def rectangle(part: int, copies: int) -> Partition:
    """[part^copies]"""
    return Partition([part] * copies)


def transpose(p: Partition) -> Partition:
    width = p[0]
    return Partition([sum(1 for q in p.parts if q >= i) for i in range(1, width + 1)])


def add(*ps: Partition) -> Partition:
    """Componentwise sum, shorter partitions padded with zeros."""
    if len(ps) == 1 and not isinstance(ps[0], Partition):
        ps = tuple(ps[0])
    sums = [sum(col) for col in zip_longest(*(p.parts for p in ps), fillvalue=0)]
    return Partition(sums)


def union(ps: Iterable[Partition]) -> Partition:
    """Multiset union of parts."""
    return Partition.from_parts(q for p in ps for q in p.parts)


class Order(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def _check_same_size(p: Partition, q: Partition) -> None:
    if p.n != q.n:
        raise ValueError(f"partitions of different sizes: {p} ({p.n}) vs {q} ({q.n})")


def dominance_compare(p: Partition, q: Partition) -> Order:
    _check_same_size(p, q)
    length = max(len(p), len(q))
    above = below = False
    for a, b in zip(p.prefix_sums(length), q.prefix_sums(length)):
        above |= a > b
        below |= a < b
    if above and below:
        return Order.INCOMPARABLE
    if above:
        return Order.GREATER
    if below:
        return Order.LESS
    return Order.EQUAL


def not_dominated(lam: Partition, mu: Partition) -> tuple[bool, int | None]:
    """
    Whether some prefix sum of `lam` strictly exceeds the matching prefix sum
    of `mu`, i.e. `lam` is bigger than or not related to `mu`.

    Returns ``(flag, i)`` with `i` the least 1-based witness index, or None.

    >>> not_dominated(Partition(3, 3), Partition(4, 2))
    (False, None)
    >>> not_dominated(Partition(6), Partition(3, 3))
    (True, 1)
    """
    _check_same_size(lam, mu)
    length = max(len(lam), len(mu))
    for i, (a, b) in enumerate(zip(lam.prefix_sums(length), mu.prefix_sums(length)), 1):
        if a > b:
            return True, i
    return False, None


def top_orbit(blocks: Sequence[tuple[int, int]]) -> Partition:
    """
    The partition [a_1^{b_1}] + ... + [a_r^{b_r}] for pairs (a_i, b_i).

    >>> top_orbit([(1, 3), (1, 4), (1, 5)])
    Partition(3, 3, 3, 2, 1)
    """
    if not blocks:
        raise ValueError("top_orbit needs at least one (a, b) pair")
    for a, b in blocks:
        if a < 1 or b < 1:
            raise ValueError(f"a and b must be positive, got ({a}, {b})")
    return reduce(lambda acc, ab: add(acc, rectangle(*ab)), blocks, Partition())


def top_orbit_closed_form(blocks: Sequence[tuple[int, int]]) -> Partition:
    """
    Same partition, read off after sorting by b descending: the value
    a_1 + ... + a_k is repeated b_k - b_{k+1} times.
    """
    ordered = sorted(blocks, key=lambda ab: ab[1], reverse=True)
    parts: list[int] = []
    running = 0
    for k, (a, b) in enumerate(ordered):
        running += a
        next_b = ordered[k + 1][1] if k + 1 < len(ordered) else 0
        parts.extend([running] * (b - next_b))
    return Partition(sorted(parts, reverse=True))


def partitions_of(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    largest = n if largest is None else min(largest, n)
    if n == 0:
        yield Partition()
        return
    for first in range(largest, 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)

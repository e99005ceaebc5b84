"""GF(2) linear algebra on words packed into Python ints.

Coordinate ``i`` of a word of width ``w`` is bit ``i`` (least significant
bit is coordinate 0). A prefix of length ``m`` refers to coordinates
``0..m-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple


def word_from_bits(bits: Sequence[int]) -> int:
    out = 0
    for i, b in enumerate(bits):
        if b & 1:
            out |= 1 << i
    return out


def bits_from_word(word: int, width: int) -> List[int]:
    return [(word >> i) & 1 for i in range(width)]


def word_from_support(support: Iterable[int]) -> int:
    out = 0
    for i in support:
        out |= 1 << i
    return out


def support(word: int) -> Tuple[int, ...]:
    out = []
    i = 0
    while word:
        if word & 1:
            out.append(i)
        word >>= 1
        i += 1
    return tuple(out)


def weight(word: int) -> int:
    return bin(word).count("1")


@dataclass(frozen=True)
class F2Matrix:
    rows: Tuple[int, ...]
    width: int

    def __post_init__(self):
        if self.width <= 0:
            raise ValueError("width must be positive")
        limit = 1 << self.width
        for r in self.rows:
            if not 0 <= r < limit:
                raise ValueError(f"row {r:#x} does not fit width {self.width}")

    @classmethod
    def from_rows(cls, rows: Iterable[int], width: int) -> "F2Matrix":
        return cls(tuple(rows), width)

    @classmethod
    def from_bits(cls, rows: Iterable[Sequence[int]]) -> "F2Matrix":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else 1
        if any(len(r) != width for r in rows):
            raise ValueError("rows have differing widths")
        return cls(tuple(word_from_bits(r) for r in rows), width)


def echelon(rows: Iterable[int]) -> List[Tuple[int, int]]:
    """Fully reduced basis as ``(pivot_coordinate, row)`` pairs.

    The pivot of each row is its lowest set bit, and no other basis row has
    that bit set.
    """
    basis: List[Tuple[int, int]] = []
    for r in rows:
        for p, b in basis:
            if (r >> p) & 1:
                r ^= b
        if not r:
            continue
        p = (r & -r).bit_length() - 1
        for k, (q, b) in enumerate(basis):
            if (b >> p) & 1:
                basis[k] = (q, b ^ r)
        basis.append((p, r))
    return basis


def f2_rank(m: F2Matrix | Iterable[int]) -> int:
    rows = m.rows if isinstance(m, F2Matrix) else m
    return len(echelon(rows))


def in_span(word: int, rows: Iterable[int]) -> bool:
    for p, b in echelon(rows):
        if (word >> p) & 1:
            word ^= b
    return word == 0


def _prefix_split(rows: Sequence[int], width: int, prefix: Sequence[int]):
    m = len(prefix)
    if m > width:
        raise ValueError("prefix longer than word width")
    basis = echelon(rows)
    head = [(p, b) for p, b in basis if p < m]
    tail = [b for p, b in basis if p >= m]
    # each basis row's pivot is its lowest set bit, so `tail` rows vanish on the prefix
    target = word_from_bits(prefix)
    mask = (1 << m) - 1
    shift = 0
    for p, b in head:
        if ((target ^ shift) >> p) & 1:
            shift ^= b & mask
    return head, tail, (shift == target)


def f2_span_count_with_prefix(rows: Sequence[int], prefix: Sequence[int], width: int | None = None) -> int:
    """Number of span elements whose first ``len(prefix)`` coordinates equal ``prefix``.

    Computed from ranks: the span elements with a given attainable prefix
    form a coset of the prefix-zero subspace, of size ``2**(rank - rank_prefix)``.
    """
    rows = list(rows)
    if width is None:
        width = max([r.bit_length() for r in rows] + [len(prefix), 1])
    head, tail, reachable = _prefix_split(rows, width, prefix)
    if not reachable:
        return 0
    return 1 << len(tail)


def f2_span_words_with_prefix(rows: Sequence[int], prefix: Sequence[int], width: int | None = None) -> List[int]:
    """Enumerate the span elements with the given prefix (a coset of size ``2**k``)."""
    rows = list(rows)
    if width is None:
        width = max([r.bit_length() for r in rows] + [len(prefix), 1])
    head, tail, reachable = _prefix_split(rows, width, prefix)
    if not reachable:
        return []
    m = len(prefix)
    target = word_from_bits(prefix)
    base = 0
    for p, b in head:
        if ((target ^ base) >> p) & 1:
            base ^= b
    assert base & ((1 << m) - 1) == target
    words = [base]
    for t in tail:
        words += [w ^ t for w in words]
    return sorted(words)

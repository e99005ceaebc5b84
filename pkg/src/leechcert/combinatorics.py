"""Steiner systems S(2,5,21) and S(3,6,22), plus block-file I/O."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Iterable, List, Optional, Tuple

from .exact.gf2 import f2_rank, support, weight, word_from_support
from .leech import BinaryCode

# GF(4) = {0, 1, w, w^2} encoded 0..3; addition is XOR
_LOG = {1: 0, 2: 1, 3: 2}
_EXP = [1, 2, 3]


def gf4_mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return _EXP[(_LOG[a] + _LOG[b]) % 3]


class SteinerError(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


@dataclass(frozen=True)
class SteinerSystem:
    t: int
    k: int
    v: int
    blocks: BinaryCode

    def __post_init__(self):
        if self.blocks.length != self.v:
            raise ValueError("block length differs from v")
        bad = [b for b in self.blocks.words if weight(b) != self.k]
        if bad:
            raise ValueError(f"block {support(bad[0])} does not have size {self.k}")

    @property
    def expected_block_count(self) -> int:
        return comb(self.v, self.t) // comb(self.k, self.t)

    def __len__(self):
        return len(self.blocks)

    def incidence_rank(self) -> int:
        return f2_rank(self.blocks.words)

    def verify(self) -> Tuple[bool, Optional[Tuple[Tuple[int, ...], int]]]:
        return verify_steiner(self.blocks, self.t, self.k, self.v)


def verify_steiner(blocks: BinaryCode, t: int, k: int, v: int):
    """``(True, None)`` iff every ``t``-subset lies in exactly one block.

    On failure the witness is ``(subset, times_covered)`` for the first
    offending subset in lexicographic order.
    """
    if blocks.length != v:
        raise ValueError("block length differs from v")
    cover = Counter()
    for b in blocks.words:
        pts = support(b)
        if len(pts) != k:
            raise ValueError(f"block {pts} does not have size {k}")
        cover.update(combinations(pts, t))
    for sub in combinations(range(v), t):
        c = cover.get(sub, 0)
        if c != 1:
            return False, (sub, c)
    return True, None


def distance_profile(code: BinaryCode) -> Counter:
    """Multiset of Hamming distances over unordered pairs of distinct words."""
    return code.distance_profile()


@lru_cache(maxsize=None)
def pg24_points() -> Tuple[Tuple[int, int, int], ...]:
    """Normalized homogeneous coordinates (first nonzero entry 1) over GF(4)."""
    pts = [p for p in product(range(4), repeat=3) if any(p)]
    return tuple(p for p in pts if p[next(i for i in range(3) if p[i])] == 1)


def _dot(a, b) -> int:
    out = 0
    for x, y in zip(a, b):
        out ^= gf4_mul(x, y)
    return out


def build_pg24() -> SteinerSystem:
    """The 21 lines of the projective plane over GF(4) as an S(2,5,21)."""
    pts = pg24_points()
    lines = [word_from_support(i for i, p in enumerate(pts) if _dot(p, ell) == 0) for ell in pts]
    sys_ = SteinerSystem(2, 5, 21, BinaryCode.from_words(21, lines))
    ok, wit = sys_.verify()
    if not ok:
        raise SteinerError("projective plane construction failed", wit)
    return sys_


def hyperovals(plane: SteinerSystem) -> List[int]:
    """All 6-point sets meeting every line in 0 or 2 points."""
    v = plane.v
    lines = sorted(plane.blocks.words)
    # collinear[a][b] = line through a and b
    line_of = {}
    for ell in lines:
        for a, b in combinations(support(ell), 2):
            line_of[(a, b)] = ell
    out = []

    def extend(chosen: List[int], covered: int):
        if len(chosen) == 6:
            out.append(word_from_support(chosen))
            return
        for p in range(chosen[-1] + 1 if chosen else 0, v):
            if covered >> p & 1:
                continue
            new = covered
            for q in chosen:
                new |= line_of[(q, p)]
            extend(chosen + [p], new)

    extend([], 0)
    return out


def build_s3622() -> SteinerSystem:
    """One-point extension of PG(2,4): lines plus a new point, and 56 hyperovals.

    The 168 hyperovals fall into three classes whose members pairwise meet in
    an even number of points; one class (that of the lexicographically first
    hyperoval) supplies the remaining blocks. The result is gated by
    ``verify_steiner``.
    """
    plane = build_pg24()
    ovals = hyperovals(plane)
    h0 = min(ovals)
    cls = [h for h in ovals if weight(h & h0) % 2 == 0]
    inf = 1 << 21
    blocks = [ell | inf for ell in plane.blocks.words] + cls
    sys_ = SteinerSystem(3, 6, 22, BinaryCode.from_words(22, blocks))
    ok, wit = sys_.verify()
    if not ok:
        raise SteinerError("one-point extension failed", wit)
    return sys_


# -- block file format ----------------------------------------------------

def format_blocks(system: SteinerSystem) -> str:
    rows = sorted(support(b) for b in system.blocks.words)
    lines = [f"steiner {system.t} {system.k} {system.v} {len(rows)}"]
    lines += [" ".join(map(str, r)) for r in rows]
    return "\n".join(lines) + "\n"


def parse_blocks(text: str) -> SteinerSystem:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty block file")
    head = lines[0].split()
    if len(head) != 5 or head[0] != "steiner":
        raise ValueError(f"bad header {lines[0]!r}")
    t, k, v, count = map(int, head[1:])
    if len(lines) - 1 != count:
        raise ValueError(f"header says {count} blocks, found {len(lines) - 1}")
    words = []
    for ln in lines[1:]:
        pts = [int(x) for x in ln.split()]
        if any(not 0 <= p < v for p in pts) or len(set(pts)) != len(pts):
            raise ValueError(f"bad block line {ln!r}")
        words.append(word_from_support(pts))
    return SteinerSystem(t, k, v, BinaryCode.from_words(v, words))


def blocks_from_supports(v: int, supports: Iterable[Iterable[int]]) -> BinaryCode:
    return BinaryCode.from_words(v, (word_from_support(s) for s in supports))

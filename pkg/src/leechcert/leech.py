"""Binary Golay code and the minimal vectors of the Leech lattice.

Vectors are stored as integer coordinate rows with an implicit global
scale ``1/sqrt(8)``: a row ``c`` denotes ``c / sqrt(8)``, so its norm is
``sum(c*c) / 8`` and the inner product of two rows is ``c . d / 8``.
Minimal vectors have norm 4 (raw squared length 32).
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import isqrt
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from .exact.gf2 import support, weight

log = logging.getLogger(__name__)

DIM = 24
DENOM_SQ = 8
MIN_NORM_RAW = 32  # 8 * norm 4

# generator polynomial of the cyclic [23,12,7] code, as exponents
_GOLAY_POLY = (0, 2, 4, 5, 6, 10, 11)
INFINITY = 23


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class ScaledVector:
    """Integer coordinates with an implicit scale ``1/sqrt(denom_sq)``."""

    coords: Tuple[int, ...]
    denom_sq: int = DENOM_SQ

    @classmethod
    def of(cls, coords, denom_sq: int = DENOM_SQ) -> "ScaledVector":
        return cls(tuple(int(c) for c in coords), denom_sq)

    @property
    def norm(self) -> Fraction:
        return Fraction(sum(c * c for c in self.coords), self.denom_sq)

    def __neg__(self):
        return ScaledVector(tuple(-c for c in self.coords), self.denom_sq)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coords, dtype=np.int64)


def inner(v, w) -> Fraction:
    """Exact inner product of two scaled vectors (or raw rows at scale 1/sqrt(8))."""
    if isinstance(v, ScaledVector) or isinstance(w, ScaledVector):
        v = v if isinstance(v, ScaledVector) else ScaledVector.of(v)
        w = w if isinstance(w, ScaledVector) else ScaledVector.of(w)
        if len(v.coords) != len(w.coords):
            raise DimensionMismatch(f"{len(v.coords)} != {len(w.coords)}")
        prod_sq = v.denom_sq * w.denom_sq
        root = isqrt(prod_sq)
        if root * root != prod_sq:
            raise ValueError("inner product of these scales is irrational")
        return Fraction(sum(a * b for a, b in zip(v.coords, w.coords)), root)
    a = np.asarray(v, dtype=np.int64)
    b = np.asarray(w, dtype=np.int64)
    if a.shape != b.shape:
        raise DimensionMismatch(f"{a.shape} != {b.shape}")
    return Fraction(int(a @ b), DENOM_SQ)


# -- binary codes ---------------------------------------------------------


@dataclass(frozen=True)
class BinaryCode:
    """A set of GF(2) words of fixed length (packed ints, bit i = coordinate i)."""

    length: int
    words: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        limit = 1 << self.length
        bad = [w for w in self.words if not 0 <= w < limit]
        if bad:
            raise ValueError(f"word {bad[0]:#x} does not fit length {self.length}")

    @classmethod
    def from_words(cls, length: int, words: Iterable[int]) -> "BinaryCode":
        return cls(length, frozenset(words))

    def __len__(self):
        return len(self.words)

    def __contains__(self, w):
        return w in self.words

    def __iter__(self):
        return iter(sorted(self.words))

    def weight_distribution(self) -> Dict[int, int]:
        return dict(sorted(Counter(weight(w) for w in self.words).items()))

    def distance_profile(self) -> Counter:
        ws = sorted(self.words)
        return Counter(weight(a ^ b) for a, b in combinations(ws, 2))

    def min_distance(self) -> int | None:
        prof = self.distance_profile()
        return min(prof) if prof else None

    def words_of_weight(self, k: int) -> List[int]:
        return sorted(w for w in self.words if weight(w) == k)


def golay_generators() -> List[int]:
    """Twelve generators of the extended Golay code (cyclic shifts + parity bit)."""
    gens = []
    for s in range(12):
        w = 0
        for e in _GOLAY_POLY:
            w |= 1 << ((e + s) % 23)
        if weight(w) % 2:
            w |= 1 << INFINITY
        gens.append(w)
    return gens


class GolayConstructionError(RuntimeError):
    pass


@lru_cache(maxsize=1)
def build_golay() -> BinaryCode:
    """The [24,12,8] extended binary Golay code, gated by its weight distribution."""
    words = {0}
    for g in golay_generators():
        words |= {w ^ g for w in words}
    code = BinaryCode.from_words(DIM, words)
    expected = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
    if code.weight_distribution() != expected:
        raise GolayConstructionError(f"weight distribution {code.weight_distribution()}")
    return code


def _permute_word(w: int, perm: Sequence[int]) -> int:
    out = 0
    for i in support(w):
        out |= 1 << perm[i]
    return out


def golay_permutations() -> List[Tuple[int, ...]]:
    """Coordinate permutations verified to preserve the Golay code.

    Positions 0..22 are the field with 23 elements and 23 is the point at
    infinity; the candidates are translation, multiplication by 2 and
    ``x -> -1/x``. Each is returned as ``perm`` with coordinate ``i`` sent
    to ``perm[i]``.
    """
    def _mob(i):
        if i == 0:
            return INFINITY
        if i == INFINITY:
            return 0
        return (-pow(i, 21, 23)) % 23

    cands = [
        tuple(i if i == INFINITY else (i + 1) % 23 for i in range(DIM)),
        tuple(i if i == INFINITY else (2 * i) % 23 for i in range(DIM)),
        tuple(_mob(i) for i in range(DIM)),
    ]
    code = build_golay()
    out = []
    for perm in cands:
        if all(_permute_word(g, perm) in code for g in golay_generators()):
            out.append(perm)
    return out


# -- Leech minimal vectors ------------------------------------------------


def _sort_rows(arr: np.ndarray) -> np.ndarray:
    order = np.lexsort(arr.T[::-1])
    return arr[order]


@lru_cache(maxsize=1)
def _leech_minimal_cached() -> np.ndarray:
    golay = build_golay()
    rows = []
    # shape (+-4, +-4, 0^22)
    for i, j in combinations(range(DIM), 2):
        for si, sj in product((4, -4), repeat=2):
            v = np.zeros(DIM, dtype=np.int8)
            v[i], v[j] = si, sj
            rows.append(v)
    shape1 = np.array(rows, dtype=np.int8)
    # shape (+-2^8, 0^16) on octads, even number of minus signs
    octads = golay.words_of_weight(8)
    signs = np.array([s for s in product((1, -1), repeat=8) if np.prod(s) == 1], dtype=np.int8)
    blocks = []
    for o in octads:
        idx = list(support(o))
        blk = np.zeros((len(signs), DIM), dtype=np.int8)
        blk[:, idx] = 2 * signs
        blocks.append(blk)
    shape2 = np.concatenate(blocks)
    # shape (-+3, +-1^23): (1^24) - 4 e_i with signs flipped on a Golay codeword
    words = np.array(sorted(golay.words), dtype=np.int64)
    flips = 1 - 2 * ((words[:, None] >> np.arange(DIM)) & 1)  # +-1 per coordinate
    base = np.ones((DIM, DIM), dtype=np.int8) - 4 * np.eye(DIM, dtype=np.int8)
    shape3 = (base[:, None, :] * flips[None, :, :]).reshape(-1, DIM).astype(np.int8)
    out = _sort_rows(np.concatenate([shape1, shape2, shape3]))
    out.setflags(write=False)
    return out


def leech_minimal_vectors() -> np.ndarray:
    """All 196560 minimal vectors as a read-only ``(196560, 24)`` int8 array, sorted."""
    return _leech_minimal_cached()


def shape_classes(vectors: np.ndarray) -> Dict[str, int]:
    """Counts of the three coordinate shapes, keyed by nonzero-coordinate count."""
    nz = np.count_nonzero(vectors, axis=1)
    return {
        "(4^2,0^22)": int(np.sum(nz == 2)),
        "(2^8,0^16)": int(np.sum(nz == 8)),
        "(3,1^23)": int(np.sum(nz == 24)),
    }


def norms_raw(vectors: np.ndarray) -> np.ndarray:
    v = vectors.astype(np.int32)
    return np.einsum("ij,ij->i", v, v)


def neighbors(pool: np.ndarray, anchor, target) -> np.ndarray:
    """Rows of ``pool`` whose inner product with ``anchor`` equals ``target`` exactly."""
    target = Fraction(target)
    raw = target * DENOM_SQ
    if raw.denominator != 1:
        return pool[:0]
    dots = pool.astype(np.int32) @ np.asarray(anchor, dtype=np.int32)
    return pool[dots == int(raw)]


def row_index(vectors: np.ndarray) -> Dict[bytes, int]:
    v = np.ascontiguousarray(vectors, dtype=np.int8)
    return {v[i].tobytes(): i for i in range(len(v))}


def lookup_rows(index: Dict[bytes, int], rows: np.ndarray) -> np.ndarray:
    """Index of each row in a table built by ``row_index``; -1 when absent."""
    r = np.ascontiguousarray(rows, dtype=np.int8)
    get = index.get
    return np.fromiter((get(r[i].tobytes(), -1) for i in range(len(r))), dtype=np.int64, count=len(r))


# -- global inner-product histogram ----------------------------------------


@dataclass(frozen=True)
class SignedPermutation:
    perm: Tuple[int, ...]  # coordinate i is moved to perm[i]
    signs: Tuple[int, ...]  # applied after moving, per target coordinate

    def apply(self, rows: np.ndarray) -> np.ndarray:
        out = np.empty_like(rows)
        out[:, list(self.perm)] = rows
        return out * np.asarray(self.signs, dtype=rows.dtype)


def leech_automorphisms() -> List[SignedPermutation]:
    """Signed permutations that preserve the minimal-vector set (before verification)."""
    gens = []
    ident = tuple(range(DIM))
    for g in golay_generators():
        gens.append(SignedPermutation(ident, tuple(-1 if (g >> i) & 1 else 1 for i in range(DIM))))
    for perm in golay_permutations():
        gens.append(SignedPermutation(perm, (1,) * DIM))
    return gens


@dataclass
class OrbitDecomposition:
    labels: np.ndarray  # orbit label per vector
    representatives: List[int]
    sizes: List[int]
    generators: List[SignedPermutation]


def orbit_decomposition(vectors: np.ndarray, generators: Sequence[SignedPermutation]) -> OrbitDecomposition:
    """Orbits of the group generated by ``generators`` on the rows of ``vectors``.

    Raises ValueError if some generator does not map the set onto itself.
    """
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components

    n = len(vectors)
    index = row_index(vectors)
    src, dst = [], []
    for g in generators:
        img = lookup_rows(index, g.apply(np.asarray(vectors)))
        if np.any(img < 0):
            bad = int(np.flatnonzero(img < 0)[0])
            raise ValueError(f"generator does not preserve the set (row {bad})")
        src.append(np.arange(n))
        dst.append(img)
    src = np.concatenate(src) if src else np.zeros(0, dtype=np.int64)
    dst = np.concatenate(dst) if dst else np.zeros(0, dtype=np.int64)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
    count, labels = connected_components(graph, directed=True, connection="weak")
    reps, sizes = [], []
    first = np.full(count, -1, dtype=np.int64)
    for i, lab in enumerate(labels):
        if first[lab] < 0:
            first[lab] = i
    sizes_arr = np.bincount(labels, minlength=count)
    order = np.argsort(first)
    for lab in order:
        reps.append(int(first[lab]))
        sizes.append(int(sizes_arr[lab]))
    return OrbitDecomposition(labels, reps, sizes, list(generators))


def histogram_by_orbits(vectors: np.ndarray, orbits: OrbitDecomposition) -> Dict[int, int]:
    """Raw-dot histogram over all ordered pairs, from one representative per orbit.

    Valid because every generator is a verified signed permutation preserving
    the set, so the histogram of a vector against the set is constant on orbits.
    """
    V = np.asarray(vectors, dtype=np.int32)
    total: Counter = Counter()
    for rep, size in zip(orbits.representatives, orbits.sizes):
        vals, counts = np.unique(V @ V[rep], return_counts=True)
        for v, c in zip(vals.tolist(), counts.tolist()):
            total[v] += c * size
    return dict(sorted(total.items()))


def histogram_pairwise(vectors: np.ndarray, block: int = 4096, threads: int = 1) -> Dict[int, int]:
    """Raw-dot histogram over all ordered pairs by a blocked full scan.

    Uses float32 products, which are exact for these small integer rows.
    Blocks of the upper triangle are independent, so they may run on a
    thread pool; the summed histogram does not depend on scheduling.
    """
    from concurrent.futures import ThreadPoolExecutor

    V = np.asarray(vectors, dtype=np.float32)
    n = len(V)
    if n and float(np.abs(V).max()) ** 2 * V.shape[1] >= 2**24:
        raise ValueError("entries too large for exact float32 products")
    offset = int(np.abs(V).max() ** 2 * V.shape[1]) if n else 0
    starts = list(range(0, n, block))

    def work(si):
        s = starts[si]
        A = V[s:s + block]
        h = np.zeros(2 * offset + 1, dtype=np.int64)
        for t in starts[si:]:
            G = (A @ V[t:t + block].T).astype(np.int32)
            c = np.bincount((G + offset).ravel(), minlength=2 * offset + 1)
            h += c if t == s else 2 * c
        return h

    if threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            parts = list(ex.map(work, range(len(starts))))
    else:
        parts = [work(i) for i in range(len(starts))]
    tot = np.sum(parts, axis=0) if parts else np.zeros(1, dtype=np.int64)
    return {k - offset: int(c) for k, c in enumerate(tot) if c}


def leech_histogram(method: str = "orbits", threads: int = 1) -> Dict[int, int]:
    """Inner-product histogram over ordered pairs, keyed by exact inner product."""
    V = leech_minimal_vectors()
    if method == "orbits":
        raw = histogram_by_orbits(V, orbit_decomposition(V, leech_automorphisms()))
    elif method == "pairwise":
        raw = histogram_pairwise(V, threads=threads)
    else:
        raise ValueError(f"unknown method {method!r}")
    out = {}
    for k, c in raw.items():
        q = Fraction(k, DENOM_SQ)
        out[q] = out.get(q, 0) + c
    return out

"""Spherical codes derived from Leech minimal vectors by iterated kissing.

A derived code never stores irrational projected coordinates. It keeps the
ambient integer rows of its members plus the chain of anchors, and every
projected inner product is an affine function of the ambient raw dot
product, fixed by the chain of level parameters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .exact.linalg import solve_linear_system
from .exact.orthopoly import gegenbauer
from .leech import DENOM_SQ, DIM, MIN_NORM_RAW, histogram_pairwise, leech_histogram, leech_minimal_vectors


class EmptyNeighborhood(ValueError):
    pass


class NotAScheme(ValueError):
    """Two pairs with the same inner product have different intersection counts."""

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class OddDimensionUnsupported(ValueError):
    pass


def _affine(level_params: Sequence[Fraction]) -> Tuple[Fraction, Fraction]:
    """``(a, b)`` such that projected inner product = a * raw_dot + b."""
    a, b = Fraction(1, MIN_NORM_RAW), Fraction(0)
    for t in level_params:
        d = 1 - t * t
        a, b = a / d, (b - t * t) / d
    return a, b


@dataclass
class DerivedCode:
    members: np.ndarray
    anchors: np.ndarray = field(default_factory=lambda: np.zeros((0, DIM), dtype=np.int8))
    level_params: Tuple[Fraction, ...] = ()
    ambient_dim: int = DIM
    _hist: Optional[Dict[int, int]] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.members = np.asarray(self.members, dtype=np.int8)
        self.anchors = np.asarray(self.anchors, dtype=np.int8).reshape(-1, self.ambient_dim)
        self.level_params = tuple(Fraction(t) for t in self.level_params)
        if len(self.anchors) != len(self.level_params):
            raise ValueError("need one level parameter per anchor")

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.anchors)

    def __len__(self):
        return len(self.members)

    def projected(self, raw_dot) -> Fraction:
        a, b = _affine(self.level_params)
        return a * int(raw_dot) + b

    def raw_for(self, value) -> Optional[int]:
        """Raw dot product that projects to ``value``, if it is an integer."""
        a, b = _affine(self.level_params)
        raw = (Fraction(value) - b) / a
        return int(raw) if raw.denominator == 1 else None

    def validate(self) -> None:
        """Check the anchor conditions and self inner products; raise ValueError on failure."""
        V = self.members.astype(np.int32)
        if np.any(np.einsum("ij,ij->i", V, V) != MIN_NORM_RAW):
            raise ValueError("member with norm different from 4")
        for j, anc in enumerate(self.anchors):
            prefix = DerivedCode(self.members[:0], self.anchors[:j], self.level_params[:j])
            want = prefix.raw_for(self.level_params[j])
            dots = V @ anc.astype(np.int32)
            if want is None or np.any(dots != want):
                raise ValueError(f"members do not all meet anchor {j} at {self.level_params[j]}")
        if self.projected(MIN_NORM_RAW) != 1:
            raise ValueError("self inner product does not project to 1")

    # -- pair statistics -------------------------------------------------

    def raw_histogram(self, threads: int = 1) -> Dict[int, int]:
        """Raw dot products over all ordered member pairs, diagonal included."""
        if self._hist is None:
            self._hist = histogram_pairwise(self.members, threads=threads)
        return self._hist

    def histogram(self, threads: int = 1) -> Dict[Fraction, int]:
        out: Dict[Fraction, int] = {}
        for raw, c in self.raw_histogram(threads).items():
            s = self.projected(raw)
            out[s] = out.get(s, 0) + c
        return dict(sorted(out.items()))

    def max_inner(self) -> Fraction:
        support = [s for s in spectrum(self) if s < 1]
        if not support:
            raise ValueError("code has no distinct pairs")
        return max(support)


def leech_code(method: str = "orbits", threads: int = 1) -> DerivedCode:
    """The (24,196560,1/2) kissing code with its pair histogram precomputed."""
    code = DerivedCode(leech_minimal_vectors())
    hist = leech_histogram(method=method, threads=threads)
    code._hist = {int(k * DENOM_SQ): c for k, c in hist.items()}
    return code


def derive_kissing(code: DerivedCode, base, t=None) -> DerivedCode:
    """Members at the code's maximal projected inner product ``t`` from ``base``."""
    base = np.asarray(base, dtype=np.int8)
    M = code.members
    if not np.any(np.all(M == base, axis=1)):
        raise ValueError("base is not a member of the code")
    t = code.max_inner() if t is None else Fraction(t)
    if not t < 1:
        raise ValueError("maximal inner product must be < 1")
    raw = code.raw_for(t)
    if raw is None:
        raise EmptyNeighborhood(f"no integer raw dot product projects to {t}")
    dots = M.astype(np.int32) @ base.astype(np.int32)
    sel = M[dots == raw]
    if not len(sel):
        raise EmptyNeighborhood(f"no member at inner product {t} from base")
    anchors = np.concatenate([code.anchors, base[None, :]])
    return DerivedCode(sel, anchors, code.level_params + (t,), code.ambient_dim)


def kissing_chain(depth: int, base_choice: int = 0, threads: int = 1) -> List[DerivedCode]:
    """``[Leech code, 4600, 891, 336, 170, ...]`` up to ``depth`` derivations.

    The base at each level is the member at position ``base_choice`` (mod size)
    of the lexicographically sorted member list.
    """
    chain = [leech_code(threads=threads)]
    for _ in range(depth):
        c = chain[-1]
        chain.append(derive_kissing(c, c.members[base_choice % len(c)]))
    return chain


def spectrum(code: DerivedCode, threads: int = 1) -> Counter:
    """Projected inner products over unordered pairs of distinct members."""
    hist = dict(code.raw_histogram(threads))
    hist[MIN_NORM_RAW] = hist.get(MIN_NORM_RAW, 0) - len(code)
    out = Counter()
    for raw, c in hist.items():
        if c:
            assert c % 2 == 0
            out[code.projected(raw)] += c // 2
    return Counter(dict(sorted(out.items())))


def gegenbauer_sums(code: DerivedCode, k_max: int, threads: int = 1) -> List[Fraction]:
    """``sum_{x,y} G_k(<x,y>)`` over ordered pairs for k = 1..k_max."""
    hist = code.histogram(threads)
    return [sum((c * gegenbauer(code.dim, k)(s) for s, c in hist.items()), Fraction(0))
            for k in range(1, k_max + 1)]


def design_strength(code: DerivedCode, k_max: int, threads: int = 1) -> int:
    """Largest ``t <= k_max`` with vanishing Gegenbauer pair sums for degrees 1..t."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    t = 0
    for s in gegenbauer_sums(code, k_max, threads):
        if s != 0:
            break
        t += 1
    return t


def sphere_moment(n: int, i: int, r_sq) -> Fraction:
    """Average of ``<z, u>**i`` over the unit sphere in dimension ``n`` with ``|u|^2 = r_sq``."""
    if n % 2:
        raise OddDimensionUnsupported(f"dimension {n} is odd")
    if i < 0:
        raise ValueError("degree must be >= 0")
    if i % 2:
        return Fraction(0)
    h, m = i // 2, n // 2
    coef = Fraction(factorial(i) * factorial(m - 1), factorial(h + m - 1) * factorial(h) * 2**i)
    return coef * Fraction(r_sq) ** h


def solve_distribution(N: int, n: int, r_sq, alphas: Sequence, t: int) -> Dict[Fraction, Fraction]:
    """Counts ``N_alpha`` forced by the design moment equations of degrees 0..len(alphas)-1."""
    alphas = [Fraction(a) for a in alphas]
    if len(alphas) > t + 1:
        raise ValueError(f"{len(alphas)} unknowns need design strength >= {len(alphas) - 1}")
    m = len(alphas)
    A = [[a**i for a in alphas] for i in range(m)]
    b = [N * sphere_moment(n, i, r_sq) for i in range(m)]
    sol = solve_linear_system(A, b)
    return dict(zip(alphas, sol))


@dataclass(frozen=True)
class IntersectionTable:
    alphabet: Tuple[Fraction, ...]
    values: Dict[Tuple[Fraction, Fraction, Fraction], int]

    def __getitem__(self, key) -> int:
        g, a, b = (Fraction(x) for x in key)
        return self.values[(g, a, b)]

    def invariant_failures(self) -> List[str]:
        bad = []
        A = self.alphabet
        for g in A:
            for a in A:
                for b in A:
                    if self.values[(g, a, b)] != self.values[(g, b, a)]:
                        bad.append(f"asymmetric P_{g}({a},{b})")
                if self.values[(g, a, Fraction(1))] != (1 if a == g else 0):
                    bad.append(f"P_{g}({a},1) is not a Kronecker delta")
                # sum over beta of P_g(a, b) is the valency of a
                if sum(self.values[(g, a, b)] for b in A) != self.values[(Fraction(1), a, a)]:
                    bad.append(f"row sum of P_{g}({a},.) differs from the valency")
        return bad


def _class_matrix(code: DerivedCode):
    V = code.members.astype(np.int32)
    G = V @ V.T
    raws = np.unique(G)
    alphabet = [code.projected(r) for r in raws.tolist()]
    cls = np.searchsorted(raws, G)
    return alphabet, cls


def intersection_numbers(code: DerivedCode) -> IntersectionTable:
    """Intersection numbers with a full check that they are constant on each class.

    For each class pair ``(alpha, beta)`` the matrix ``A_alpha @ A_beta`` counts,
    for every ordered pair ``(i, j)``, the points ``k`` at ``alpha`` from ``i``
    and ``beta`` from ``j``; this is every triple, not a sample.
    """
    alphabet, cls = _class_matrix(code)
    K = len(alphabet)
    if K > 8:
        raise ValueError(f"spectrum too large for an association scheme check ({K} values)")
    onehot = [(cls == c).astype(np.float32) for c in range(K)]
    masks = [cls == c for c in range(K)]
    values = {}
    for a in range(K):
        for b in range(K):
            C = (onehot[a] @ onehot[b]).astype(np.int64)
            for g in range(K):
                vals = C[masks[g]]
                lo, hi = int(vals.min()), int(vals.max())
                if lo != hi:
                    pairs = np.argwhere(masks[g])
                    flat = C[masks[g]]
                    i1, i2 = int(np.argmin(flat)), int(np.argmax(flat))
                    raise NotAScheme(
                        f"P_{alphabet[g]}({alphabet[a]},{alphabet[b]}) takes values {lo} and {hi}",
                        witness=(tuple(pairs[i1].tolist()), tuple(pairs[i2].tolist())),
                    )
                values[(alphabet[g], alphabet[a], alphabet[b])] = lo
    return IntersectionTable(tuple(alphabet), values)


def member_histograms(code: DerivedCode) -> List[Tuple[Tuple[Fraction, int], ...]]:
    V = code.members.astype(np.int32)
    G = V @ V.T
    out = []
    for i in range(len(V)):
        vals, counts = np.unique(np.delete(G[i], i), return_counts=True)
        out.append(tuple((code.projected(v), int(c)) for v, c in zip(vals.tolist(), counts.tolist())))
    return out


def orbit_split_by_histogram(code: DerivedCode) -> List[List[int]]:
    """Member indices grouped by their inner-product histogram, largest class last."""
    groups: Dict[tuple, List[int]] = {}
    for i, h in enumerate(member_histograms(code)):
        groups.setdefault(h, []).append(i)
    return sorted(groups.values(), key=lambda g: (len(g), g[0]))

"""Uniqueness pipelines for the (22,891,1/4) and (23,4600,1/3) codes.

Both pipelines run on the concrete Leech-derived model. ``L`` is the lattice
spanned by the code's ambient member vectors and its anchors (``V0``, and
``V1`` for 891). The pipeline builds a sqrt(2)*D24 frame inside ``L``
from the members, moves to frame coordinates, sorts every member into
its coordinate case, and checks that each counting bound in the
argument is met with equality.

Frame vectors ``F_i = sqrt(2) E_i`` may have half-integer raw coordinates,
so they are stored doubled: ``F2[i]`` denotes ``F2[i] / sqrt(32)``. The
frame coordinate of a raw row ``x`` is ``w_i = 2 <x, F_i> = x . F2[i] / 8``.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .bounds.binary import binary_code_lp, constant_weight_bound
from .bounds.polyparse import parse_polynomial
from .bounds.spherical import check_spherical_certificate, find_spherical_certificate
from .codes import (DerivedCode, design_strength, gegenbauer_sums, intersection_numbers,
                    kissing_chain, solve_distribution, spectrum)
from .combinatorics import verify_steiner
from .exact.gf2 import f2_rank, f2_span_count_with_prefix, f2_span_words_with_prefix, weight, word_from_support
from .exact.hnf import hermite_normal_form
from .leech import DENOM_SQ, DIM, MIN_NORM_RAW, BinaryCode, leech_minimal_vectors
from .report import CertificateReport

log = logging.getLogger(__name__)

ALLOWED_IPS = frozenset({-4, -2, -1, 0, 1, 2, 4})


class NotIntegral(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotEven(NotIntegral):
    pass


class ExtensionStuck(RuntimeError):
    def __init__(self, msg, step=None):
        super().__init__(msg)
        self.step = step


class FrameError(RuntimeError):
    pass


class NonIntegerCoordinate(ValueError):
    pass


class NormalizationImpossible(ValueError):
    pass


class UnclassifiableVector(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


# -- pipeline parameters ----------------------------------------------------


@dataclass(frozen=True)
class PipelineParams:
    size: int
    depth: int  # kissing derivations below the Leech code
    prefix: int  # frame coordinates fixed by the anchors
    dim: int
    t: Fraction
    spectrum: Tuple[Fraction, ...]
    strength: int
    case_names: Tuple[str, ...]
    case_sizes: Tuple[int, ...]
    steiner: Tuple[int, int, int]
    steiner_rank: int
    steiner_blocks: int
    cw_params: Tuple[int, int, int]
    signs_per_block: int
    parity: int  # required parity of the number of -2 entries in Case III
    span_count: int
    binary_distances: Tuple[int, ...]


PIPELINES: Dict[int, PipelineParams] = {
    891: PipelineParams(
        size=891, depth=2, prefix=3, dim=22, t=Fraction(1, 4),
        spectrum=(Fraction(-1, 2), Fraction(-1, 8), Fraction(1, 4)), strength=5,
        case_names=("I", "II", "III", "IV"), case_sizes=(42, 1, 336, 512),
        steiner=(2, 5, 21), steiner_rank=10, steiner_blocks=21, cw_params=(21, 8, 5),
        signs_per_block=16, parity=0, span_count=512, binary_distances=tuple(range(8, 17)),
    ),
    4600: PipelineParams(
        size=4600, depth=1, prefix=2, dim=23, t=Fraction(1, 3),
        spectrum=(Fraction(-1), Fraction(-1, 3), Fraction(0), Fraction(1, 3)), strength=7,
        case_names=("I", "II", "III", "IV", "V"), case_sizes=(44, 44, 2464, 1024, 1024),
        steiner=(3, 6, 22), steiner_rank=11, steiner_blocks=77, cw_params=(22, 8, 6),
        signs_per_block=32, parity=1, span_count=1024, binary_distances=tuple(range(8, 23)),
    ),
}

# intersection numbers P_gamma(alpha, beta) of the 891-point scheme
TABLE_891: Dict[Tuple[Fraction, Fraction, Fraction], int] = {
    (Fraction(g), Fraction(a), Fraction(b)): v
    for (g, a, b), v in {
        ("1", "1/4", "1/4"): 336, ("1", "-1/8", "-1/8"): 512, ("1", "-1/2", "-1/2"): 42,
        ("1/4", "1/4", "1/4"): 170, ("1/4", "-1/8", "-1/8"): 320, ("1/4", "-1/2", "-1/2"): 5,
        ("1/4", "1/4", "-1/8"): 160, ("1/4", "1/4", "-1/2"): 5, ("1/4", "-1/8", "-1/2"): 32,
        ("-1/8", "1/4", "1/4"): 105, ("-1/8", "-1/8", "-1/8"): 280, ("-1/8", "-1/2", "-1/2"): 0,
        ("-1/8", "1/4", "-1/8"): 210, ("-1/8", "1/4", "-1/2"): 21, ("-1/8", "-1/8", "-1/2"): 21,
        ("-1/2", "1/4", "1/4"): 40, ("-1/2", "-1/8", "-1/8"): 256, ("-1/2", "-1/2", "-1/2"): 1,
        ("-1/2", "1/4", "-1/8"): 256, ("-1/2", "1/4", "-1/2"): 40, ("-1/2", "-1/8", "-1/2"): 0,
    }.items()
}

CERTIFICATE_891 = "(x+1/2)^2*(x+1/8)^2*(x-1/4)"


def pipeline_params(pipeline: int) -> PipelineParams:
    try:
        return PIPELINES[int(pipeline)]
    except (KeyError, ValueError):
        raise ValueError(f"pipeline must be 891 or 4600, got {pipeline!r}") from None


def pipeline_code(pipeline: int, threads: int = 1) -> DerivedCode:
    return kissing_chain(pipeline_params(pipeline).depth, threads=threads)[-1]


# -- the lattice L -----------------------------------------------------------


@dataclass
class AssembledLattice:
    generators: np.ndarray  # members then anchors, raw rows
    n_members: int
    gram_values: Tuple[int, ...]  # distinct inner products among generators
    translation: Dict[Fraction, int]  # projected member inner product -> ambient inner product

    @property
    def anchors(self) -> np.ndarray:
        return self.generators[self.n_members:]


def assemble_L(code: DerivedCode) -> AssembledLattice:
    """Generators of ``L`` with an integrality and evenness check.

    Raises ``NotIntegral`` / ``NotEven`` with an index pair as witness.
    """
    gens = np.concatenate([code.members, code.anchors]).astype(np.int32)
    G = gens @ gens.T
    bad = np.argwhere(G % DENOM_SQ != 0)
    if len(bad):
        i, j = bad[0].tolist()
        raise NotIntegral(f"generators {i}, {j} have inner product {Fraction(int(G[i, j]), DENOM_SQ)}", (i, j))
    norms = np.diag(G) // DENOM_SQ
    odd = np.flatnonzero(norms % 2)
    if len(odd):
        i = int(odd[0])
        raise NotEven(f"generator {i} has norm {int(norms[i])}", (i, i))
    n = len(code.members)
    member_raw = np.unique(G[:n, :n]).tolist()
    translation = {code.projected(r): r // DENOM_SQ for r in member_raw}
    values = tuple(sorted(set((np.unique(G) // DENOM_SQ).tolist())))
    return AssembledLattice(gens, n, values, dict(sorted(translation.items())))


def minimal_ip_closure_check(lat: AssembledLattice) -> bool:
    """All inner products among the generators and their negatives lie in {0, +-1, +-2, +-4}."""
    vals = set(lat.gram_values) | {-v for v in lat.gram_values}
    return vals <= ALLOWED_IPS


# -- sqrt(2) D24 frame -------------------------------------------------------


@dataclass
class D24Frame:
    G: np.ndarray  # (24, 24) raw rows of the Dynkin generators
    F2: np.ndarray  # (24, 24) doubled frame rows
    pool_sizes: List[int] = field(default_factory=list)
    pool_inside: List[int] = field(default_factory=list)
    choices: List[str] = field(default_factory=list)

    def gram_G(self) -> np.ndarray:
        G = self.G.astype(np.int64)
        return G @ G.T // DENOM_SQ

    def gram_F(self) -> List[List[Fraction]]:
        F = self.F2.astype(np.int64)
        M = F @ F.T
        return [[Fraction(int(v), 32) for v in row] for row in M]


def dynkin_gram(n: int = DIM) -> np.ndarray:
    """Expected Gram matrix of ``G_1..G_n`` for sqrt(2) D_n."""
    M = 4 * np.eye(n, dtype=np.int64)
    if n >= 3:
        M[0, 2] = M[2, 0] = -2
    for i in range(1, n - 1):
        M[i, i + 1] = M[i + 1, i] = -2
    return M


def frame_coordinates(rows: np.ndarray, F2: np.ndarray) -> np.ndarray:
    """``w_i = rows . F2[i] / 8``; raises ``NonIntegerCoordinate`` unless exact."""
    X = np.asarray(rows, dtype=np.int64) @ np.asarray(F2, dtype=np.int64).T
    if np.any(X % 8):
        bad = int(np.flatnonzero(np.any(X % 8, axis=1))[0]) if X.ndim == 2 else 0
        raise NonIntegerCoordinate(f"row {bad} has a non-integer frame coordinate")
    return X // 8


def coordinates_in_frame(W, frame: D24Frame) -> np.ndarray:
    """Integer frame coordinates of one raw row, with the norm identity checked."""
    W = np.asarray(W, dtype=np.int64)
    w = frame_coordinates(W[None, :], frame.F2)[0]
    if int(w @ w) != int(W @ W):  # sum w_i^2 = 8 |W|^2 = raw squared length
        raise NonIntegerCoordinate("frame coordinates do not reproduce the norm")
    return w


def in_sqrt2_Dn(W: np.ndarray, F2: np.ndarray) -> bool:
    """``W = sum a_i F_i`` with integer ``a_i`` of even sum, ``F`` the first ``n`` frame rows."""
    F2 = np.asarray(F2, dtype=np.int64)
    dots = F2 @ np.asarray(W, dtype=np.int64)  # = 32 a_i
    if np.any(dots % 32):
        return False
    a = dots // 32
    if np.any(2 * np.asarray(W, dtype=np.int64) - a @ F2):
        return False
    return int(a.sum()) % 2 == 0


def find_d24_frame(members: np.ndarray, anchors: np.ndarray, seed: int = 0) -> D24Frame:
    """Inductive sqrt(2) D_n construction inside ``L``, from n = 3 up to 24.

    ``seed`` fixes the order in which members are tried, so different seeds
    give different (equally valid) frames. Extension candidates are members
    at inner product 2 with ``G_1`` and ``G_2``, the anchors, and
    ``V0 - U`` for members ``U`` orthogonal to both; anchors are preferred.
    """
    M = np.asarray(members, dtype=np.int64)
    A = np.asarray(anchors, dtype=np.int64)
    if len(A) == 0:
        raise FrameError("need at least one anchor")
    order = np.random.default_rng(seed).permutation(len(M))
    Mo = M[order]
    g1 = Mo[0]
    d1 = Mo @ g1
    g2 = Mo[np.flatnonzero(d1 == 0)[0]]
    d2 = Mo @ g2
    both2 = np.flatnonzero((d1 == 16) & (d2 == 16))
    if not len(both2):
        raise FrameError("no member at inner product 2 with the first two generators")
    g3 = -Mo[both2[0]]
    G = [g1, g2, g3]
    F2 = [g2 - g1, -(g1 + g2)]
    F2.append(F2[1] - 2 * g3)

    pool = [A[j] for j in range(len(A))]
    names = ["V0", "V1"][:len(A)]
    pool += [Mo[i] for i in both2]
    names += ["member"] * len(both2)
    for i in np.flatnonzero((d1 == 0) & (d2 == 0)):
        pool.append(A[0] - Mo[i])
        names.append("V0-U")
    P = np.array(pool, dtype=np.int64)
    _, first = np.unique(P, axis=0, return_index=True)
    keep = np.sort(first)
    P = P[keep]
    names = [names[i] for i in keep]
    if np.any(np.einsum("ij,ij->i", P, P) != MIN_NORM_RAW):
        raise FrameError("extension pool contains a vector of norm other than 4")

    frame = D24Frame(np.zeros((DIM, DIM), np.int64), np.zeros((DIM, DIM), np.int64))
    for n in range(3, DIM):
        Fn = np.array(F2)
        inside = [in_sqrt2_Dn(w, Fn) for w in P]
        frame.pool_sizes.append(len(P))
        frame.pool_inside.append(sum(inside))
        pick = next((i for i, ins in enumerate(inside) if not ins), None)
        if pick is None:
            raise ExtensionStuck(f"every pool vector lies in sqrt(2) D_{n}", step=n)
        W = P[pick]
        frame.choices.append(names[pick])
        new_f = 2 * W + F2[1]
        if any(int(new_f @ f) != 0 for f in F2) or int(new_f @ new_f) != 64:
            raise FrameError(f"step {n}: candidate does not extend the frame orthogonally")
        g = F2[-1] - new_f
        if np.any(g % 2):
            raise FrameError(f"step {n}: new generator is not a lattice row")
        G.append(g // 2)
        F2.append(new_f)
    frame.G = np.array(G, dtype=np.int64)
    frame.F2 = np.array(F2, dtype=np.int64)
    if not np.array_equal(frame.gram_G(), dynkin_gram()):
        raise FrameError("generators do not have the D24 Gram matrix")
    if not np.array_equal(frame.F2 @ frame.F2.T, 64 * np.eye(DIM, dtype=np.int64)):
        raise FrameError("frame vectors are not orthogonal of norm 2")
    return frame


def normalize_frame(frame: D24Frame, V0, V1=None, members: Optional[np.ndarray] = None, prefix: int = 3):
    """Signed permutation of the frame taking ``V0`` to (4,4,0,...) and ``V1`` to (4,0,4,0,...).

    When ``members`` is given, a Case IV representative ``W0`` (the first
    member with leading coordinates (3,1,1) or (3,1)) is then brought to
    the all ``-1`` tail by sign changes after position ``prefix``.
    Returns ``(frame, W0)``.
    """
    v0 = coordinates_in_frame(V0, frame)
    nz = np.flatnonzero(v0)
    if len(nz) != 2 or set(np.abs(v0[nz]).tolist()) != {4}:
        raise NormalizationImpossible(f"V0 has frame coordinates {v0.tolist()}")
    if V1 is None:
        head = [int(nz[0]), int(nz[1])]
        signs_head = [int(np.sign(v0[i])) for i in head]
    else:
        v1 = coordinates_in_frame(V1, frame)
        nz1 = np.flatnonzero(v1)
        if len(nz1) != 2 or set(np.abs(v1[nz1]).tolist()) != {4}:
            raise NormalizationImpossible(f"V1 has frame coordinates {v1.tolist()}")
        shared = [i for i in nz if i in nz1 and v0[i] == v1[i]]
        if len(shared) != 1:
            raise NormalizationImpossible("V0 and V1 do not share exactly one entry")
        p = int(shared[0])
        q = int(next(i for i in nz if i != p))
        r = int(next(i for i in nz1 if i != p))
        head = [p, q, r]
        signs_head = [int(np.sign(v0[p])), int(np.sign(v0[q])), int(np.sign(v1[r]))]
    order = head + [i for i in range(DIM) if i not in head]
    signs = np.array(signs_head + [1] * (DIM - len(head)), dtype=np.int64)
    F2 = signs[:, None] * frame.F2[order]
    out = D24Frame(frame.G.copy(), F2, list(frame.pool_sizes), list(frame.pool_inside), list(frame.choices))
    if members is None:
        return out, None
    w = frame_coordinates(members, F2)
    lead = [3, 1, 1][:prefix] if prefix == 3 else [3, 1]
    cand = np.flatnonzero(np.all(w[:, :prefix] == lead, axis=1))
    if not len(cand):
        raise NormalizationImpossible("no Case IV member to normalize against")
    W0 = np.asarray(members[cand[0]], dtype=np.int64)
    w0 = w[cand[0]]
    flip = np.ones(DIM, dtype=np.int64)
    flip[prefix:][w0[prefix:] == 1] = -1
    out.F2 = flip[:, None] * F2
    return out, W0


# -- case classification -------------------------------------------------------


@dataclass
class Classification:
    coords: np.ndarray  # (N, 24) frame coordinates
    labels: List[str]
    cases: Dict[str, List[int]]
    D: BinaryCode  # supports of Case III beyond the prefix
    E: BinaryCode  # +1 patterns of Case IV beyond the prefix
    side_conditions_ok: bool

    def sizes(self, names: Sequence[str]) -> Tuple[int, ...]:
        return tuple(len(self.cases.get(n, [])) for n in names)


def _label(w: np.ndarray, pipeline: int) -> Optional[str]:
    p = pipeline_params(pipeline).prefix
    head, tail = tuple(w[:p].tolist()), w[p:]
    nz = np.count_nonzero(tail)
    abs_tail = set(np.abs(tail[tail != 0]).tolist())
    if pipeline == 891:
        if head == (4, 0, 0) and nz == 1 and abs_tail == {4}:
            return "I"
        if head == (0, 4, 4) and nz == 0:
            return "II"
        if head == (2, 2, 2) and nz == 5 and abs_tail == {2}:
            return "III"
        if head == (3, 1, 1) and nz == len(tail) and abs_tail == {1}:
            return "IV"
        return None
    if head == (4, 0) and nz == 1 and abs_tail == {4}:
        return "I"
    if head == (0, 4) and nz == 1 and abs_tail == {4}:
        return "II"
    if head == (2, 2) and nz == 6 and abs_tail == {2}:
        return "III"
    if head == (3, 1) and nz == len(tail) and abs_tail == {1}:
        return "IV"
    if head == (1, 3) and nz == len(tail) and abs_tail == {1}:
        return "V"
    return None


def side_conditions(w: np.ndarray, pipeline: int) -> bool:
    """``(w_i +- w_j)/2`` allowed for i != j, and the anchor inner products equal 2."""
    w = np.asarray(w, dtype=np.int64)
    off = ~np.eye(DIM, dtype=bool)
    for s in (1, -1):
        S = w[:, :, None] + s * w[:, None, :]
        vals = S[:, off]
        if np.any(vals % 2) or not set(np.unique(vals // 2).tolist()) <= ALLOWED_IPS:
            return False
    ok = np.all(w[:, 0] + w[:, 1] == 4)
    if pipeline == 891:
        ok = ok and np.all(w[:, 0] + w[:, 2] == 4)
    return bool(ok)


def classify_cases(members: np.ndarray, frame: D24Frame, pipeline: int) -> Classification:
    params = pipeline_params(pipeline)
    p = params.prefix
    w = frame_coordinates(members, frame.F2)
    if np.any(np.einsum("ij,ij->i", w, w) != MIN_NORM_RAW):
        raise NonIntegerCoordinate("a member's frame coordinates do not have squared length 32")
    labels = []
    for i, row in enumerate(w):
        lab = _label(row, pipeline)
        if lab is None:
            raise UnclassifiableVector(f"member {i} has coordinates {row.tolist()}", row.tolist())
        labels.append(lab)
    cases: Dict[str, List[int]] = {n: [] for n in params.case_names}
    for i, lab in enumerate(labels):
        cases[lab].append(i)
    D = BinaryCode.from_words(DIM - p, {word_from_support(np.flatnonzero(w[i, p:]).tolist()) for i in cases["III"]})
    E = BinaryCode.from_words(DIM - p, {word_from_support(np.flatnonzero(w[i, p:] == 1).tolist()) for i in cases["IV"]})
    return Classification(w, labels, cases, D, E, side_conditions(w, pipeline))


def parity_check(cls: Classification, W0_coords: np.ndarray, pipeline: int):
    """Minus-sign parity of every Case III vector, with the ``<W0, V>`` identity.

    Returns ``(ok, per_block_counts, witness)``; ``witness`` is the first
    offending coordinate row or ``None``.
    """
    params = pipeline_params(pipeline)
    p = params.prefix
    w0 = np.asarray(W0_coords, dtype=np.int64)
    per_block = Counter()
    for i in cls.cases["III"]:
        v = cls.coords[i]
        tail = v[p:]
        r = int(np.sum(tail == -2))
        ip = Fraction(int(w0 @ v), 8)
        k = int(np.count_nonzero(tail))
        predicted = Fraction(4 * r, 8) if pipeline == 891 else Fraction(-4 + 4 * r, 8)
        if ip != predicted or ip.denominator != 1 or r % 2 != params.parity or k != params.steiner[1]:
            return False, per_block, v.tolist()
        per_block[word_from_support(np.flatnonzero(tail).tolist())] += 1
    return True, per_block, None


@dataclass
class GenerationResult:
    span_count: int
    span_words: List[int]
    case_iv_words: List[int]
    weights_ok: bool
    all_in_span: bool
    case_v_ok: Optional[bool]

    @property
    def matches(self) -> bool:
        return sorted(self.span_words) == sorted(self.case_iv_words)


def generation_check(cls: Classification, pipeline: int) -> GenerationResult:
    """GF(2) span of the words (1..1, d) for d in the Case III code, restricted to prefix 0."""
    params = pipeline_params(pipeline)
    p = params.prefix
    ones = (1 << p) - 1
    rows = [ones | (d << p) for d in cls.D.words]
    zero = [0] * p
    count = f2_span_count_with_prefix(rows, zero, DIM)
    words = [x >> p for x in f2_span_words_with_prefix(rows, zero, DIM)]
    iv = sorted(cls.E.words)
    span = set(words)
    case_v = None
    if pipeline == 4600:
        V0 = np.zeros(DIM, dtype=np.int64)
        V0[:2] = 4
        want = {tuple((V0 - cls.coords[i]).tolist()) for i in cls.cases["IV"]}
        have = {tuple(cls.coords[i].tolist()) for i in cls.cases["V"]}
        case_v = want == have
    return GenerationResult(
        span_count=count,
        span_words=sorted(words),
        case_iv_words=iv,
        weights_ok=all(weight(c) % 4 == 0 for c in iv),
        all_in_span=all(c in span for c in iv),
        case_v_ok=case_v,
    )


@lru_cache(maxsize=1)
def leech_hnf():
    return hermite_normal_form(leech_minimal_vectors())


def index_in_leech(generators: np.ndarray, V0=None):
    """Index of the span of ``generators`` in the Leech lattice.

    With ``V0`` given, also returns the first Leech minimal vector whose
    inner product with ``V0`` is odd (or ``None``).
    """
    sub = hermite_normal_form(np.asarray(generators, dtype=np.int64))
    idx = sub.index_in(leech_hnf())
    witness = None
    if V0 is not None:
        dots = leech_minimal_vectors().astype(np.int32) @ np.asarray(V0, dtype=np.int32)
        odd = np.flatnonzero((dots // DENOM_SQ) % 2 == 1)
        if len(odd):
            witness = leech_minimal_vectors()[odd[0]].astype(np.int64)
    return idx, witness


# -- orchestration -------------------------------------------------------------


@dataclass
class UniquenessConfig:
    pipeline: int = 891
    seed: int = 0
    threads: int = 1
    extended: bool = False


def run_uniqueness(pipeline: int = 891, seed: int = 0, threads: int = 1,
                   members: Optional[np.ndarray] = None, extended: bool = False) -> CertificateReport:
    """Run every check of one pipeline and collect the results.

    Mathematical failures are recorded in the report, and later checks that
    do not depend on the failed step still run. ``members`` replaces the
    model's member rows (for testing the harness).
    """
    params = pipeline_params(pipeline)
    rep = CertificateReport(f"uniqueness certificate: ({params.dim},{params.size},{params.t}) code")
    R = rep.check

    with rep.timed("chain"):
        chain = kissing_chain(params.depth, threads=threads)
        code = chain[-1]
    R("chain sizes", "iterated kissing configurations of the Leech minimal vectors",
      [196560, 4600, 891][:params.depth + 1], [len(c) for c in chain])
    R("chain thresholds", "maximal inner product at each derivation",
      [Fraction(1, 2), Fraction(1, 3)][:params.depth], list(code.level_params))
    if members is not None:
        code = DerivedCode(np.asarray(members, dtype=np.int8), code.anchors, code.level_params)
    try:
        code.validate()
        R("member anchor conditions", "members meet each anchor at the level parameter", True, True)
    except ValueError as e:
        rep.fail("member anchor conditions", "members meet each anchor at the level parameter", True, e)

    with rep.timed("spectrum"):
        spec = spectrum(code, threads)
    R("code size", "number of code points", params.size, len(code))
    R("spectrum", "distinct inner products between code points", list(params.spectrum), sorted(spec))
    R("maximal inner product", "maximal inner product", params.t, max(spec) if spec else None)

    with rep.timed("design"):
        strength = design_strength(code, params.strength + 1, threads)
        sums = gegenbauer_sums(code, params.strength + 1, threads)
    R("design strength", "Gegenbauer pair sums vanish through the design degree",
      params.strength, strength)
    R("next Gegenbauer sum positive", "pair sum one degree above the strength is positive",
      True, sums[-1] > 0, detail=f"sum = {sums[-1]}")

    if pipeline == 891:
        N = solve_distribution(891, 22, Fraction(3, 4), [0, Fraction(3, 8), Fraction(-3, 8), Fraction(3, 4), Fraction(-3, 4)], 5)
        R("norm-2 exclusion distribution", "design moments force negative counts for a norm-2 vector",
          [657, 120, 120, -3, -3], list(N.values()))
        R("norm-2 exclusion is contradictory", "some count is negative", True, min(N.values()) < 0)
        val = solve_distribution(891, 22, 1, [1, Fraction(1, 4), Fraction(-1, 8), Fraction(-1, 2)], 5)
        hist = code.histogram(threads)
        R("valencies from moments", "valencies forced by the 5-design property",
          [Fraction(hist.get(a, 0), len(code)) for a in val], list(val.values()))
        with rep.timed("intersection numbers"):
            try:
                table = intersection_numbers(code)
                got = {k: table.values.get(k) for k in TABLE_891}
                R("intersection numbers", "association-scheme intersection numbers, constancy checked on every pair",
                  TABLE_891, got)
                R("intersection number invariants", "symmetry, Kronecker and valency identities",
                  [], table.invariant_failures())
            except Exception as e:  # noqa: BLE001 - a failed step is a report entry
                rep.fail("intersection numbers", "association-scheme intersection numbers", TABLE_891, e)
    else:
        rep.annotations.append(
            "the norm-2 exclusion moment computation needs the sphere moments of an odd "
            "dimension (23) and is not performed in this pipeline")

    with rep.timed("lp certificate"):
        try:
            if pipeline == 891:
                cert = check_spherical_certificate(parse_polynomial(CERTIFICATE_891), 22, Fraction(1, 4))
            else:
                cert = find_spherical_certificate(23, Fraction(1, 3), 7, [-1, Fraction(-1, 3), 0, Fraction(1, 3)])
            R("LP bound", "Delsarte linear programming bound", params.size, cert.bound)
            R("LP bound attained", "code size meets the LP bound", True, len(code) == cert.bound)
            R("equality inner products", "inner products are roots of the certificate polynomial",
              True, set(spec) <= set(cert.equality_inner_products))
            rep.records["certificate polynomial"] = str(cert.polynomial)
        except Exception as e:  # noqa: BLE001
            rep.fail("LP bound", "Delsarte linear programming bound", params.size, e)

    lat = None
    with rep.timed("assemble L"):
        try:
            lat = assemble_L(code)
            R("L even integral", "generators have integral inner products and even norms", True, True)
            rep.records["inner product translation"] = lat.translation
            R("minimal inner product closure", "inner products among generators lie in {0,+-1,+-2,+-4}",
              True, minimal_ip_closure_check(lat), detail=f"values {list(lat.gram_values)}")
        except NotIntegral as e:
            rep.fail("L even integral", "generators have integral inner products and even norms", True, e)

    frame = W0 = None
    with rep.timed("frame"):
        try:
            frame = find_d24_frame(code.members, code.anchors, seed=seed)
            R("D24 frame Gram", "Dynkin Gram matrix of D24", True, True)
            if pipeline == 891:
                R("extension pool size", "at least 43 candidates at every extension step",
                  True, min(frame.pool_sizes) >= 43, detail=f"min pool {min(frame.pool_sizes)}")
            rep.records["extension pool sizes"] = sorted(set(frame.pool_sizes))
            inside_ok = all(k <= 2 * n - 4 for k, n in zip(frame.pool_inside, range(3, DIM)))
            R("pool vectors already in sqrt(2)D_n", "at most 2n-4 such vectors lie in sqrt(2)D_n", True, inside_ok)
            F = frame.F2
            R("anchors in sqrt(2)D24", "V0 (and V1) lie in the frame lattice", True,
              all(in_sqrt2_Dn(a, F) for a in code.anchors.astype(np.int64)))
            frame, W0 = normalize_frame(frame, code.anchors[0], code.anchors[1] if len(code.anchors) > 1 else None,
                                        code.members, params.prefix)
            v0 = coordinates_in_frame(code.anchors[0], frame).tolist()
            R("V0 normalized", "V0 = (4,4,0,...,0)", [4, 4] + [0] * 22, v0)
            if len(code.anchors) > 1:
                R("V1 normalized", "V1 = (4,0,4,0,...,0)", [4, 0, 4] + [0] * 21,
                  coordinates_in_frame(code.anchors[1], frame).tolist())
            want_w0 = [3, 1, 1] + [-1] * 21 if pipeline == 891 else [3, 1] + [-1] * 22
            R("W0 normalized", "Case IV representative with all -1 tail", want_w0,
              coordinates_in_frame(W0, frame).tolist())
        except Exception as e:  # noqa: BLE001
            rep.fail("D24 frame", "sqrt(2)D24 sublattice containing the anchors", True, e)
            frame = None

    cls = None
    if frame is not None:
        with rep.timed("classification"):
            try:
                cls = classify_cases(code.members, frame, pipeline)
                R("case sizes", "case counts meet their upper bounds", list(params.case_sizes),
                  list(cls.sizes(params.case_names)))
                R("cases partition the code", "classification is total and exclusive", params.size,
                  sum(cls.sizes(params.case_names)))
                R("coordinate side conditions", "pairwise coordinate combinations and anchor products",
                  True, cls.side_conditions_ok)
            except Exception as e:  # noqa: BLE001
                rep.fail("case sizes", "case counts meet their upper bounds", list(params.case_sizes), e)
    else:
        rep.check("case sizes", "case counts meet their upper bounds", list(params.case_sizes),
                  "skipped: no frame", passed=False)

    if cls is not None:
        t, k, v = params.steiner
        ok, wit = verify_steiner(cls.D, t, k, v)
        R("Steiner system", f"Case III supports form an S({t},{k},{v})", True, ok,
          detail="" if ok else f"witness {wit}")
        R("Steiner block count", "C(v,t)/C(k,t) blocks", comb(v, t) // comb(k, t), len(cls.D))
        R("Steiner GF(2) rank", "rank of the block incidence matrix", params.steiner_rank, f2_rank(cls.D.words))
        R("constant-weight bound", "packing bound for the Case III code",
          params.steiner_blocks, constant_weight_bound(*params.cw_params))
        dprof = cls.D.distance_profile()
        R("Case III code minimum distance", "distance at least 8", 8, min(dprof) if dprof else None)
        eprof = cls.E.distance_profile()
        lo, hi = params.binary_distances[0], params.binary_distances[-1]
        R("Case IV code distances", f"pairwise distances within [{lo},{hi}]", True,
          bool(eprof) and min(eprof) >= lo and max(eprof) <= hi,
          detail=f"distances {sorted(eprof)}")
        lp = binary_code_lp(DIM - params.prefix, params.binary_distances)
        R("binary LP bound", "Krawtchouk LP bound for the Case IV code", params.span_count, lp.bound,
          detail=f"LP value {lp.value}")
        R("Case IV code size", "Case IV count meets the binary LP bound", lp.bound, len(cls.E))

        try:
            w0 = coordinates_in_frame(W0, frame)
            ok, per_block, wit = parity_check(cls, w0, pipeline)
            R("Case III sign parity", "minus-sign count is " + ("even" if params.parity == 0 else "odd"),
              True, ok, detail="" if ok else f"witness {wit}")
            R("sign patterns per block", "half of the sign patterns occur", [params.signs_per_block],
              sorted(set(per_block.values())))
        except Exception as e:  # noqa: BLE001
            rep.fail("Case III sign parity", "minus-sign parity", True, e)

        gen = generation_check(cls, pipeline)
        R("prefix-zero span count", "span words with zero prefix", params.span_count, gen.span_count)
        R("Case IV words in span", "every Case IV word lies in the span", True, gen.all_in_span)
        R("span equals Case IV", "the zero-prefix span words are exactly the Case IV words", True, gen.matches)
        R("Case IV weights divisible by 4", "even lattice forces weight 0 mod 4", True, gen.weights_ok)
        if pipeline == 4600:
            R("Case V = V0 - Case IV", "Case V obtained by subtracting Case IV from V0", True, gen.case_v_ok)

        with rep.timed("lattice generation"):
            try:
                iii = code.members[cls.cases["III"]].astype(np.int64)
                small = np.concatenate([frame.G, iii, W0[None, :]])
                h_small = hermite_normal_form(small)
                h_L = hermite_normal_form(lat.generators if lat is not None else code.members)
                R("L generated by frame, Case III and W0", "lattice generated by sqrt(2)D24, Case III and W0",
                  True, h_small.basis == h_L.basis)
            except Exception as e:  # noqa: BLE001
                rep.fail("L generated by frame, Case III and W0", "lattice generation", True, e)

    if lat is not None:
        with rep.timed("index"):
            idx, wit = index_in_leech(lat.generators, code.anchors[0] if pipeline == 4600 else None)
        if pipeline == 4600:
            R("index of L in Leech", "L is a sublattice of index 2", 2, idx)
            R("odd inner product witness", "a Leech minimal vector with odd inner product with V0",
              True, wit is not None,
              detail="" if wit is None else f"witness {wit.tolist()} with inner product "
                                            f"{Fraction(int(wit @ code.anchors[0].astype(np.int64)), DENOM_SQ)}")
            rep.annotations.append(
                "Cases I and II contain 44 vectors each because the second +-4 entry takes both signs; "
                "with one sign only (22 each) the case counts would total 4556, not 4600")
        else:
            rep.records["index of L in Leech"] = idx
            rep.annotations.append("the index of L in the Leech lattice is recorded, not checked against an expected value")

    if extended:
        with rep.timed("leech pairwise histogram"):
            from .leech import leech_histogram
            direct = leech_histogram(method="pairwise", threads=threads)
            by_orbits = leech_histogram(method="orbits")
        R("Leech histogram cross-check", "direct pairwise scan agrees with the orbit method", by_orbits, direct)
    return rep

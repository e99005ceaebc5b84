"""Golay code and Leech minimal vectors, checked against the standard membership test."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from leechcert.exact import f2_rank
from leechcert.leech import (ScaledVector, DimensionMismatch, build_golay, golay_generators, golay_permutations,
                             histogram_by_orbits, histogram_pairwise, inner, leech_automorphisms, leech_histogram,
                             leech_minimal_vectors, neighbors, orbit_decomposition, shape_classes)


def in_leech(x, golay_words):
    """Membership for integer coordinates at scale 1/sqrt 8."""
    m = x[0] % 2
    if any(c % 2 != m for c in x):
        return False
    if sum(x) % 8 != 4 * m:
        return False
    key = 2 if m == 0 else 1
    word = sum(1 << i for i, c in enumerate(x) if c % 4 == key)
    return word in golay_words


def test_golay_is_doubly_even_self_dual():
    gens = golay_generators()
    assert f2_rank(gens) == 12
    for a in gens:
        assert bin(a).count("1") % 4 == 0
        for b in gens:
            assert bin(a & b).count("1") % 2 == 0
    code = build_golay()
    assert code.weight_distribution() == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


def test_golay_permutations_preserve_code():
    code = build_golay()
    perms = golay_permutations()
    assert len(perms) == 3
    for p in perms:
        assert sorted(p) == list(range(24))
        for w in list(code)[:200]:
            img = sum(1 << p[i] for i in range(24) if (w >> i) & 1)
            assert img in code


def test_minimal_vectors_are_leech_minimal_vectors():
    V = leech_minimal_vectors()
    assert V.shape == (196560, 24) and V.dtype == np.int8
    assert len(np.unique(V, axis=0)) == 196560
    assert np.all(np.einsum("ij,ij->i", V.astype(np.int32), V.astype(np.int32)) == 32)
    words = build_golay().words
    rng = np.random.default_rng(1)
    for i in rng.choice(len(V), 3000, replace=False):
        assert in_leech(V[i].tolist(), words)
    assert shape_classes(V) == {"(4^2,0^22)": 1104, "(2^8,0^16)": 97152, "(3,1^23)": 98304}


def test_negation_closed_and_read_only():
    V = leech_minimal_vectors()
    assert not V.flags.writeable
    rows = {r.tobytes() for r in V}
    assert all((-V[i]).tobytes() in rows for i in range(0, len(V), 997))


def test_per_vector_histogram():
    V = leech_minimal_vectors().astype(np.int32)
    want = {32: 1, 16: 4600, 8: 47104, 0: 93150, -8: 47104, -16: 4600, -32: 1}
    # the counts satisfy the moment equations of a 5-design in dimension 24
    total = sum(want.values())
    assert sum(c * Fraction(k, 32) ** 2 for k, c in want.items()) == Fraction(total, 24)
    assert sum(c * Fraction(k, 32) ** 4 for k, c in want.items()) == Fraction(3 * total, 24 * 26)
    for i in (0, 5000, 150000):
        vals, counts = np.unique(V @ V[i], return_counts=True)
        assert dict(zip(vals.tolist(), counts.tolist())) == want


def test_orbit_histogram():
    hist = leech_histogram()
    assert set(hist) == {Fraction(k) for k in (-4, -2, -1, 0, 1, 2, 4)}
    assert hist[Fraction(4)] == 196560
    assert hist[Fraction(2)] == 196560 * 4600
    assert sum(hist.values()) == 196560**2


def test_orbit_method_on_small_set():
    # signed permutations of (1,1,0,...,0): checks orbit histogram against a full scan
    rows = []
    for i in range(24):
        for j in range(i + 1, 24):
            for si in (1, -1):
                for sj in (1, -1):
                    r = [0] * 24
                    r[i], r[j] = si, sj
                    rows.append(r)
    V = np.array(rows, dtype=np.int8)
    orbits = orbit_decomposition(V, leech_automorphisms())
    assert histogram_by_orbits(V, orbits) == histogram_pairwise(V, block=97)
    assert sum(orbits.sizes) == len(V)


def test_orbit_decomposition_rejects_non_invariant_sets():
    V = np.zeros((1, 24), dtype=np.int8)
    V[0, 0] = 1
    with pytest.raises(ValueError):
        orbit_decomposition(V, leech_automorphisms())


def test_pairwise_threads_agree():
    V = leech_minimal_vectors()[::40]
    assert histogram_pairwise(V, block=512, threads=3) == histogram_pairwise(V, block=1000)


@pytest.mark.slow
def test_pairwise_matches_orbits_full():
    assert leech_histogram("pairwise", threads=4) == leech_histogram("orbits")


def test_inner_products_and_neighbors():
    V = leech_minimal_vectors()
    assert inner(V[0], V[0]) == 4
    assert len(neighbors(V, V[0], 2)) == 4600
    assert len(neighbors(V, V[0], Fraction(1, 16))) == 0
    assert inner(ScaledVector.of([1, 1]), ScaledVector.of([1, -1], 2)) == 0
    with pytest.raises(DimensionMismatch):
        inner(ScaledVector.of([1]), ScaledVector.of([1, 2]))
    with pytest.raises(ValueError):
        inner(ScaledVector.of([1], 2), ScaledVector.of([1], 3))


@given(st.lists(st.integers(-5, 5), min_size=24, max_size=24), st.lists(st.integers(-5, 5), min_size=24,
                                                                         max_size=24))
def test_inner_is_bilinear_and_exact(a, b):
    assert inner(a, b) == Fraction(sum(x * y for x, y in zip(a, b)), 8)
    assert ScaledVector.of(a).norm == inner(a, a)
    assert inner(a, b) == inner(b, a)
    assert (-ScaledVector.of(a)).coords == tuple(-x for x in a)

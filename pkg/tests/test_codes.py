"""Derived kissing codes: projection arithmetic, spectra, designs and schemes."""

from __future__ import annotations

from fractions import Fraction
from math import comb, prod

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leechcert.codes import (DerivedCode, EmptyNeighborhood, OddDimensionUnsupported, derive_kissing,
                             design_strength, gegenbauer_sums, intersection_numbers, orbit_split_by_histogram,
                             solve_distribution, spectrum, sphere_moment)


def even_moment(n, i):
    return prod((Fraction(2 * j + 1, n + 2 * j) for j in range(i // 2)), start=Fraction(1))


def explicit_projection(code, x, y):
    """Projected inner product by rational Gram-Schmidt against the anchors."""
    basis = []
    for a in code.anchors:
        v = [Fraction(int(c)) for c in a]
        for b in basis:
            c = sum(p * q for p, q in zip(v, b)) / sum(q * q for q in b)
            v = [p - c * q for p, q in zip(v, b)]
        basis.append(v)

    def proj(z):
        z = [Fraction(int(c)) for c in z]
        for b in basis:
            c = sum(p * q for p, q in zip(z, b)) / sum(q * q for q in b)
            z = [p - c * q for p, q in zip(z, b)]
        return z

    px, py = proj(x), proj(y)
    return sum(p * q for p, q in zip(px, py)) / sum(p * p for p in px)


def test_chain_sizes_and_dimensions(chain):
    assert [len(c) for c in chain] == [196560, 4600, 891, 336, 170]
    assert [c.dim for c in chain] == [24, 23, 22, 21, 20]
    for c in chain[1:]:
        c.validate()


def test_chain_max_inner_products(chain):
    assert [c.max_inner() for c in chain] == [Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), Fraction(1, 5),
                                             Fraction(1, 6)]


@pytest.mark.parametrize("level", [1, 2, 3, 4])
def test_projection_matches_gram_schmidt(chain, level):
    code = chain[level]
    rng = np.random.default_rng(level)
    M = code.members
    for _ in range(15):
        i, j = rng.integers(len(M), size=2)
        raw = int(M[i].astype(np.int32) @ M[j].astype(np.int32))
        assert code.projected(raw) == explicit_projection(code, M[i], M[j])


def test_raw_for_inverts_projection(code891):
    for raw in range(-32, 33):
        assert code891.raw_for(code891.projected(raw)) == raw
    assert code891.raw_for(Fraction(1, 1000)) is None


def test_891_spectrum(code891):
    spec = spectrum(code891)
    assert set(spec) == {Fraction(1, 4), Fraction(-1, 8), Fraction(-1, 2)}
    assert sum(spec.values()) == comb(891, 2)
    # counts obey the degree 2 and 4 moment equations of a 5-design in dimension 22
    N = 891
    for i in (2, 4):
        ordered = N + 2 * sum(c * s**i for s, c in spec.items())
        assert ordered == N * N * even_moment(22, i)


def test_design_strengths(code891):
    assert design_strength(code891, 8) == 5
    assert gegenbauer_sums(code891, 6)[5] != 0


@pytest.mark.parametrize("level", [1, 2, 3, 4])
def test_gegenbauer_sums_nonnegative(chain, level):
    assert all(s >= 0 for s in gegenbauer_sums(chain[level], 12))


def test_170_orbit_split(chain):
    assert sorted(len(g) for g in orbit_split_by_histogram(chain[4])) == [10, 160]


def test_891_is_a_scheme(code891):
    table = intersection_numbers(code891)
    assert table.invariant_failures() == []
    valencies = {a: table[(1, a, a)] for a in table.alphabet if a != 1}
    assert sum(valencies.values()) == 890
    # valencies agree with the pair counts of the spectrum
    assert {a: 2 * c for a, c in spectrum(code891).items()} == {a: 891 * k for a, k in valencies.items()}


@pytest.mark.parametrize("n", [2, 4, 8, 22, 24])
def test_sphere_moment_closed_form(n):
    for i in range(0, 12):
        want = even_moment(n, i) if i % 2 == 0 else 0
        assert sphere_moment(n, i, 1) == want
        assert sphere_moment(n, i, Fraction(3, 4)) == want * Fraction(3, 4) ** (i // 2)


def test_sphere_moment_rejects_odd_dimension():
    with pytest.raises(OddDimensionUnsupported):
        sphere_moment(23, 2, 1)
    with pytest.raises(ValueError):
        sphere_moment(22, -1, 1)


def test_solve_distribution_example():
    a = Fraction(3, 8)
    sol = solve_distribution(891, 22, Fraction(3, 4), [0, a, -a, 2 * a, -2 * a], 5)
    assert sol == {0: 657, a: 120, -a: 120, 2 * a: -3, -2 * a: -3}
    with pytest.raises(ValueError):
        solve_distribution(891, 22, Fraction(3, 4), [0, a, -a, 2 * a, -2 * a], 3)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.fractions(min_value=-1, max_value=1, max_denominator=8), min_size=1, max_size=4, unique=True),
       st.sampled_from([4, 6, 22]))
def test_solve_distribution_satisfies_moments(alphas, n):
    sol = solve_distribution(100, n, 1, alphas, len(alphas) - 1)
    for i in range(len(alphas)):
        assert sum(c * a**i for a, c in sol.items()) == 100 * sphere_moment(n, i, 1)


def test_derive_kissing_errors(code891):
    with pytest.raises(ValueError):
        derive_kissing(code891, np.zeros(24, dtype=np.int8))
    with pytest.raises(EmptyNeighborhood):
        derive_kissing(code891, code891.members[0], Fraction(1, 1000))
    bad = DerivedCode(code891.members[:3].copy(), code891.anchors, code891.level_params)
    bad.members[0] = code891.anchors[0]
    with pytest.raises(ValueError):
        bad.validate()
    with pytest.raises(ValueError):
        DerivedCode(code891.members, code891.anchors, ())

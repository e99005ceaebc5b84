from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leechcert.exact import (RationalPolynomial, isolate_roots, nonpositive_on_interval, positivity_witness,
                             rational_roots)

small = st.fractions(min_value=-2, max_value=2, max_denominator=8)


def test_isolation_of_irrational_roots():
    p = RationalPolynomial([-2, 0, 1])  # roots +-sqrt 2
    ivs = isolate_roots(p, -3, 3)
    assert len(ivs) == 2
    for (a, b), r in zip(ivs, [-2**0.5, 2**0.5]):
        assert a < r < b


def test_exact_root_reported_as_point():
    p = RationalPolynomial.from_roots([Fraction(1, 4), Fraction(1, 4), 3])
    [(a, b)] = isolate_roots(p, 0, 1)
    assert a == b == Fraction(1, 4) or (a < Fraction(1, 4) < b and p(a) and p(b))
    assert isolate_roots(p, Fraction(1, 4), 1) == [(Fraction(1, 4), Fraction(1, 4))]


def test_double_root_touching_zero_is_nonpositive():
    p = -RationalPolynomial.from_roots([Fraction(1, 3), Fraction(1, 3)])
    assert nonpositive_on_interval(p, -1, 1)
    assert positivity_witness(p + Fraction(1, 10**6), -1, 1) is not None


def test_positivity_witness_in_narrow_gap():
    eps = Fraction(1, 10**9)
    # positive only on (1/2 - eps, 1/2 + eps)
    p = -RationalPolynomial.from_roots([Fraction(1, 2) - eps, Fraction(1, 2) + eps])
    w = positivity_witness(p, -1, 1)
    assert w is not None and p(w) > 0


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        positivity_witness(RationalPolynomial([1]), 1, 0)


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=1, max_size=5), st.integers(1, 3))
def test_rational_roots_recovered(roots, lead):
    p = RationalPolynomial.from_roots(roots, lead=lead)
    assert rational_roots(p) == sorted(set(roots))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=7))
def test_isolation_matches_numpy(coeffs):
    p = RationalPolynomial(coeffs)
    if p.degree < 1:
        return
    found = isolate_roots(p, -10, 10)
    ref = np.roots(list(reversed([float(c) for c in p.coeffs])))
    real = sorted({round(r.real, 6) for r in ref if abs(r.imag) < 1e-7 and -10 <= r.real <= 10})
    assert len(found) == len(real)
    for (a, b), r in zip(found, real):
        assert float(a) - 1e-6 <= r <= float(b) + 1e-6


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=1, max_size=6))
def test_witness_is_sound(coeffs):
    p = RationalPolynomial(coeffs)
    w = positivity_witness(p, -1, 1)
    grid = [Fraction(i, 64) for i in range(-64, 65)]
    if w is None:
        assert all(p(x) <= 0 for x in grid)
    else:
        assert -1 <= w <= 1 and p(w) > 0

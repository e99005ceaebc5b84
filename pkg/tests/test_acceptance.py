"""Acceptance gate: one group of exact checks per numbered criterion.

The terminal summary prints a PASS/FAIL line per criterion (see conftest).
"""

from __future__ import annotations

import time
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leechcert import leech
from leechcert.bounds.binary import binary_code_lp, binary_code_lp_bound, constant_weight_bound
from leechcert.bounds.polyparse import parse_polynomial
from leechcert.bounds.simplex import OPTIMAL, LinearProgram, simplex_solve
from leechcert.bounds.spherical import check_spherical_certificate, find_spherical_certificate
from leechcert.codes import (DerivedCode, design_strength, gegenbauer_sums, intersection_numbers, kissing_chain,
                             leech_code, orbit_split_by_histogram, solve_distribution, spectrum)
from leechcert.exact import RationalPolynomial, gegenbauer, gegenbauer_combination, gegenbauer_expand
from leechcert.uniqueness import CERTIFICATE_891, TABLE_891, run_uniqueness

F = Fraction
acceptance = pytest.mark.acceptance


class Stopwatch:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


def fresh(code: DerivedCode) -> DerivedCode:
    """Copy without the cached pair histogram, so timings include the scan."""
    return DerivedCode(code.members, code.anchors, code.level_params)


# -- 1 ----------------------------------------------------------------------


@acceptance(1, "Leech construction: 196560 vectors, shapes, norms, inner products, < 10 s")
def test_leech_construction():
    leech._leech_minimal_cached.cache_clear()
    leech.build_golay.cache_clear()
    with Stopwatch() as sw:
        V = leech.leech_minimal_vectors()
        shapes = leech.shape_classes(V)
        norms = leech.norms_raw(V)
        hist = leech.leech_histogram()
    assert len(V) == 196560
    assert sorted(shapes.values()) == [1104, 97152, 98304]
    assert np.all(norms == leech.MIN_NORM_RAW)
    assert set(hist) <= {F(v) for v in (0, 1, -1, 2, -2, 4, -4)}
    assert sum(hist.values()) == 196560**2
    assert sw.seconds < 10, sw.seconds


# -- 2 ----------------------------------------------------------------------


@acceptance(2, "Kissing chain 4600 > 891 > 336 > 170, thresholds, spectrum, orbit split, < 1 min")
def test_kissing_chain():
    with Stopwatch() as sw:
        chain = kissing_chain(4)
        sizes = [len(c) for c in chain[1:]]
        tops = [c.max_inner() for c in chain[1:]]
        spec891 = set(spectrum(chain[2]))
        split = sorted(len(g) for g in orbit_split_by_histogram(chain[4]))
    assert sizes == [4600, 891, 336, 170]
    assert tops == [F(1, 3), F(1, 4), F(1, 5), F(1, 6)]
    assert spec891 == {F(1, 4), F(-1, 8), F(-1, 2)}
    assert split == [10, 160]
    assert sw.seconds < 60, sw.seconds


# -- 3 ----------------------------------------------------------------------


@acceptance(3, "Design strengths: 891-code 5, 4600-code 7, Leech code 11")
def test_design_strength_891(code891):
    code = fresh(code891)
    with Stopwatch() as sw:
        strength = design_strength(code, 8)
        sums = gegenbauer_sums(code, 6)
    assert strength == 5
    assert sums[5] != 0
    assert sw.seconds < 5, sw.seconds


@acceptance(3, "Design strengths: 891-code 5, 4600-code 7, Leech code 11")
def test_design_strength_4600(code4600):
    code = fresh(code4600)
    with Stopwatch() as sw:
        strength = design_strength(code, 10)
    assert strength == 7
    assert sw.seconds < 180, sw.seconds


@acceptance(3, "Design strengths: 891-code 5, 4600-code 7, Leech code 11")
def test_design_strength_leech_global_histogram():
    with Stopwatch() as sw:
        strength = design_strength(leech_code(method="orbits"), 13)
    assert strength == 11
    assert sw.seconds < 1800, sw.seconds


# -- 4 ----------------------------------------------------------------------


@acceptance(4, "Intersection numbers of the 891-code: 21 values with full constancy check, < 10 min")
def test_intersection_table(code891):
    with Stopwatch() as sw:
        table = intersection_numbers(code891)
    assert len(TABLE_891) == 21
    for key, value in TABLE_891.items():
        assert table[key] == value, key
    assert table.invariant_failures() == []
    assert sw.seconds < 600, sw.seconds


# -- 5 ----------------------------------------------------------------------


@acceptance(5, "Norm-2 exclusion: moment solution (657, 120, 120, -3, -3)")
def test_norm2_exclusion():
    a = F(3, 8)
    sol = solve_distribution(891, 22, F(3, 4), [0, a, -a, 2 * a, -2 * a], 5)
    assert [sol[k] for k in (0, a, -a, 2 * a, -2 * a)] == [657, 120, 120, -3, -3]
    assert all(v.denominator == 1 for v in sol.values())


# -- 6 ----------------------------------------------------------------------


@acceptance(6, "LP certificates: bound 891 in dim 22 and a found bound 4600 in dim 23, < 10 s")
def test_lp_certificates():
    with Stopwatch() as sw:
        cert = check_spherical_certificate(parse_polynomial(CERTIFICATE_891), 22, F(1, 4))
        found = find_spherical_certificate(23, F(1, 3), 7, [-1, F(-1, 3), 0, F(1, 3)])
    assert cert.valid and cert.bound == 891
    assert found.valid and found.bound == 4600
    assert found.polynomial.degree <= 7
    # the found polynomial re-verifies on its own
    assert check_spherical_certificate(found.polynomial, 23, F(1, 3)).bound == 4600
    assert sw.seconds < 10, sw.seconds


# -- 7 ----------------------------------------------------------------------


@acceptance(7, "Binary bounds: cw 21 and 77, LP 512 and 1024, < 30 s")
def test_binary_bounds():
    with Stopwatch() as sw:
        values = [constant_weight_bound(21, 8, 5), constant_weight_bound(22, 8, 6),
                  binary_code_lp_bound(21, range(8, 17)), binary_code_lp_bound(22, range(8, 23))]
    assert values == [21, 77, 512, 1024]
    assert sw.seconds < 30, sw.seconds


# -- 8 and 9 ----------------------------------------------------------------


@pytest.fixture(scope="module")
def report891():
    with Stopwatch() as sw:
        rep = run_uniqueness(891)
    return rep, sw.seconds


@pytest.fixture(scope="module")
def report4600():
    with Stopwatch() as sw:
        rep = run_uniqueness(4600)
    return rep, sw.seconds


@acceptance(8, "891 uniqueness pipeline passes with the expected frame, cases, design and spans, < 5 min")
def test_uniqueness_891(report891):
    rep, seconds = report891
    assert rep["L even integral"].passed
    assert rep["extension pool size"].passed
    assert min(rep.records["extension pool sizes"]) >= 43
    assert rep["case sizes"].actual == [42, 1, 336, 512]
    assert rep["Steiner system"].passed
    assert rep["Steiner block count"].actual == 21
    assert rep["Steiner GF(2) rank"].actual == 10
    assert rep["Case III sign parity"].passed and rep["Case III sign parity"].expected is True
    assert rep["prefix-zero span count"].actual == 512
    assert rep["Case IV code size"].actual == 512
    assert rep["span equals Case IV"].passed
    failed = [c.name for c in rep.checks if not c.passed]
    assert rep.passed, failed
    assert seconds < 300, seconds


@acceptance(9, "4600 uniqueness pipeline: cases, S(3,6,22), odd parities, span 1024, index 2, < 5 min")
def test_uniqueness_4600(report4600):
    rep, seconds = report4600
    sizes = rep["case sizes"].actual
    assert sizes == [44, 44, 2464, 1024, 1024] and sum(sizes) == 4600
    assert any("22 each" in a for a in rep.annotations)
    assert rep["Steiner system"].passed
    assert rep["Steiner block count"].actual == 77
    assert rep["Steiner GF(2) rank"].actual == 11
    assert "odd" in rep["Case III sign parity"].anchor and rep["Case III sign parity"].passed
    assert rep["prefix-zero span count"].actual == 1024
    assert rep["index of L in Leech"].actual == 2
    assert rep["odd inner product witness"].passed
    failed = [c.name for c in rep.checks if not c.passed]
    assert rep.passed, failed
    assert seconds < 300, seconds


# -- 10 ---------------------------------------------------------------------

PROPERTY = (10, "Property suites: Gegenbauer, simplex plug-back, LP monotonicity, determinism")


def _moment(n, j):
    out = F(1)
    for i in range(j // 2):
        out *= F(2 * i + 1, n + 2 * i)
    return out if j % 2 == 0 else F(0)


@acceptance(*PROPERTY)
@settings(max_examples=60, deadline=None)
@given(st.integers(3, 24), st.integers(0, 10), st.integers(0, 10))
def test_property_gegenbauer_orthogonality(n, j, k):
    p, q = gegenbauer(n, j), gegenbauer(n, k)
    val = sum((a * b * _moment(n, r + s) for r, a in enumerate(p.coeffs) for s, b in enumerate(q.coeffs)), F(0))
    assert (val == 0) == (j != k)


@acceptance(*PROPERTY)
@settings(max_examples=60, deadline=None)
@given(st.integers(3, 24), st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=7), min_size=1,
                                    max_size=11))
def test_property_expansion_round_trip(n, coeffs):
    p = RationalPolynomial(coeffs)
    assert gegenbauer_combination(gegenbauer_expand(p, n), n) == p


@acceptance(*PROPERTY)
@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4).flatmap(lambda m: st.tuples(
    st.lists(st.integers(-5, 5), min_size=m, max_size=m),
    st.lists(st.lists(st.integers(-5, 5), min_size=m, max_size=m), min_size=1, max_size=4),
    st.lists(st.integers(0, 8), min_size=4, max_size=4))))
def test_property_simplex_plug_back(data):
    c, A, b = data
    lp = LinearProgram(c, A, b[:len(A)], upper=[6] * len(c))
    res = simplex_solve(lp)
    assert res.status == OPTIMAL  # x = 0 is feasible and the box is bounded
    assert lp.is_feasible(res.x)
    assert lp.objective(res.x) == res.value
    # no lattice point of the box does better
    for x in product(range(0, 7, 2), repeat=len(c)):
        if lp.is_feasible(x):
            assert lp.objective(x) <= res.value


@acceptance(*PROPERTY)
@settings(max_examples=40, deadline=None)
@given(st.integers(3, 10).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n), min_size=1),
                                                       st.sets(st.integers(1, n)))))
def test_property_lp_monotonicity(data):
    n, D, extra = data
    assert binary_code_lp(n, D).value <= binary_code_lp(n, D | extra).value


@acceptance(*PROPERTY)
@pytest.mark.parametrize("pipeline", [891, 4600])
def test_property_determinism(pipeline, report891, report4600):
    base = (report891 if pipeline == 891 else report4600)[0].to_json(timings=False)
    for seed, threads in [(7, 1), (11, 3)]:
        assert run_uniqueness(pipeline, seed=seed, threads=threads).to_json(timings=False) == base

"""Components of the uniqueness pipelines: frames, classification, lattice checks."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from leechcert.codes import DerivedCode
from leechcert.leech import leech_minimal_vectors
from leechcert.uniqueness import (NotEven, NotIntegral, PIPELINES, assemble_L, classify_cases, coordinates_in_frame,
                                  dynkin_gram, find_d24_frame, generation_check, in_sqrt2_Dn, index_in_leech,
                                  minimal_ip_closure_check, normalize_frame, parity_check, run_uniqueness)


@pytest.mark.parametrize("n", [3, 4, 10, 24])
def test_dynkin_gram_is_scaled_dn_cartan(n):
    M = dynkin_gram(n)
    assert np.array_equal(M, M.T)
    assert round(np.linalg.det(M / 2)) == 4
    assert np.all(np.linalg.eigvalsh(M) > 0)


@given(st.lists(st.integers(-3, 3), min_size=24, max_size=24))
def test_in_sqrt2_dn_standard_frame(a):
    F2 = 8 * np.eye(24, dtype=np.int64)
    W = 4 * np.array(a)
    assert in_sqrt2_Dn(W, F2) == (sum(a) % 2 == 0)
    W[0] += 2
    assert not in_sqrt2_Dn(W, F2)


def test_assemble_rejects_non_integral_and_odd():
    rows = np.zeros((2, 24), dtype=np.int8)
    rows[0, :2] = 1
    rows[1, 0] = 1
    with pytest.raises(NotIntegral) as err:
        assemble_L(DerivedCode(rows))
    assert err.value.witness is not None
    rows = np.zeros((1, 24), dtype=np.int8)
    rows[0, :6] = 2
    with pytest.raises(NotEven):
        assemble_L(DerivedCode(rows))


@pytest.mark.parametrize("pipeline", [891, 4600])
def test_assembled_lattice(pipeline, chain):
    code = chain[2] if pipeline == 891 else chain[1]
    lat = assemble_L(code)
    assert minimal_ip_closure_check(lat)
    assert lat.translation[max(lat.translation)] == 4  # self inner product of a member


@pytest.fixture(scope="module", params=[891, 4600])
def framed(request, chain):
    pipeline = request.param
    code = chain[2] if pipeline == 891 else chain[1]
    p = PIPELINES[pipeline]
    frame = find_d24_frame(code.members, code.anchors, seed=3)
    V1 = code.anchors[1] if len(code.anchors) > 1 else None
    frame, W0 = normalize_frame(frame, code.anchors[0], V1, code.members, p.prefix)
    return pipeline, code, frame, W0


def test_frame_is_orthogonal_and_contains_anchors(framed):
    _, code, frame, _ = framed
    assert np.array_equal(frame.gram_G(), dynkin_gram())
    assert np.array_equal(frame.F2 @ frame.F2.T, 64 * np.eye(24, dtype=np.int64))
    for g in frame.G:
        assert in_sqrt2_Dn(g, frame.F2)
    for a in code.anchors:
        assert in_sqrt2_Dn(a, frame.F2)


def test_classification_with_another_seed(framed):
    pipeline, code, frame, W0 = framed
    p = PIPELINES[pipeline]
    cls = classify_cases(code.members, frame, pipeline)
    assert cls.sizes(p.case_names) == tuple(p.case_sizes)
    assert cls.side_conditions_ok
    ok, per_block, wit = parity_check(cls, coordinates_in_frame(W0, frame), pipeline)
    assert ok and wit is None
    assert set(per_block.values()) == {p.signs_per_block}
    gen = generation_check(cls, pipeline)
    assert gen.matches and gen.span_count == p.span_count


def test_index_of_leech_in_itself():
    idx, wit = index_in_leech(leech_minimal_vectors())
    assert idx == 1 and wit is None


def test_corrupted_member_fails_report(code891):
    members = code891.members.copy()
    members[5] = -members[5]
    rep = run_uniqueness(891, members=members)
    assert not rep.passed
    failed = {c.name for c in rep.checks if not c.passed}
    assert "member anchor conditions" in failed
    assert "intersection numbers" in failed
    assert "case sizes" in failed

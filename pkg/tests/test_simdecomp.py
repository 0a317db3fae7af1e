import dataclasses

import pytest

from app.core import DimensionMismatch, InternalInconsistency, PreconditionViolated
from app.models import QMatrix, QuintInput
from app.models.qmatrix import hstack, mul_all, vstack
from app.models.quaternion import ONE
from app.services.simdecomp import (
    decomposition_document,
    dims_from_ranks,
    pair_canonicalize_cols,
    pair_canonicalize_rows,
    shear,
    simultaneous_decompose,
    verify_decomposition,
)
from app.services.selftest import random_quint
from app.utils.sampling import random_matrix, random_nonsingular

from .conftest import qm


def test_shear_inverse():
    minus, plus = shear(4, 0, 2, qm([["1", "i"], ["j", "1/2"]]))
    assert (minus @ plus).is_identity()
    assert minus[0, 2] == -ONE


def test_shear_rejects_diagonal_overlap():
    with pytest.raises(InternalInconsistency):
        shear(3, 0, 1, QMatrix.zeros(2, 2).replace(0, 0, 1))


def test_pair_rows_requires_full_row_rank():
    with pytest.raises(PreconditionViolated):
        pair_canonicalize_rows(QMatrix.zeros(1, 1), QMatrix.zeros(1, 1))
    with pytest.raises(DimensionMismatch):
        pair_canonicalize_rows(QMatrix.zeros(1, 1), QMatrix.zeros(2, 1))


def test_pair_rows_sizes(rng):
    h = rng.randint(1, 3)
    bp = random_matrix(rng, h, rng.randint(0, 3))
    cp = hstack(random_nonsingular(rng, h), random_matrix(rng, h, 1))
    pair = pair_canonicalize_rows(bp, cp)
    m2, m3, m4 = pair.sizes
    assert m2 + m3 + m4 == h
    assert (pair.transform @ pair.transform_inv).is_identity()
    assert (pair.first @ pair.first_inv).is_identity()
    assert (pair.second @ pair.second_inv).is_identity()


def test_pair_cols_is_dual():
    dp = qm([["1", "0"], ["0", "0"]])
    ep = qm([["0", "1"]])
    pair = pair_canonicalize_cols(dp, ep)
    assert sum(pair.sizes) == 2
    out = vstack(pair.first @ dp, pair.second @ ep) @ pair.transform
    assert out.shape == (3, 2)


def test_micro_instances_decompose(micro):
    for q in micro.values():
        dec = simultaneous_decompose(q)
        report = verify_decomposition(q, dec)
        assert report.passed, [c.name for c in report.failures()]


def test_all_ones_block_sizes(micro):
    dims = simultaneous_decompose(micro["all-ones"]).dims
    # B and C share their single direction, as do D and E
    assert (dims.m3, dims.n3) == (1, 1)
    assert dims.m1 + dims.m5 + dims.m6 == 0


def test_zero_quintuple_has_trivial_core():
    q = QuintInput(
        A=QMatrix.zeros(2, 3),
        B=QMatrix.zeros(2, 1),
        C=QMatrix.zeros(2, 2),
        D=QMatrix.zeros(1, 3),
        E=QMatrix.zeros(2, 3),
    )
    dec = simultaneous_decompose(q)
    assert verify_decomposition(q, dec).passed
    d = dec.dims
    assert (d.m1, d.m2, d.m3, d.m4, d.m5, d.m6) == (0, 0, 0, 0, 0, 0)
    assert d.m7 == 2 and d.n7 == 3


def test_random_quintuples_verify(rng):
    q = random_quint(rng, 4)
    dec = simultaneous_decompose(q)
    report = verify_decomposition(q, dec)
    assert report.passed, [c.name for c in report.failures()]
    assert mul_all(dec.P, dec.S_A, dec.Q) == q.A


def test_dimension_formulas_match(rng):
    q = random_quint(rng, 3)
    d = simultaneous_decompose(q).dims
    f = dims_from_ranks(q)
    assert (d.m2, d.m3, d.m4, d.n2, d.n3, d.n4) == (f.m2, f.m3, f.m4, f.n2, f.n3, f.n4)
    assert d.m1 + d.m5 + d.m6 == f.m156


def test_verification_reports_changed_input(micro):
    q = micro["all-ones"]
    dec = simultaneous_decompose(q)
    other = QuintInput(A=qm([["2"]]), B=q.B, C=q.C, D=q.D, E=q.E)
    report = verify_decomposition(other, dec)
    assert not report.passed
    assert "reconstruct:A" in {c.name for c in report.failures()}


def test_verification_records_wrong_size_transform(micro):
    q = micro["all-ones"]
    dec = dataclasses.replace(simultaneous_decompose(q), Q=QMatrix.identity(2))
    report = verify_decomposition(q, dec)
    failed = {c.name for c in report.failures()}
    assert {"inverse:Q", "reconstruct:A", "reconstruct:D", "reconstruct:E"} <= failed


def test_verification_reports_tampered_factor(micro):
    q = micro["all-ones"]
    dec = simultaneous_decompose(q)
    tampered = dataclasses.replace(dec, S_A=dec.S_A.replace(0, 0, dec.S_A[0, 0] + 1))
    failed = {c.name for c in verify_decomposition(q, tampered).failures()}
    assert {"reconstruct:A", "template:S_A"} <= failed
    assert "reconstruct:B" not in failed


def test_dimension_formulas_invariant_under_transforms(rng):
    q = random_quint(rng, 3)
    u, w = random_nonsingular(rng, q.m), random_nonsingular(rng, q.n)
    r1, r2 = random_nonsingular(rng, q.p1), random_nonsingular(rng, q.p2)
    r3, r4 = random_nonsingular(rng, q.q1), random_nonsingular(rng, q.q2)
    moved = QuintInput(
        A=mul_all(u, q.A, w),
        B=mul_all(u, q.B, r1),
        C=mul_all(u, q.C, r2),
        D=mul_all(r3, q.D, w),
        E=mul_all(r4, q.E, w),
    )
    assert dims_from_ranks(moved) == dims_from_ranks(q)


def test_document_shape(micro):
    q = micro["ijk"]
    dec = simultaneous_decompose(q)
    doc = decomposition_document(dec, verify_decomposition(q, dec))
    assert set(doc["transforms"]) == {"P", "Q", "T1", "T2", "V1", "V2"}
    assert set(doc["factors"]) == {"S_A", "S_B", "S_C", "S_D", "S_E"}
    assert doc["verification"]["passed"] is True
    assert doc["dims"]["m2"] == 1

"""Relation families and the generic residual evaluator."""

import json
from fractions import Fraction

import pytest

from anyonqpg.cyclotomic import CycScalar
from anyonqpg.linalg import GradedOperator, GradedSpace, Matrix, shift_matrix
from anyonqpg.presentations import (
    GeneratorSymbol,
    RepAssignment,
    boso_sn_relations,
    boso_un_relations,
    check_presentation,
    evaluate_relation,
    rel_ord_relations,
    sn_plus_relations,
    un_plus_relations,
    xn_relations,
)
from anyonqpg.repbuild import build_boso_rep, build_sn_rep, permutation_magic


def test_instance_counts():
    assert len(sn_plus_relations(3).relations) == 6 + 9 + 27 + 27
    assert len(rel_ord_relations(3).relations) == 69
    assert len(un_plus_relations(3).relations) == 4 * 9
    assert len(xn_relations(3).relations) == 1 + 3 + 9
    assert len(boso_sn_relations(2).relations) == (4 + 4 + 16) + 3 + 4
    assert len(boso_un_relations(2).relations) == 16 + 3 + 4
    for n in (2, 4, 5):
        assert len(sn_plus_relations(n).relations) == 2 * n + n * n + 2 * n**3


def test_degree_consistency_construction():
    # construction itself asserts degree balance of every instance
    for n in range(2, 9):
        sn_plus_relations(n)
        un_plus_relations(n)
        boso_sn_relations(n)
        xn_relations(n)
        rel_ord_relations(n)


def test_star_relation_coefficient():
    # the adjoint relation at (i,j)=(1,2), N=3 reads q*_12 = w q_21
    pres = sn_plus_relations(3)
    rel = next(r for r in pres.relations if r.label == "star[1,2]")
    ((coeff, word),) = rel.rhs
    assert coeff == CycScalar.root_of_unity(3, 1)
    assert word[0][0].indices == (2, 1)


def test_fuse_relation_n2_instance():
    # (i,j,k)=(1,1,0) at N=2: q_00 = sum_l w^(-l(1+l)) q_(-l,1) q_(l,1)
    pres = sn_plus_relations(2)
    rel = next(r for r in pres.relations if r.label == "fuse-left[1,1,0]")
    assert len(rel.rhs) == 2
    coeffs = sorted(str(c.coeffs) for c, _ in rel.rhs)
    # both phases reduce to +1 since w = -1 and the exponents are even
    assert all(c == str((Fraction(1),)) for c in coeffs)


def test_evaluate_residuals():
    n = 3
    pres = rel_ord_relations(n)
    space = GradedSpace(n, (0,))
    zero = Matrix.zero(n, 1, 1)
    eye = Matrix.identity(n, 1)
    images = {g: GradedOperator(space, eye if g.indices[0] == g.indices[1] else zero)
              for g in pres.generators}
    rep = RepAssignment(space, images)
    for rel in pres.relations:
        assert evaluate_relation(rel, rep).is_zero(), rel.label

    # zeroing everything leaves a -1 residual on the delta relation
    rep0 = RepAssignment(space, {g: GradedOperator(space, zero) for g in pres.generators})
    rel = next(r for r in pres.relations if r.label == "row0[0]")
    res = evaluate_relation(rel, rep0)
    assert res.entry(0, 0) == -1


def test_missing_generator_raises():
    pres = xn_relations(2)
    space = GradedSpace(2, (0, 1))
    rep = RepAssignment(space, {})
    with pytest.raises(KeyError):
        evaluate_relation(pres.relations[0], rep)


def test_un_plus_non_unitary_residual():
    n = 2
    pres = un_plus_relations(n)
    space = GradedSpace(n, (0,))
    vals = {0: 1, 1: 2}
    images = {}
    for g in pres.generators:
        i, j = g.indices
        e = vals[i] if i == j else 0
        images[g] = GradedOperator(space, Matrix.from_scalar_dict(n, 1, 1, {(0, 0): e}))
    report = check_presentation(pres, RepAssignment(space, images))
    failing = {item.label: item.residual for item in report.failures()}
    assert failing["u-adj-u[1,1]"] == 3.0


def test_xn_zero_assignment_fails_unit():
    n = 3
    pres = xn_relations(n)
    space = GradedSpace(n, tuple(range(n)))
    rep = RepAssignment(
        space, {g: GradedOperator(space, Matrix.zero(n, n, n)) for g in pres.generators}
    )
    report = check_presentation(pres, rep)
    assert any(item.label == "P0" for item in report.failures())


def test_trivial_z_kills_offdiagonal_generators():
    # with z = 1 the exchange law forces w^(j-i) g_ij = g_ij; a transposition
    # seed has nonzero off-diagonal images, so the check must fail
    n = 3
    base = build_sn_rep(permutation_magic(n, [1, 0, 2]))
    boso = build_boso_rep(base)
    z_gen = GeneratorSymbol("z", (), 1)
    images = dict(boso.images)
    images[z_gen] = GradedOperator(boso.space, Matrix.identity(n, boso.space.dim))
    broken = RepAssignment(boso.space, images)
    report = check_presentation(boso_sn_relations(n), broken, check_degrees=False)
    assert any(item.label.startswith("exchange") for item in report.failures())


def test_approx_mode_agrees_with_exact():
    n = 3
    rep = build_sn_rep(permutation_magic(n, [2, 0, 1]))
    pres = sn_plus_relations(n)
    exact = check_presentation(pres, rep, mode="exact")
    approx = check_presentation(pres, rep, mode="approx", eps=1e-10)
    assert exact.passed and approx.passed
    assert approx.max_residual < 1e-12


def test_presentation_json_export():
    pres = xn_relations(2)
    obj = pres.to_json()
    text = json.dumps(obj)
    assert '"P_0"' in text
    assert obj["N"] == 2
    assert {g["degree"] for g in obj["generators"]} == {0, 1}


def test_thread_env_parallel_matches_serial(monkeypatch):
    n = 3
    rep = build_sn_rep(permutation_magic(n, [0, 2, 1]))
    pres = sn_plus_relations(n)
    serial = check_presentation(pres, rep)
    monkeypatch.setenv("ANYON_QPG_THREADS", "4")
    parallel = check_presentation(pres, rep)
    assert serial.to_json() == parallel.to_json()

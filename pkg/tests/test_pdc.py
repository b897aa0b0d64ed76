import random
from fractions import Fraction as F

import pytest

from conftest import ex52
from semicubic.decide import q_constants
from semicubic.detcoef import TridiagonalModel, build_table, has_pdc
from semicubic.errors import InvalidIndex, PreconditionFailed
from semicubic.exactnum import quad_sign
from semicubic.pdc import (
    CellKind,
    G_product_factor,
    G_value,
    Q_ratio,
    classify_cell,
    coefficient_formula_check,
    delta_G,
    diagonal_check,
    prop32_check,
)
from semicubic.shift import parity_model
from semicubic.verify import random_spec


def _sign(x):
    return (x > 0) - (x < 0)


def test_named_cells():
    assert str(classify_cell(4, 4, 3)) == "Diagonal(0)"
    assert classify_cell(5, 2, 3).kind is CellKind.INHERITS
    assert classify_cell(5, 3, 3).kind is CellKind.INDIVIDUAL_MID
    assert classify_cell(2, 1, 3).kind is CellKind.INDIVIDUAL_SMALL
    assert classify_cell(9, 0, 3).kind is CellKind.AUTO_POSITIVE
    assert classify_cell(9, 10, 3).kind is CellKind.AUTO_POSITIVE
    with pytest.raises(InvalidIndex):
        classify_cell(3, 5, 2)


def test_partition_exhaustive():
    for m0 in range(1, 9):
        for n in range(31):
            diagonals = set()
            for i in range(n + 2):
                cat = classify_cell(n, i, m0)
                inner = 1 <= i <= n
                if not inner:
                    assert cat.kind is CellKind.AUTO_POSITIVE
                elif n <= m0:
                    assert cat.kind is CellKind.INDIVIDUAL_SMALL
                elif i <= n - m0:
                    assert cat.kind is CellKind.INHERITS
                elif i <= m0:
                    assert cat.kind is CellKind.INDIVIDUAL_MID and n <= 2 * m0 - 1
                else:
                    assert cat.kind is CellKind.DIAGONAL and 0 <= cat.diagonal <= m0 - 1
                    diagonals.add(cat.diagonal)
            if n >= 2 * m0:
                # every row past the mid block meets each diagonal exactly once
                assert diagonals == set(range(m0))


def _stampfli_models(seed, count, N):
    rng = random.Random(seed)
    for _ in range(count):
        spec = random_spec(rng)
        for j in (1, 2):
            yield spec, j, parity_model(spec, j, N)


def test_coefficient_formula_against_table():
    for spec, j, model in _stampfli_models(5, 10, 20):
        assert coefficient_formula_check(model, spec.m0, 20)


def test_coefficient_formula_needs_structure():
    model = TridiagonalModel.from_lists([1, 1, 1, 1], [1, 1, 1, 1], [5, 5, 5, 0])
    with pytest.raises(PreconditionFailed):
        coefficient_formula_check(model, 1, 3)


def test_Q_ratio_basics():
    model = TridiagonalModel.from_lists([1, 1, 1, 1], [1, 2, 4, 8], [0, 0, 0, 0])
    assert Q_ratio(model, 0, 0) == 1
    assert Q_ratio(model, 0, 1) == F(8 - 2, 1)
    for spec, j, model in _stampfli_models(6, 6, 16):
        m0 = spec.m0
        for k in range(5):
            assert len({Q_ratio(model, ell, k) for ell in range(m0 + 1, m0 + 7)}) == 1
        assert Q_ratio(model, m0 + 1, 2) == q_constants(spec, j).B * Q_ratio(model, m0 + 1, 1)


def test_G_product_formula_and_delta():
    for spec, j, model in _stampfli_models(7, 8, 20):
        m0 = spec.m0
        table = build_table(model)
        for i in range(m0):
            for n in range(m0 + 1 + i, 20 - i - 1):
                G = G_value(model, table, m0, n, i)
                assert table.coef(n, n - i) == G_product_factor(model, m0, n, i) * G
                step = G_value(model, table, m0, n + 1, i) - G
                assert step == delta_G(model, table, m0, n, i)


def test_G_base_case():
    for spec, j, model in _stampfli_models(8, 4, 12):
        m0 = spec.m0
        table = build_table(model)
        v_low = 1
        for v in model.vseq[: m0 + 1]:
            v_low *= v
        assert G_value(model, table, m0, m0 + 2, 0) == v_low + model.eta(m0 + 2) * table.hat(m0, m0)


def test_G_monotone_with_sign_of_S():
    for spec, j, model in _stampfli_models(9, 8, 22):
        m0 = spec.m0
        table = build_table(model)
        Q = q_constants(spec, j).Q
        for i in range(m0):
            S = sum(Q[k] * table.hat(m0, m0 - k) for k in range(i + 1))
            steps = [delta_G(model, table, m0, n, i) for n in range(m0 + 1 + i, 18)]
            assert all(_sign(s) == _sign(S) for s in steps)


def test_prop_check_agrees_with_table():
    checked = 0
    for spec, j, model in _stampfli_models(10, 25, 25):
        m0 = spec.m0
        dec = prop32_check(model, m0, 2 * m0 + 3, spec.tail.K)
        pdc = has_pdc(build_table(model))
        if dec.passed:
            assert pdc
        else:
            fail = dec.first_failure
            if ".diag(" in fail.ident and "branchB" in fail.ident:
                # the limit fails: G(n,i) is negative for n large enough
                rep = next(d for d in dec.diagonals if not d.passed)
                assert quad_sign(rep.limit_value) < 0
            else:
                assert not pdc
        checked += 1
    assert checked == 50


def test_example52_inside_and_below():
    assert all(prop32_check(parity_model(ex52(F(108, 100)), j, 7), 3, 7, ex52(F(108, 100)).tail.K).passed for j in (1, 2))
    below = ex52(F(1065, 1000))
    model = parity_model(below, 2, 7)
    dec = prop32_check(model, 3, 7, below.tail.K)
    assert not dec.passed
    assert dec.first_failure.ident == "cond.ii.c(2,2)"


def test_initial_value_sign_matches_G():
    for spec, j, model in _stampfli_models(12, 8, 12):
        m0 = spec.m0
        dec = prop32_check(model, m0, 2 * m0 + 3, spec.tail.K)
        table = build_table(model)
        for rep in dec.diagonals:
            G = G_value(model, table, m0, m0 + 1 + 2 * rep.i, rep.i)
            assert _sign(rep.initial_value) == _sign(G)


def test_preconditions():
    spec = ex52(F(108, 100))
    model = parity_model(spec, 1, 7)
    with pytest.raises(InvalidIndex):
        prop32_check(model, 3, 6, spec.tail.K)
    broken = TridiagonalModel(model.useq, model.vseq, model.wseq[:5] + (model.wseq[5] + 1,) + model.wseq[6:])
    with pytest.raises(PreconditionFailed):
        prop32_check(broken, 3, 7, spec.tail.K)
    with pytest.raises(PreconditionFailed):
        diagonal_check(0, F(-1), F(1), None)


def test_branch_order():
    assert diagonal_check(0, F(0), F(0), None).branch == "A"
    rep = diagonal_check(1, F(1), F(-1), None)
    assert rep.branch == "A" and not rep.passed

import json
import random
from fractions import Fraction as F

import pytest

from conftest import TAIL, ex52, ex54
from semicubic.decide import (
    Outcome,
    decide_semicubic_pdc,
    eta_recursion_check,
    eta_recursion_holds,
    invariant_A,
    invariant_B,
    prop51_check,
    q1_closed_form,
    q_constants,
    tail_summary,
)
from semicubic.detcoef import build_table
from semicubic.errors import InvalidIndex, PreconditionFailed, SingularInvariant
from semicubic.pdc import Q_ratio
from semicubic.scan import grid_points
from semicubic.shift import eta, make_spec, make_tail, next_recursive_weight, parity_model
from semicubic.verify import random_spec, random_triple


def test_invariants_shift_forward():
    rng = random.Random(21)
    for _ in range(50):
        u, v, w = random_triple(rng)
        p = next_recursive_weight(u, v, w)
        assert invariant_A(u, v, w) == invariant_A(v, w, p)
        assert invariant_B(u, v, w) == invariant_B(v, w, p)


def test_invariants_solved_from_etas():
    # eta_7 = A/(eta_5 eta_3) + B and eta_8 = A/(eta_6 eta_4) + B is a 2x2 linear system
    pure = make_spec([], 1, 2, 3)
    e = {n: eta(pure, n) for n in range(3, 9)}
    r7, r8 = 1 / (e[5] * e[3]), 1 / (e[6] * e[4])
    A = (e[7] - e[8]) / (r7 - r8)
    B = e[7] - A * r7
    assert A == invariant_A(1, 2, 3) == F(-470596, 3)
    assert B == invariant_B(1, 2, 3) == F(1715, 3)


def test_singular_invariant():
    with pytest.raises(SingularInvariant):
        invariant_A(1, 1, 2)


def test_raw_eta_recursion_on_pure_tails():
    rng = random.Random(22)
    for _ in range(10):
        u, v, w = random_triple(rng)
        pure = make_spec([], u, v, w)
        etas = {n: eta(pure, n) for n in range(3, 31)}
        assert eta_recursion_holds(etas, invariant_A(u, v, w), invariant_B(u, v, w), 2, range(7, 31))


def test_sliced_eta_recursion():
    assert eta_recursion_check(make_spec([], 1, 2, 3), 1, range(2, 14))
    rng = random.Random(23)
    for _ in range(10):
        spec = random_spec(rng)
        for j in (1, 2):
            assert eta_recursion_check(spec, j, range(spec.m0 + 1, spec.m0 + 10))
    m4 = ex52(F(108, 100))
    for j in (1, 2):
        assert eta_recursion_check(m4, j, range(m4.m0 + 1, 12))
        assert not eta_recursion_check(m4, j, [1])


def test_q_constants():
    rng = random.Random(24)
    for _ in range(10):
        spec = random_spec(rng)
        t = spec.tail
        for j in (1, 2):
            inv = q_constants(spec, j, count=5)
            assert inv.Q[0] == 1
            assert inv.Q[1] == q1_closed_form(t.u, t.v, t.w)
            assert inv.Q[2] == inv.B * inv.Q[1]
            model = parity_model(spec, j, spec.m0 + 12)
            for k in range(5):
                for ell in range(spec.m0 + 1, spec.m0 + 7):
                    assert Q_ratio(model, ell, k) == inv.Q[k]
    assert q1_closed_form(1, 2, 3) == 588


def test_example52_inside():
    d = decide_semicubic_pdc(ex52(F(108, 100)))
    assert d.outcome is Outcome.ACCEPT and d.accepted and d.first_failure is None


def test_example52_spec_value_107_lies_below_interval():
    # 1.07 < (262709 - sqrt(296066681))/228660 ~ 1.073656
    d = decide_semicubic_pdc(ex52(F(107, 100)))
    assert d.outcome is Outcome.REJECT


@pytest.mark.parametrize("x", [F(111, 100) - F(1, 1000), F(1065, 1000), F(1105, 1000)])
def test_example52_outside(x):
    assert decide_semicubic_pdc(ex52(x)).outcome is Outcome.REJECT


def test_example52_below_fails_individual_condition():
    d = decide_semicubic_pdc(ex52(F(1065, 1000)))
    assert ".ii.c(" in d.failing_condition
    alt = prop51_check(ex52(F(1065, 1000)))
    assert alt.outcome is Outcome.REJECT and ".cond.i." in alt.failing_condition


def test_degenerate():
    d = decide_semicubic_pdc(make_spec([1, 2, 3, 3, 3, 3, 3, 3, 5, 6], 7, 8, 9))
    assert d.outcome is Outcome.DEGENERATE and not d.parities


def test_pure_tail_accepts():
    # a subnormal Stampfli shift is semi-cubically hyponormal
    for tail in [(1, 2, 3), TAIL]:
        assert decide_semicubic_pdc(make_spec([], *tail)).accepted


def test_prop51_matches_general_decision():
    pts = grid_points(F(1), F(111, 100), 11)
    compared = 0
    for y in pts:
        for x in pts:
            if x < y:
                spec = ex54(x, y)
                assert prop51_check(spec).outcome is decide_semicubic_pdc(spec).outcome
                compared += 1
    for x in [F(1073, 1000), F(1074, 1000), F(108, 100), F(1104, 1000), F(1105, 1000)]:
        assert prop51_check(ex52(x)).outcome is decide_semicubic_pdc(ex52(x)).outcome
    assert compared >= 50


def test_prop51_preconditions():
    with pytest.raises(InvalidIndex):
        prop51_check(make_spec([1, 1], *TAIL))
    with pytest.raises(PreconditionFailed):
        prop51_check(make_spec([1, F(101, 100), F(102, 100), F(103, 100)], *TAIL))


def _c2(x, n, i):
    return build_table(parity_model(ex52(x), 2, 4)).coef(n, i)


def test_parity2_equivalence_chain():
    u, v, w = TAIL
    xs = [F(106, 100) + F(k, 400) for k in range(1, 21)]
    for x in xs:
        a, b, c = _c2(x, 1, 1), _c2(x, 2, 1), _c2(x, 3, 1)
        assert (a > 0) == (b > 0) == (c > 0)
        assert c == u * (w - v) ** 2 / w * a


def test_ex54_weight_polynomials_sign_agreement():
    # the listed individual coefficients against their rational sign polynomials
    from semicubic.appendix import P, evaluate

    cells = [(1, 2, 1), (1, 3, 1), (1, 3, 2), (1, 4, 2), (1, 4, 3), (1, 5, 3), (2, 1, 1), (2, 2, 2), (2, 3, 3)]
    rng = random.Random(25)
    for _ in range(30):
        x = F(rng.randint(1001, 1108), 1000)
        y = F(rng.randint(int(x * 1000) + 1, 1109), 1000)
        tables = {j: build_table(parity_model(ex54(x, y), j, 6)) for j in (1, 2)}
        for k, (j, n, i) in enumerate(cells, start=1):
            c = tables[j].coef(n, i)
            assert (c > 0) == (evaluate(P[k], x, y) > 0)


def test_report_and_json():
    d = decide_semicubic_pdc(ex52(F(1065, 1000)))
    data = json.loads(d.to_json())
    assert data["outcome"] == "REJECT"
    assert any(not c["passed"] for c in data["conditions"])
    assert d.report().startswith("outcome: REJECT")


def test_tail_summary_rows():
    rows = dict((name, exact) for name, exact, _ in tail_summary(make_tail(1, 2, 3)))
    assert rows["L2"] == "2 + 1*sqrt(2)" and rows["p"] == "10/3" and rows["K"] == "294 + 196*sqrt(2)"


def test_sliced_eta_approaches_K_from_below():
    spec = ex52(F(108, 100))
    K = float(spec.tail.K)
    for j in (1, 2):
        model = parity_model(spec, j, 80)
        etas = [float(model.eta(n)) for n in range(spec.m0 + 1, 81)]
        assert all(a <= b < K for a, b in zip(etas, etas[1:]))
        assert (K - etas[-1]) / K < 1e-6

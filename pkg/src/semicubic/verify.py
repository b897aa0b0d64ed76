"""Self-check suite behind ``semicubic verify``.

Each check builds its own random instances from a fixed seed and compares
two exact routes to the same quantity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .appendix import appendix_fixture, fixture_boundary, fixture_law
from .decide import decide_semicubic_pdc, eta_recursion_check, invariant_A, invariant_B, q1_closed_form
from .detcoef import TridiagonalModel, build_table, determinant_oracle
from .errors import SingularInvariant
from .pdc import Q_ratio
from .scan import example_template, grid_points
from .shift import BackwardExtensionSpec, make_spec, next_recursive_weight, parity_model, sequence_triple


def random_rational(rng: random.Random, lo: int, hi: int, den: int = 12) -> Fraction:
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_model(rng: random.Random, length: int) -> TridiagonalModel:
    us = [random_rational(rng, 0, 10) for _ in range(length)]
    vs = [Fraction(rng.randint(1, 10 * 12), 12) for _ in range(length)]
    ws = [random_rational(rng, 0, 10) for _ in range(length)]
    return TridiagonalModel.from_lists(us, vs, ws)


def random_triple(rng: random.Random) -> tuple[Fraction, Fraction, Fraction]:
    while True:
        u = Fraction(rng.randint(4, 40), 8)
        v = u + Fraction(rng.randint(1, 16), 16)
        w = v + Fraction(rng.randint(1, 16), 16)
        try:
            invariant_A(u, v, w)
        except SingularInvariant:
            continue
        return u, v, w


def random_spec(rng: random.Random, max_m: int = 6) -> BackwardExtensionSpec:
    """Random backward extension with strictly increasing front (so never degenerate)."""
    u, v, w = random_triple(rng)
    m = rng.randint(0, max_m)
    cuts = sorted(rng.sample(range(1, 1000), m))
    front = [u * Fraction(c, 1000) for c in cuts]
    return make_spec(front, u, v, w)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def check_oracle_equivalence(rng, count=50, rows=12) -> CheckResult:
    for trial in range(count):
        model = random_model(rng, rows + 1)
        table = build_table(model)
        for n in range(rows + 1):
            poly = determinant_oracle(model, n)
            if [table.coef(n, i) for i in range(n + 2)] != [poly.coeff(i) for i in range(n + 2)]:
                return CheckResult("oracle equivalence", False, f"model {trial}, row {n}")
    return CheckResult("oracle equivalence", True, f"{count} models, n <= {rows}")


def check_shift_identity(rng, count=20, horizon=40) -> CheckResult:
    for _ in range(count):
        spec = random_spec(rng)
        for n in range(spec.m + 1, horizon + 1):
            if sequence_triple(spec, n).u * sequence_triple(spec, n + 2).v != sequence_triple(spec, n).w:
                return CheckResult("u_n v_(n+2) = w_n", False, f"front={spec.front}, n={n}")
    return CheckResult("u_n v_(n+2) = w_n", True, f"{count} extensions, n <= {horizon}")


def check_invariance(rng, count=50) -> CheckResult:
    for _ in range(count):
        u, v, w = random_triple(rng)
        p = next_recursive_weight(u, v, w)
        if invariant_A(u, v, w) != invariant_A(v, w, p) or invariant_B(u, v, w) != invariant_B(v, w, p):
            return CheckResult("A, B shift invariance", False, f"({u}, {v}, {w})")
    return CheckResult("A, B shift invariance", True, f"{count} triples")


def check_eta_recursions(rng, count=10) -> CheckResult:
    for _ in range(count):
        u, v, w = random_triple(rng)
        pure = make_spec([], u, v, w)
        A, B = invariant_A(u, v, w), invariant_B(u, v, w)
        etas = {n: sequence_triple(pure, n).v / sequence_triple(pure, n).u for n in range(3, 31)}
        if not all(etas[n] == A / (etas[n - 2] * etas[n - 4]) + B for n in range(7, 31)):
            return CheckResult("eta recursions", False, f"pure tail ({u}, {v}, {w})")
        spec = random_spec(rng)
        for j in (1, 2):
            if not eta_recursion_check(spec, j, range(spec.m0 + 1, spec.m0 + 10)):
                return CheckResult("eta recursions", False, f"extension {spec.front}, j={j}")
    return CheckResult("eta recursions", True, f"{count} tails and extensions")


def check_q_constancy(rng, count=20) -> CheckResult:
    for _ in range(count):
        spec = random_spec(rng)
        m0, tail = spec.m0, spec.tail
        closed = q1_closed_form(tail.u, tail.v, tail.w)
        B = invariant_B(tail.u, tail.v, tail.w)
        for j in (1, 2):
            model = parity_model(spec, j, m0 + 14)
            for k in range(5):
                vals = {Q_ratio(model, ell, k) for ell in range(m0 + 1, m0 + 7)}
                if len(vals) != 1:
                    return CheckResult("Q constancy", False, f"{spec.front}, j={j}, k={k}")
            if Q_ratio(model, m0 + 1, 1) != closed or Q_ratio(model, m0 + 1, 2) != B * closed:
                return CheckResult("Q constancy", False, f"Q_1/Q_2 closed forms, j={j}")
    return CheckResult("Q constancy", True, f"{count} extensions, both parities")


def check_fixture_equivalence(n: int = 20) -> CheckResult:
    tpl = example_template("ex54")
    pts = grid_points(Fraction(1), Fraction(111, 100), n)
    compared = 0
    for y in pts:
        for x in pts:
            if not x < y:
                continue
            vals = appendix_fixture(x, y)
            d = decide_semicubic_pdc(tpl.instantiate({"x": x, "y": y}))
            if fixture_boundary(vals) or d.boundary:
                continue
            compared += 1
            if fixture_law(vals) != d.accepted:
                return CheckResult("appendix fixture equivalence", False, f"(x, y) = ({x}, {y})")
    return CheckResult("appendix fixture equivalence", True, f"{compared} cells on {n}x{n} grid")


def run_all(seed: int = 20161014, grid: int = 20) -> list[CheckResult]:
    rng = random.Random(seed)
    checks: list[Callable[[], CheckResult]] = [
        lambda: check_oracle_equivalence(rng),
        lambda: check_shift_identity(rng),
        lambda: check_invariance(rng),
        lambda: check_eta_recursions(rng),
        lambda: check_q_constancy(rng),
        lambda: check_fixture_equivalence(grid),
    ]
    return [c() for c in checks]

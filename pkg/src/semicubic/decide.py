"""Semi-cubic hyponormality with p.d.c. for backward extensions of a Stampfli tail.

For each parity j the slice D_n^[j] is a tridiagonal model satisfying
u_n v_(n+1) = w_n beyond m0 = floor(m/2) + 1, its eta ratios obey
eta_(n+2) = A/(eta_(n+1) eta_n) + B, and they increase to the limit K of the
tail.  That makes the Q ratios constants Q_k and reduces the "for all n"
p.d.c. question to finitely many exact sign tests.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Iterable

from .detcoef import build_table, determinant_oracle
from .errors import ComputationError, DegenerateEta, InvalidIndex, PreconditionFailed, SingularInvariant
from .exactnum import QuadraticNumber, format_float, format_rational, quad_sign
from .pdc import ConditionRecord, PdcDecision, Q_ratio, limit_G, prop32_check
from .shift import (
    BackwardExtensionSpec,
    StampfliTail,
    next_recursive_weight,
    parity_model,
    sequence_triple,
    validate_spec,
)


def _invariant_parts(u, v, w):
    u, v, w = Fraction(u), Fraction(v), Fraction(w)
    core = u * v * (v - 3 * w) + u * u * w + v * w * w
    shared = u * u * (v - 2 * w) - 2 * u * v * (v - 2 * w) - v * w * w
    if shared == 0 or u == 0 or u == v or v == w:
        raise SingularInvariant(f"invariant denominator vanishes at ({u}, {v}, {w})")
    return u, v, w, core, shared


def invariant_A(u, v, w) -> Fraction:
    u, v, w, core, shared = _invariant_parts(u, v, w)
    return v**3 * core**6 / (u * u * (u - v) ** 8 * (v - w) ** 2 * shared)


def invariant_B(u, v, w) -> Fraction:
    u, v, w, core, shared = _invariant_parts(u, v, w)
    num = v * core**3 * (u * u * (2 * v - 3 * w) - v * w * w + u * v * (-3 * v + 5 * w))
    return num / (u * u * (u - v) ** 4 * (v - w) ** 2 * shared)


def q1_closed_form(u, v, w) -> Fraction:
    u, v, w = Fraction(u), Fraction(v), Fraction(w)
    num = v * (2 * u * v * v + 2 * u * u * w + v * w * w - u * u * v - 4 * u * v * w)
    num *= (u * v * v + u * u * w - 3 * u * v * w + v * w * w) ** 2
    return num / (u * u * (v - u) ** 4 * (w - v) ** 2)


def eta_recursion_holds(etas: dict[int, Fraction], A: Fraction, B: Fraction, lag: int, indices: Iterable[int]) -> bool:
    """eta_n = A/(eta_(n-lag) eta_(n-2 lag)) + B over ``indices``."""
    return all(etas[n] == A / (etas[n - lag] * etas[n - 2 * lag]) + B for n in indices)


def sliced_etas(spec: BackwardExtensionSpec, j: int, lo: int, hi: int) -> dict[int, Fraction]:
    out = {}
    for n in range(lo, hi + 1):
        t = sequence_triple(spec, 2 * n + j - 1)
        if t.u == 0:
            raise DegenerateEta(f"u_{2 * n + j - 1} = 0")
        out[n] = t.v / t.u
    return out


def eta_recursion_check(spec: BackwardExtensionSpec, j: int, indices: Iterable[int]) -> bool:
    """eta^_(n+2) = A/(eta^_(n+1) eta^_n) + B for every n in ``indices`` (sliced indexing)."""
    indices = list(indices)
    tail = spec.tail
    A, B = invariant_A(tail.u, tail.v, tail.w), invariant_B(tail.u, tail.v, tail.w)
    etas = sliced_etas(spec, j, min(indices), max(indices) + 2)
    return eta_recursion_holds(etas, A, B, 1, [n + 2 for n in indices])


@dataclass(frozen=True)
class StampfliInvariants:
    A: Fraction
    B: Fraction
    Q: tuple[Fraction, ...]


def q_constants(spec: BackwardExtensionSpec, j: int, m0: int | None = None, count: int | None = None) -> StampfliInvariants:
    """Q_0..Q_(count-1) for parity j, each cross-checked against Q_ratio at l = m0+1 and m0+2."""
    if m0 is None:
        m0 = spec.m0
    if count is None:
        count = max(m0, 3)
    tail = spec.tail
    A, B = invariant_A(tail.u, tail.v, tail.w), invariant_B(tail.u, tail.v, tail.w)
    model = parity_model(spec, j, m0 + count + 3)
    for n in (m0 + 1, m0 + 2):
        if not model.eta(n + 1) > model.eta(n):
            raise PreconditionFailed(f"eta^[{j}] not strictly increasing at {n}", identity="eta", index=n)
    q1 = Q_ratio(model, m0 + 1, 1)
    closed = q1_closed_form(tail.u, tail.v, tail.w)
    if q1 != closed:
        raise ComputationError(f"Q_1 from eta ratios ({q1}) disagrees with closed form ({closed})")
    Q = [Fraction(1), q1]
    while len(Q) < count:
        k = len(Q) - 2
        Q.append(B * Q[1] if k == 0 else A * Q[k - 1] + B * Q[k + 1])
    for k, q in enumerate(Q[:count]):
        for ell in (m0 + 1, m0 + 2):
            if Q_ratio(model, ell, k) != q:
                raise PreconditionFailed(
                    f"Q^[{j}]({ell}, {k}) != Q_{k}", identity="Q constant in l", index=(ell, k)
                )
    return StampfliInvariants(A, B, tuple(Q[:count]))


class Outcome(enum.Enum):
    ACCEPT = "ACCEPT"
    REJECT = "REJECT"
    DEGENERATE = "DEGENERATE"
    PRECONDITION_FAILED = "PRECONDITION_FAILED"


@dataclass
class Decision:
    outcome: Outcome
    parities: dict[int, PdcDecision] = field(default_factory=dict)
    message: str = ""

    @property
    def accepted(self) -> bool:
        return self.outcome is Outcome.ACCEPT

    @property
    def records(self) -> list[ConditionRecord]:
        return [r for j in sorted(self.parities) for r in self.parities[j].records]

    @property
    def first_failure(self) -> ConditionRecord | None:
        return next((r for r in self.records if not r.passed), None)

    @property
    def failing_condition(self) -> str:
        f = self.first_failure
        return f.ident if f else ""

    @property
    def boundary(self) -> bool:
        return any(p.boundary for p in self.parities.values())

    def report(self) -> str:
        lines = [f"outcome: {self.outcome.value}"]
        if self.message:
            lines.append(f"note: {self.message}")
        for r in self.records:
            lines.append(f"  [{'pass' if r.passed else 'FAIL'}] {r.ident}: {r.value}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "outcome": self.outcome.value,
                "message": self.message,
                "conditions": [r.as_dict() for r in self.records],
            },
            indent=2,
        )


def decide_semicubic_pdc(spec: BackwardExtensionSpec) -> Decision:
    """Exact decision for both parities from the finitely many quantities that govern every row."""
    report = validate_spec(spec)
    if not report.ordered:
        return Decision(Outcome.PRECONDITION_FAILED, message="; ".join(report.ordering))
    if report.degenerate:
        return Decision(
            Outcome.DEGENERATE,
            message=f"v_n = 0 at n = {report.degenerate_indices}; equal-weight blocks are not analyzed",
        )
    if not report.eta_strict:
        return Decision(Outcome.PRECONDITION_FAILED, message=f"eta not strictly increasing: {report.eta_nonstrict}")

    m0 = spec.m0
    N = 2 * m0 + 3
    K = spec.tail.K
    decision = Decision(Outcome.ACCEPT)
    try:
        for j in (1, 2):
            model = parity_model(spec, j, N)
            inv = q_constants(spec, j, m0)
            decision.parities[j] = prop32_check(model, m0, N, K, Q=inv.Q, table=build_table(model), prefix=f"j{j}.cond")
    except PreconditionFailed as exc:
        return Decision(Outcome.PRECONDITION_FAILED, decision.parities, message=str(exc))
    if not all(p.passed for p in decision.parities.values()):
        decision.outcome = Outcome.REJECT
    return decision


def prop51_check(spec: BackwardExtensionSpec) -> Decision:
    """The m = 4 condition list for 1, 1, sqrt x, sqrt y, (sqrt u, sqrt v, sqrt w)^.

    Coefficients come from expanded determinant polynomials, Q_1 from its
    closed form and K from the tail, so this path shares no code with the
    table-and-branch machinery beyond the sequence definitions.
    """
    if spec.m != 4:
        raise InvalidIndex(f"this condition list is for m = 4, got m = {spec.m}")
    f = spec.front
    if not (f[0] == f[1] < f[2] < f[3] < spec.tail.u):
        raise PreconditionFailed("expects front weights a, a, x, y with a < x < y < u")
    tail = spec.tail
    B = invariant_B(tail.u, tail.v, tail.w)
    q = [Fraction(1), q1_closed_form(tail.u, tail.v, tail.w)]
    q.append(B * q[1])
    K = tail.K

    seq = {n: sequence_triple(spec, n) for n in range(16)}
    polys = {}
    for j in (1, 2):
        for n in range(7):
            polys[j, n] = determinant_oracle(parity_model(spec, j, 6), n)

    def c(j, n, i):
        return polys[j, n].coeff(i)

    def chat3(j, i):
        return seq[6 + j - 1].v * c(j, 2, i - 1) - seq[4 + j - 1].w * c(j, 1, i - 1)

    records = []

    def add(ident, value, ok):
        records.append(ConditionRecord(ident, ok, value))

    individual = [(1, 2, 1), (1, 3, 1), (1, 2, 2), (1, 3, 2), (1, 4, 2), (1, 3, 3), (1, 4, 3), (1, 5, 3),
                  (2, 1, 1), (2, 2, 2), (2, 3, 3)]
    for j, n, i in individual:
        val = c(j, n, i)
        add(f"j{j}.cond.i.c({n},{i})", format_rational(val), val > 0)

    def branch(label, j, depth, first_entry, v_low):
        hats = [chat3(j, 3 - k) for k in range(depth + 1)]
        S = sum(q[k] * hats[k] for k in range(depth + 1))
        ok_a = S >= 0 and first_entry >= 0
        lim = limit_G(v_low, K, hats)
        ok_b = S <= 0 and quad_sign(lim) >= 0
        add(f"j{j}.cond.{label}", f"S={format_rational(S)}; c={format_rational(first_entry)}; limit={lim}", ok_a or ok_b)

    v_even = prod(seq[n].v for n in (0, 2, 4, 6))
    v_odd = prod(seq[n].v for n in (1, 3, 5, 7))
    branch("ii", 1, 0, c(1, 4, 4), v_even)
    branch("iii", 1, 1, c(1, 5, 4), v_even)
    branch("iv", 1, 2, c(1, 6, 4), v_even)
    branch("v", 2, 0, c(2, 4, 4), v_odd)

    outcome = Outcome.ACCEPT if all(r.passed for r in records) else Outcome.REJECT
    by_parity: dict[int, PdcDecision] = {1: PdcDecision(True), 2: PdcDecision(True)}
    for r in records:
        p = by_parity[int(r.ident[1])]
        p.records.append(r)
        p.passed = p.passed and r.passed
    return Decision(outcome, by_parity)


def tail_summary(tail: StampfliTail) -> list[tuple[str, str, str]]:
    """(name, exact, float) rows describing a tail."""
    A = invariant_A(tail.u, tail.v, tail.w)
    B = invariant_B(tail.u, tail.v, tail.w)
    p = next_recursive_weight(tail.u, tail.v, tail.w)
    L4 = tail.L2 * tail.L2
    rows = [
        ("Psi0", tail.psi0),
        ("Psi1", tail.psi1),
        ("L2", tail.L2),
        ("L4", L4),
        ("K", tail.K),
        ("A", A),
        ("B", B),
        ("p", p),
    ]
    out = []
    for name, val in rows:
        exact = str(val) if isinstance(val, QuadraticNumber) else format_rational(val)
        out.append((name, exact, format_float(val)))
    return out

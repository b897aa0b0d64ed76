"""Positive-determinant-coefficient analysis for models with u_n v_(n+1) = w_n beyond m0.

Past row m0 the coefficient table splits into cells that inherit their sign
from the row above, a finite block of cells that must be checked one at a
time, and m0 diagonals c(n, n - i) whose signs are governed by

    G(n, i) = v_m0...v_0 + sum_{k<=i} (eta_(n-i) ... eta_(n-i+k)) c^(m0, m0-k).

When the eta ratios increase strictly, G(., i) is monotone with the sign of
S_i = sum_{k<=i} Q_k c^(m0, m0-k), so each diagonal reduces to one endpoint
test: the first entry when G increases, the limit when it decreases.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Sequence

from .detcoef import CoefficientTable, TridiagonalModel, build_table
from .errors import DegenerateEta, InvalidIndex, PreconditionFailed
from .exactnum import QuadraticNumber, format_rational, quad_sign


class CellKind(enum.Enum):
    AUTO_POSITIVE = "AutoPositive"
    INHERITS = "Inherits"
    INDIVIDUAL_SMALL = "IndividualSmall"
    INDIVIDUAL_MID = "IndividualMid"
    DIAGONAL = "Diagonal"


@dataclass(frozen=True)
class CellCategory:
    kind: CellKind
    diagonal: int | None = None

    def __str__(self):
        if self.kind is CellKind.DIAGONAL:
            return f"Diagonal({self.diagonal})"
        return self.kind.value


def classify_cell(n: int, i: int, m0: int) -> CellCategory:
    if n < 0 or m0 < 1 or not 0 <= i <= n + 1:
        raise InvalidIndex(f"no cell ({n}, {i}) for m0 = {m0}")
    if i == 0 or i == n + 1:
        return CellCategory(CellKind.AUTO_POSITIVE)
    if n <= m0:
        return CellCategory(CellKind.INDIVIDUAL_SMALL)
    if i <= n - m0:
        return CellCategory(CellKind.INHERITS)
    if i <= m0:
        # n+1-m0 <= i <= m0 forces n <= 2m0-1
        return CellCategory(CellKind.INDIVIDUAL_MID)
    return CellCategory(CellKind.DIAGONAL, n - i)


def check_structure(model: TridiagonalModel, m0: int, N: int) -> None:
    """Raise PreconditionFailed unless u_n v_(n+1) = w_n for m0 <= n < N."""
    for n in range(m0, N):
        if model.useq[n] * model.vseq[n + 1] != model.wseq[n]:
            raise PreconditionFailed(
                f"u_{n} v_{n + 1} != w_{n}", identity="u_n v_(n+1) = w_n", index=n
            )


def coefficient_formula_check(model: TridiagonalModel, m0: int, N: int, table: CoefficientTable | None = None) -> bool:
    """Compare the closed coefficient formula past row m0 with the recursion table, exactly."""
    check_structure(model, m0, N)
    if table is None:
        table = build_table(model, N)
    us, vs = model.useq, model.vseq
    v_low = prod(vs[: m0 + 1])
    for n in range(m0 + 1, N + 1):
        v_run = prod(vs[m0 + 1 : n + 1])
        for i in range(n - m0 + 1):
            if table.coef(n, i) != us[n] * table.coef(n - 1, i):
                return False
        for i in range(n - m0 + 1, m0 + 1):
            if table.coef(n, i) != us[n] * table.coef(n - 1, i) + v_run * table.hat(m0, i - n + m0):
                return False
        diag = us[n] * prod(vs[m0 + 1 : n]) * (v_low + model.eta(n) * table.hat(m0, m0))
        if table.coef(n, n) != diag:
            return False
        if table.coef(n, n + 1) != prod(vs[: n + 1]):
            return False
    return True


def Q_ratio(model: TridiagonalModel, ell: int, k: int) -> Fraction:
    """Q(l, k) = (eta_(l+1)...eta_(l+k+1) - eta_l...eta_(l+k)) / (eta_(l+1) - eta_l)."""
    etas = [model.eta(s) for s in range(ell, ell + k + 2)]
    den = etas[1] - etas[0]
    if den == 0:
        raise DegenerateEta(f"eta_{ell + 1} = eta_{ell}")
    return (prod(etas[1:]) - prod(etas[:-1])) / den


def G_value(model: TridiagonalModel, table: CoefficientTable, m0: int, n: int, i: int) -> Fraction:
    if not (0 <= i <= m0 - 1 and m0 + 1 + i <= n):
        raise InvalidIndex(f"G({n}, {i}) undefined for m0 = {m0}")
    total = prod(model.vseq[: m0 + 1])
    run = Fraction(1)
    for k in range(i + 1):
        run *= model.eta(n - i + k)
        total += run * table.hat(m0, m0 - k)
    return total


def G_product_factor(model: TridiagonalModel, m0: int, n: int, i: int) -> Fraction:
    """The prefactor with c(n, n-i) = factor * G(n, i)."""
    return prod(model.useq[n - i : n + 1]) * prod(model.vseq[m0 + 1 : n - i])


def delta_G(model: TridiagonalModel, table: CoefficientTable, m0: int, n: int, i: int) -> Fraction:
    """G(n+1, i) - G(n, i) through the Q ratios at l = n - i."""
    ell = n - i
    s = sum((Q_ratio(model, ell, k) * table.hat(m0, m0 - k) for k in range(i + 1)), Fraction(0))
    return (model.eta(ell + 1) - model.eta(ell)) * s


@dataclass
class ConditionRecord:
    ident: str
    passed: bool
    value: str
    detail: str = ""
    boundary: bool = False

    def as_dict(self) -> dict:
        return {"id": self.ident, "passed": self.passed, "value": self.value, "detail": self.detail}


@dataclass
class DiagonalReport:
    i: int
    S: Fraction
    branch: str
    initial_value: Fraction
    limit_value: QuadraticNumber | None
    passed: bool

    @property
    def ident(self) -> str:
        return f"cond.i.diag({self.i}).branch{self.branch}"


@dataclass
class PdcDecision:
    passed: bool
    records: list[ConditionRecord] = field(default_factory=list)
    diagonals: list[DiagonalReport] = field(default_factory=list)

    @property
    def first_failure(self) -> ConditionRecord | None:
        return next((r for r in self.records if not r.passed), None)

    @property
    def boundary(self) -> bool:
        return any(r.boundary for r in self.records)


def limit_G(v_low: Fraction, limit_eta: QuadraticNumber, hats: Sequence[Fraction]) -> QuadraticNumber:
    """v_m0...v_0 + sum_k limit_eta^(k+1) c^(m0, m0-k)."""
    total = QuadraticNumber(v_low)
    power = QuadraticNumber(1)
    for h in hats:
        power = power * limit_eta
        total = total + power * h
    return total


def diagonal_check(i: int, S: Fraction, initial: Fraction, limit: QuadraticNumber | None) -> DiagonalReport:
    """Branch A (S >= 0, first entry >= 0) is tried before branch B (S <= 0, limit >= 0)."""
    if S >= 0 and initial >= 0:
        return DiagonalReport(i, S, "A", initial, limit, True)
    if S <= 0:
        if limit is None:
            raise PreconditionFailed(f"diagonal {i} needs the eta limit", identity="limit", index=i)
        ok = quad_sign(limit) >= 0
        if ok or S < 0:
            return DiagonalReport(i, S, "B", initial, limit, ok)
    return DiagonalReport(i, S, "A", initial, limit, False)


def prop32_check(
    model: TridiagonalModel,
    m0: int,
    N: int,
    limit_eta: QuadraticNumber | None,
    Q: Sequence[Fraction] | None = None,
    table: CoefficientTable | None = None,
    prefix: str = "cond",
) -> PdcDecision:
    """Decide p.d.c. of all M_n(t) from finitely many exact quantities.

    ``N`` is the last row consulted for the structural preconditions; it must
    be at least 2*m0 + 1 so every checked cell and eta ratio is in range.
    Without ``Q`` the constants are read off Q_ratio at l = m0+1 and their
    independence of l is checked on the rows available.
    """
    if N < 2 * m0 + 1 or len(model) <= N:
        raise InvalidIndex(f"horizon N = {N} too short for m0 = {m0}")
    check_structure(model, m0, N)
    for n in range(m0 + 1, N):
        if not model.eta(n + 1) > model.eta(n):
            raise PreconditionFailed(f"eta_{n + 1} <= eta_{n}", identity="eta strictly increasing", index=n)
    if table is None:
        table = build_table(model, N)
    if Q is None:
        Q = [Fraction(1)]
        for k in range(1, m0):
            q = Q_ratio(model, m0 + 1, k)
            for ell in range(m0 + 2, N - k):
                if Q_ratio(model, ell, k) != q:
                    raise PreconditionFailed(
                        f"Q({ell}, {k}) differs from Q({m0 + 1}, {k}); G is not monotone",
                        identity="Q constant in l",
                        index=ell,
                    )
            Q.append(q)

    decision = PdcDecision(True)

    def add(ident, value, ok, detail="", boundary=False):
        decision.records.append(ConditionRecord(ident, ok, value, detail, boundary))
        if not ok:
            decision.passed = False

    for n in range(1, m0 + 1):
        for i in range(1, n + 1):
            c = table.coef(n, i)
            add(f"{prefix}.ii.c({n},{i})", format_rational(c), c >= 0, boundary=c == 0)
    for n in range(m0 + 1, 2 * m0):
        for i in range(n + 1 - m0, m0 + 1):
            c = table.coef(n, i)
            add(f"{prefix}.iii.c({n},{i})", format_rational(c), c >= 0, boundary=c == 0)

    v_low = prod(model.vseq[: m0 + 1])
    for i in range(m0):
        hats = [table.hat(m0, m0 - k) for k in range(i + 1)]
        S = sum((Q[k] * hats[k] for k in range(i + 1)), Fraction(0))
        initial = table.coef(m0 + 1 + i, m0 + 1)
        limit = limit_G(v_low, limit_eta, hats) if limit_eta is not None else None
        rep = diagonal_check(i, S, initial, limit)
        decision.diagonals.append(rep)
        if rep.branch == "A":
            value = f"S={format_rational(S)}; c({m0 + 1 + i},{m0 + 1})={format_rational(initial)}"
            edge = S == 0 or initial == 0
        else:
            value = f"S={format_rational(S)}; limit={limit}"
            edge = S == 0 or quad_sign(limit) == 0
        add(f"{prefix}.{rep.ident.removeprefix('cond.')}", value, rep.passed, boundary=edge)
    return decision

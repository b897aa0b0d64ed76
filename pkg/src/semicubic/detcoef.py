"""Determinant coefficients of the tridiagonal family M_n(t).

M_n(t) has diagonal u_k + v_k t and off-diagonal sqrt(w_k t); write
det M_n(t) = sum_i c(n, i) t^i.  ``build_table`` fills the triangular array
c(n, i) by the coefficient recursion, and ``determinant_oracle`` expands the
same determinants as polynomials so the two can be compared.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ComputationError, DegenerateEta
from .exactnum import UniPolynomial, format_rational


@dataclass(frozen=True)
class TridiagonalModel:
    """Diagonal data u_k + v_k t and off-diagonal squares w_k t of M_n(t)."""

    useq: tuple[Fraction, ...]
    vseq: tuple[Fraction, ...]
    wseq: tuple[Fraction, ...]

    def __post_init__(self):
        if not len(self.useq) == len(self.vseq) == len(self.wseq):
            raise ValueError("useq, vseq, wseq must have equal length")

    @classmethod
    def from_lists(cls, useq, vseq, wseq) -> TridiagonalModel:
        return cls(
            tuple(Fraction(x) for x in useq),
            tuple(Fraction(x) for x in vseq),
            tuple(Fraction(x) for x in wseq),
        )

    def __len__(self):
        return len(self.useq)

    def eta(self, n: int) -> Fraction:
        if self.useq[n] == 0:
            raise DegenerateEta(f"u_{n} = 0 in model, eta undefined")
        return self.vseq[n] / self.useq[n]


class CoefficientTable:
    """Rows c[n][0..n+1] and hat-coefficients chat[n][0..n+1] for n = 0..N."""

    def __init__(self, c: list[list[Fraction]], chat: list[list[Fraction]]):
        self.c = c
        self.chat = chat

    @property
    def N(self) -> int:
        return len(self.c) - 1

    def __call__(self, n: int, i: int) -> Fraction:
        return self.coef(n, i)

    def coef(self, n: int, i: int) -> Fraction:
        if n == -1:
            return Fraction(1) if i == 0 else Fraction(0)
        if n < -1 or i < 0 or i > n + 1:
            return Fraction(0)
        return self.c[n][i]

    def hat(self, n: int, i: int) -> Fraction:
        if n < 0 or i < 0 or i > n + 1:
            return Fraction(0)
        return self.chat[n][i]


def build_table(model: TridiagonalModel, N: int | None = None) -> CoefficientTable:
    """c(n, i) for n <= N via c(n,i) = u_n c(n-1,i) + v_n c(n-1,i-1) - w_(n-1) c(n-2,i-1).

    Rows 0 and 1 are seeded explicitly; the empty determinant d_(-1) = 1 is
    used only for the hat coefficients of rows 0 and 1.
    """
    if N is None:
        N = len(model) - 1
    if N >= len(model):
        raise IndexError(f"model has {len(model)} entries, row {N} requested")
    us, vs, ws = model.useq, model.vseq, model.wseq
    rows: list[list[Fraction]] = [[us[0], vs[0]]]
    if N >= 1:
        rows.append([us[0] * us[1], us[1] * vs[0] + us[0] * vs[1] - ws[0], vs[1] * vs[0]])
    zero = Fraction(0)
    for n in range(2, N + 1):
        prev, prev2 = rows[n - 1], rows[n - 2]
        row = []
        for i in range(n + 2):
            val = us[n] * prev[i] if i <= n else zero
            if i >= 1:
                val += vs[n] * prev[i - 1]
                if i - 1 <= n - 1:
                    val -= ws[n - 1] * prev2[i - 1]
            row.append(val)
        rows.append(row)
    table = CoefficientTable(rows, [])
    table.chat = hat_coefficients(table, model)
    return table


def hat_coefficients(table: CoefficientTable, model: TridiagonalModel) -> list[list[Fraction]]:
    """c^(n,i) = c(n,i) - u_n c(n-1,i), checked against v_n c(n-1,i-1) - w_(n-1) c(n-2,i-1)."""
    us, vs, ws = model.useq, model.vseq, model.wseq
    out = []
    for n in range(table.N + 1):
        row = []
        for i in range(n + 2):
            first = table.coef(n, i) - us[n] * table.coef(n - 1, i)
            second = vs[n] * table.coef(n - 1, i - 1)
            if n >= 1:
                second -= ws[n - 1] * table.coef(n - 2, i - 1)
            if first != second:
                raise ComputationError(f"hat coefficient mismatch at ({n}, {i})")
            row.append(first)
        out.append(row)
    return out


def determinant_oracle(model: TridiagonalModel, n: int) -> UniPolynomial:
    """det M_n(t) by cofactor expansion along the last row, as an exact polynomial in t."""
    if not 0 <= n < len(model):
        raise IndexError(f"row {n} outside model of length {len(model)}")
    t = UniPolynomial([0, 1])
    prev2, prev = UniPolynomial([1]), UniPolynomial([model.useq[0], model.vseq[0]])
    for k in range(1, n + 1):
        qk = UniPolynomial([model.useq[k], model.vseq[k]])
        prev2, prev = prev, qk * prev - t * model.wseq[k - 1] * prev2
    return prev


@dataclass(frozen=True)
class PdcResult:
    ok: bool
    violation: tuple[int, int] | None = None
    value: Fraction | None = None

    def __bool__(self):
        return self.ok


def has_pdc(table: CoefficientTable, N: int | None = None) -> PdcResult:
    """All c(n,i) >= 0 and c(n,n+1) > 0 for n <= N; reports the first violation in (n, i) order."""
    if N is None:
        N = table.N
    for n in range(N + 1):
        row = table.c[n]
        for i, c in enumerate(row):
            if c < 0 or (i == n + 1 and c == 0):
                return PdcResult(False, (n, i), c)
    return PdcResult(True)


def materialize(model: TridiagonalModel, n: int, t: float) -> np.ndarray:
    """Dense float matrix M_n(t)."""
    t = float(t)
    diag = [float(model.useq[k]) + float(model.vseq[k]) * t for k in range(n + 1)]
    off = [np.sqrt(float(model.wseq[k]) * t) for k in range(n)]
    return np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)


def psd_crosscheck(model: TridiagonalModel, n: int, t, tol: float = 1e-8) -> bool:
    """Minimum eigenvalue of M_n(t) >= -tol; a numeric test utility only.

    p.d.c. implies this holds, the converse does not.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if n > 64:
        raise ValueError("psd_crosscheck is limited to n <= 64")
    return bool(np.linalg.eigvalsh(materialize(model, n, t)).min() >= -tol)


def table_csv(table: CoefficientTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "i", "c", "chat"])
    for n in range(table.N + 1):
        for i in range(n + 2):
            writer.writerow([n, i, format_rational(table.c[n][i]), format_rational(table.chat[n][i])])
    return buf.getvalue()

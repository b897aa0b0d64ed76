"""Stampfli recursive tails, backward m-step extensions, and the u_n, v_n, w_n sequences.

All weights are handled as squared weights; square roots only appear in
reports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .detcoef import TridiagonalModel
from .errors import DegenerateEta, InvalidWeights
from .exactnum import QuadraticNumber, format_rational, parse_rational


@dataclass(frozen=True)
class StampfliTail:
    u: Fraction
    v: Fraction
    w: Fraction
    psi0: Fraction
    psi1: Fraction
    disc: Fraction
    L2: QuadraticNumber
    K: QuadraticNumber
    _weights: list = field(default_factory=list, compare=False, repr=False)

    def weight_squared(self, n: int) -> Fraction:
        return tail_weight_squared(self, n)


def make_tail(u, v, w) -> StampfliTail:
    u, v, w = Fraction(u), Fraction(v), Fraction(w)
    if not 0 < u < v < w:
        raise InvalidWeights("weights must satisfy 0 < u < v < w")
    psi0 = -u * v * (w - v) / (v - u)
    psi1 = v * (w - u) / (v - u)
    disc = psi1 * psi1 + 4 * psi0
    L2 = (QuadraticNumber(psi1) + QuadraticNumber.sqrt_of(disc)) / 2
    K = QuadraticNumber((psi1 * psi1 + psi0) ** 2 / (psi0 * psi0)) * L2 * L2
    return StampfliTail(u, v, w, psi0, psi1, disc, L2, K, [u, v, w])


def tail_weight_squared(tail: StampfliTail, n: int) -> Fraction:
    """alpha_n^2 of the Stampfli completion: seeds u, v, w then Psi1 + Psi0/alpha_(n-1)^2."""
    if n < 0:
        raise IndexError("tail index must be nonnegative")
    ws = tail._weights
    # list.append is atomic, so concurrent readers only ever see a valid prefix
    while len(ws) <= n:
        ws.append(tail.psi1 + tail.psi0 / ws[-1])
    return ws[n]


def next_recursive_weight(u, v, w) -> Fraction:
    """The p with (sqrt u, sqrt v, sqrt w)^ = sqrt u, (sqrt v, sqrt w, sqrt p)^."""
    u, v, w = Fraction(u), Fraction(v), Fraction(w)
    return v * (w * w + v * u - 2 * w * u) / (w * (v - u))


@dataclass(frozen=True)
class BackwardExtensionSpec:
    """Squared weights x_m, ..., x_1 (outermost first) prepended to a Stampfli tail."""

    front: tuple[Fraction, ...]
    tail: StampfliTail

    @property
    def m(self) -> int:
        return len(self.front)

    @property
    def m0(self) -> int:
        return self.m // 2 + 1

    def weight_squared(self, n: int) -> Fraction:
        return extension_weight_squared(self, n)

    def to_json(self) -> dict:
        return {
            "front": [format_rational(x) for x in self.front],
            "u": format_rational(self.tail.u),
            "v": format_rational(self.tail.v),
            "w": format_rational(self.tail.w),
        }


def make_spec(front: Sequence, u, v, w, *, check_order: bool = True) -> BackwardExtensionSpec:
    spec = BackwardExtensionSpec(tuple(Fraction(x) for x in front), make_tail(u, v, w))
    if check_order:
        problems = ordering_problems(spec)
        if problems:
            raise InvalidWeights("; ".join(problems))
    return spec


def ordering_problems(spec: BackwardExtensionSpec) -> list[str]:
    xs = list(spec.front) + [spec.tail.u]
    problems = []
    if xs[0] <= 0:
        problems.append("front weights must be positive")
    for k in range(len(xs) - 1):
        if xs[k] > xs[k + 1]:
            problems.append(
                f"front not nondecreasing at position {k}: "
                f"{format_rational(xs[k])} > {format_rational(xs[k + 1])}"
            )
    return problems


def extension_weight_squared(spec: BackwardExtensionSpec, n: int) -> Fraction:
    if n < 0:
        raise IndexError("weight index must be nonnegative")
    if n < spec.m:
        return spec.front[n]
    return tail_weight_squared(spec.tail, n - spec.m)


@dataclass(frozen=True)
class SequenceTriple:
    n: int
    u: Fraction
    v: Fraction
    w: Fraction


def _alpha2(spec: BackwardExtensionSpec, k: int) -> Fraction:
    return extension_weight_squared(spec, k) if k >= 0 else Fraction(0)


def sequence_triple(spec: BackwardExtensionSpec, n: int) -> SequenceTriple:
    a = [_alpha2(spec, k) for k in range(n - 3, n + 3)]
    # a[3] is alpha_n^2
    un = a[3] - a[2]
    vn = a[3] * a[4] * a[5] - a[0] * a[1] * a[2]
    wn = a[3] * a[4] * (a[5] - a[2]) ** 2
    return SequenceTriple(n, un, vn, wn)


def eta(spec: BackwardExtensionSpec, n: int) -> Fraction:
    t = sequence_triple(spec, n)
    if t.u == 0:
        raise DegenerateEta(f"u_{n} = 0, eta_{n} undefined")
    return t.v / t.u


def parity_model(spec: BackwardExtensionSpec, j: int, N: int) -> TridiagonalModel:
    """The slice feeding D_n^[j]: even raw indices for j = 1, odd for j = 2."""
    if j not in (1, 2):
        raise ValueError("parity j must be 1 or 2")
    triples = [sequence_triple(spec, 2 * k + j - 1) for k in range(N + 1)]
    return TridiagonalModel(
        tuple(t.u for t in triples),
        tuple(t.v for t in triples),
        tuple(t.w for t in triples),
    )


@dataclass
class ValidationReport:
    ordering: list[str]
    degenerate_indices: list[int]
    eta_nonstrict: dict[int, list[int]]
    horizon: int

    @property
    def ordered(self) -> bool:
        return not self.ordering

    @property
    def degenerate(self) -> bool:
        return bool(self.degenerate_indices)

    @property
    def eta_strict(self) -> bool:
        return not any(self.eta_nonstrict.values())

    @property
    def ok(self) -> bool:
        return self.ordered and not self.degenerate and self.eta_strict


def default_horizon(spec: BackwardExtensionSpec) -> int:
    return 2 * spec.m + 12


def validate_spec(spec: BackwardExtensionSpec, N: int | None = None) -> ValidationReport:
    """Ordering, v_n = 0 degeneracy on raw indices 0..N, strict eta increase per parity.

    The eta check covers sliced indices m0+1 .. m0+5, which reaches past every
    index the decision procedure touches.
    """
    if N is None:
        N = default_horizon(spec)
    ordering = ordering_problems(spec)
    degenerate = [n for n in range(N + 1) if sequence_triple(spec, n).v == 0]
    nonstrict: dict[int, list[int]] = {1: [], 2: []}
    if not ordering and not degenerate:
        m0 = spec.m0
        for j in (1, 2):
            etas = {}
            for n in range(m0 + 1, m0 + 7):
                raw = 2 * n + j - 1
                t = sequence_triple(spec, raw)
                etas[n] = t.v / t.u if t.u else None
            for n in range(m0 + 1, m0 + 6):
                if etas[n] is None or etas[n + 1] is None or not etas[n + 1] > etas[n]:
                    nonstrict[j].append(n)
    return ValidationReport(ordering, degenerate, nonstrict, N)


def load_spec_dict(data: dict) -> BackwardExtensionSpec:
    try:
        front = [parse_rational(x) for x in data.get("front", [])]
        u, v, w = (parse_rational(data[k]) for k in ("u", "v", "w"))
    except KeyError as exc:
        raise InvalidWeights(f"spec missing field {exc.args[0]!r}") from exc
    return make_spec(front, u, v, w)


def load_spec(path: str | Path) -> BackwardExtensionSpec:
    return load_spec_dict(json.loads(Path(path).read_text()))

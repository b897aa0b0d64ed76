"""One- and two-parameter sweeps of the decision over families of backward extensions."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .decide import Outcome, decide_semicubic_pdc
from .errors import InvalidWeights
from .exactnum import format_float, format_rational, parse_rational
from .shift import BackwardExtensionSpec, make_spec

INVALID_POINT = "INVALID_POINT"
BOUNDARY = "BOUNDARY"


@dataclass(frozen=True)
class FamilyTemplate:
    """Front weights that are either fixed rationals or names of free variables.

    Free variables must be strictly increasing in the order they appear, on
    top of the usual nondecreasing front constraint.
    """

    front: tuple[Fraction | str, ...]
    u: Fraction
    v: Fraction
    w: Fraction
    bounds: dict[str, tuple[Fraction, Fraction]]

    @property
    def free(self) -> list[str]:
        return [x for x in self.front if isinstance(x, str)]

    def instantiate(self, values: dict[str, Fraction]) -> BackwardExtensionSpec:
        names = self.free
        for a, b in zip(names, names[1:]):
            if not values[a] < values[b]:
                raise InvalidWeights(f"{a} < {b} required")
        front = [values[x] if isinstance(x, str) else x for x in self.front]
        return make_spec(front, self.u, self.v, self.w)

    @classmethod
    def from_dict(cls, data: dict) -> FamilyTemplate:
        bounds = {k: (parse_rational(lo), parse_rational(hi)) for k, (lo, hi) in data.get("free", {}).items()}
        front = []
        for x in data["front"]:
            front.append(x if x in bounds else parse_rational(x))
        return cls(tuple(front), *(parse_rational(data[k]) for k in ("u", "v", "w")), bounds)

    @classmethod
    def load(cls, path: str | Path) -> FamilyTemplate:
        return cls.from_dict(json.loads(Path(path).read_text()))


def classify_point(template: FamilyTemplate, values: dict[str, Fraction]) -> tuple[str, str]:
    """(outcome label, failing condition id) for one parameter point."""
    try:
        spec = template.instantiate(values)
    except InvalidWeights:
        return INVALID_POINT, ""
    d = decide_semicubic_pdc(spec)
    if d.boundary and d.outcome in (Outcome.ACCEPT, Outcome.REJECT):
        return BOUNDARY, d.failing_condition
    return d.outcome.value, d.failing_condition


@dataclass(frozen=True)
class Bracket:
    """Sign change of the Accept indicator inside [reject_side, accept_side] (either order)."""

    accept_side: Fraction
    reject_side: Fraction

    @property
    def width(self) -> Fraction:
        return abs(self.accept_side - self.reject_side)


@dataclass(frozen=True)
class FeasibleInterval:
    lo: Fraction
    hi: Fraction
    lo_bracket: Bracket | None  # None when the interval runs into the template bound
    hi_bracket: Bracket | None

    def csv_row(self) -> list[str]:
        return [format_rational(self.lo), format_rational(self.hi), format_float(self.hi - self.lo)]


@dataclass
class SweepResult:
    intervals: list[FeasibleInterval]
    degenerate: list[Fraction]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["lo", "hi", "width"])
        for iv in self.intervals:
            writer.writerow(iv.csv_row())
        return buf.getvalue()


def _accepts(template: FamilyTemplate, name: str, x: Fraction, degenerate: list[Fraction]) -> bool:
    try:
        d = decide_semicubic_pdc(template.instantiate({name: x}))
    except InvalidWeights:
        return False
    if d.outcome is Outcome.DEGENERATE:
        degenerate.append(x)
    return d.outcome is Outcome.ACCEPT


def _bisect(template, name, accept_x: Fraction, reject_x: Fraction, tol: Fraction, degenerate) -> Bracket:
    while abs(accept_x - reject_x) > tol:
        mid = (accept_x + reject_x) / 2
        if _accepts(template, name, mid, degenerate):
            accept_x = mid
        else:
            reject_x = mid
    return Bracket(accept_x, reject_x)


def sweep_1d(template: FamilyTemplate, tol, samples: int = 256) -> SweepResult:
    """Maximal Accept intervals of the single free variable, endpoints bisected to width <= tol.

    Sampling is at ``samples`` cell centers; an Accept run narrower than one
    cell can be missed.  Reported endpoints are Accept-side points of their
    brackets.
    """
    tol = parse_rational(tol) if isinstance(tol, str) else Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    (name,) = template.free
    lo, hi = template.bounds[name]
    step = (hi - lo) / samples
    xs = [lo + (2 * k + 1) * step / 2 for k in range(samples)]
    degenerate: list[Fraction] = []
    flags = [_accepts(template, name, x, degenerate) for x in xs]

    intervals = []
    k = 0
    while k < samples:
        if not flags[k]:
            k += 1
            continue
        start = k
        while k + 1 < samples and flags[k + 1]:
            k += 1
        end = k
        if start == 0:
            left, lb = lo, None
        else:
            lb = _bisect(template, name, xs[start], xs[start - 1], tol, degenerate)
            left = lb.accept_side
        if end == samples - 1:
            right, rb = hi, None
        else:
            rb = _bisect(template, name, xs[end], xs[end + 1], tol, degenerate)
            right = rb.accept_side
        intervals.append(FeasibleInterval(left, right, lb, rb))
        k += 1
    return SweepResult(intervals, sorted(set(degenerate)))


@dataclass(frozen=True)
class CellRecord:
    x: Fraction
    y: Fraction
    outcome: str
    failing_condition: str


@dataclass
class RegionScanResult:
    nx: int
    ny: int
    cells: list[CellRecord]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["x", "y", "outcome", "failing_condition"])
        for c in self.cells:
            writer.writerow([format_rational(c.x), format_rational(c.y), c.outcome, c.failing_condition])
        return buf.getvalue()

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for c in self.cells:
            out[c.outcome] = out.get(c.outcome, 0) + 1
        return out


def grid_points(lo: Fraction, hi: Fraction, n: int) -> list[Fraction]:
    return [lo + (2 * k + 1) * (hi - lo) / (2 * n) for k in range(n)]


def _scan_cell(args) -> CellRecord:
    template, names, x, y = args
    outcome, failing = classify_point(template, {names[0]: x, names[1]: y})
    return CellRecord(x, y, outcome, failing)


def scan_2d(template: FamilyTemplate, nx: int, ny: int, workers: int = 1) -> RegionScanResult:
    """Decision at every cell center, rows ordered by y then x regardless of ``workers``."""
    if nx < 2 or ny < 2:
        raise ValueError("nx and ny must be at least 2")
    names = template.free
    if len(names) != 2:
        raise ValueError("scan_2d needs exactly two free variables")
    xs = grid_points(*template.bounds[names[0]], nx)
    ys = grid_points(*template.bounds[names[1]], ny)
    jobs = [(template, names, x, y) for y in ys for x in xs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(_scan_cell, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    else:
        cells = [_scan_cell(job) for job in jobs]
    return RegionScanResult(nx, ny, cells)


def example_template(name: str) -> FamilyTemplate:
    """The three worked families over the tail (1.11, 1.12, 1.13)."""
    u, v, w = Fraction(111, 100), Fraction(112, 100), Fraction(113, 100)
    one = Fraction(1)
    if name == "ex52":
        return FamilyTemplate((one, one, Fraction(106, 100), "x"), u, v, w, {"x": (Fraction(106, 100), u)})
    if name == "ex53":
        return FamilyTemplate((one, one, "x", Fraction(109, 100)), u, v, w, {"x": (one, Fraction(109, 100))})
    if name == "ex54":
        return FamilyTemplate((one, one, "x", "y"), u, v, w, {"x": (one, u), "y": (one, u)})
    raise KeyError(name)


def template_dict(template: FamilyTemplate) -> dict:
    return {
        "front": [x if isinstance(x, str) else format_rational(x) for x in template.front],
        "u": format_rational(template.u),
        "v": format_rational(template.v),
        "w": format_rational(template.w),
        "free": {k: [format_rational(a), format_rational(b)] for k, (a, b) in template.bounds.items()},
    }



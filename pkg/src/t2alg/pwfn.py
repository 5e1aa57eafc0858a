"""Exact piecewise-affine functions on the unit interval.

A function is stored as a strictly increasing breakpoint grid over [0, 1]
together with an explicit value at every breakpoint and one affine law per
open interval between consecutive breakpoints.  Point values are independent
of the neighbouring segment limits, so isolated spikes and jump
discontinuities are represented exactly.  Coordinates, values, slopes and
intercepts are `fractions.Fraction`; nothing is ever rounded.

The canonical form has no removable breakpoint: an interior breakpoint is
removable when the two adjacent segments carry the same affine law and the
point value matches that law.  `PWFn.build` canonicalises on construction,
so two instances compare equal exactly when they are equal as functions.
"""

from __future__ import annotations

import re
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Literal, Optional, Sequence, Union

RatLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


class PwfError(Exception):
    """Base class for representation and format errors."""


class PwfSyntaxError(PwfError):
    """Malformed PWF text.  Carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: Optional[int] = None):
        where = f"line {line}"
        if column is not None:
            where += f", column {column}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


class PwfDomainError(PwfError):
    """Structurally well-formed input that violates a representation invariant."""


_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(-?\d+))?$")


def parse_rational(token: str) -> Fraction:
    """Parse 'p' or 'p/q' exactly.  Decimal notation is rejected."""
    match = _RATIONAL_RE.match(token)
    if match is None:
        raise ValueError(f"not a rational number: {token!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"zero denominator: {token!r}")
    return Fraction(numerator, denominator)


def as_fraction(value: RatLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected a rational, got {type(value).__name__}")


@dataclass(frozen=True)
class Affine:
    """The law slope * x + intercept on one open interval."""

    slope: Fraction
    intercept: Fraction

    def __call__(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept


def _as_affine(seg) -> Affine:
    if isinstance(seg, Affine):
        return seg
    slope, intercept = seg
    return Affine(as_fraction(slope), as_fraction(intercept))


@dataclass(frozen=True)
class PWFn:
    """Canonical piecewise-affine function on [0, 1].

    Construct through `PWFn.build`, which canonicalises.  Direct
    construction of a non-canonical instance raises.
    """

    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]
    segments: tuple[Affine, ...]

    def __post_init__(self):
        pts, vals, segs = self.breakpoints, self.values, self.segments
        n = len(pts)
        if n < 2:
            raise PwfDomainError("need at least the breakpoints 0 and 1")
        if len(vals) != n:
            raise PwfDomainError(f"expected {n} point values, got {len(vals)}")
        if len(segs) != n - 1:
            raise PwfDomainError(f"expected {n - 1} segments, got {len(segs)}")
        if pts[0] != ZERO or pts[-1] != ONE:
            raise PwfDomainError("breakpoints must start at 0 and end at 1")
        for a, b in zip(pts, pts[1:]):
            if not a < b:
                raise PwfDomainError(
                    f"breakpoints must be strictly increasing, got {a} then {b}"
                )
        for v in vals:
            if not ZERO <= v <= ONE:
                raise PwfDomainError(f"point value {v} outside [0, 1]")
        for i, seg in enumerate(segs):
            for limit in (seg(pts[i]), seg(pts[i + 1])):
                if not ZERO <= limit <= ONE:
                    raise PwfDomainError(
                        f"segment {i} leaves [0, 1] on ({pts[i]}, {pts[i + 1]})"
                    )
        for i in range(1, n - 1):
            if segs[i - 1] == segs[i] and vals[i] == segs[i](pts[i]):
                raise PwfDomainError(
                    f"non-canonical: breakpoint {pts[i]} is removable"
                )

    @staticmethod
    def build(
        breakpoints: Sequence[RatLike],
        values: Sequence[RatLike],
        segments: Sequence,
    ) -> "PWFn":
        """Normalise inputs, drop removable breakpoints, construct."""
        pts = [as_fraction(p) for p in breakpoints]
        vals = [as_fraction(v) for v in values]
        segs = [_as_affine(s) for s in segments]
        if len(pts) < 2 or len(vals) != len(pts) or len(segs) != len(pts) - 1:
            raise PwfDomainError(
                f"inconsistent sizes: {len(pts)} breakpoints, "
                f"{len(vals)} values, {len(segs)} segments"
            )
        for a, b in zip(pts, pts[1:]):
            if not a < b:
                raise PwfDomainError(
                    f"breakpoints must be strictly increasing, got {a} then {b}"
                )
        keep_p = [pts[0]]
        keep_v = [vals[0]]
        keep_s = [segs[0]]
        for i in range(1, len(pts) - 1):
            nxt = segs[i]
            if keep_s[-1] == nxt and vals[i] == nxt(pts[i]):
                continue
            keep_p.append(pts[i])
            keep_v.append(vals[i])
            keep_s.append(nxt)
        keep_p.append(pts[-1])
        keep_v.append(vals[-1])
        return PWFn(tuple(keep_p), tuple(keep_v), tuple(keep_s))

    def __call__(self, x: RatLike) -> Fraction:
        x = as_fraction(x)
        if not ZERO <= x <= ONE:
            raise PwfDomainError(f"argument {x} outside [0, 1]")
        i = bisect_left(self.breakpoints, x)
        if i < len(self.breakpoints) and self.breakpoints[i] == x:
            return self.values[i]
        return self.segments[i - 1](x)


def _law_at(f: PWFn, x: Fraction) -> Affine:
    """Affine law of the open interval containing x (x not a breakpoint)."""
    return f.segments[bisect_left(f.breakpoints, x) - 1]


@lru_cache(maxsize=4096)
def _indicator_cached(a: Fraction, b: Fraction) -> PWFn:
    pts = sorted({ZERO, a, b, ONE})
    vals = [ONE if a <= p <= b else ZERO for p in pts]
    segs = [
        Affine(ZERO, ONE if a <= u and w <= b else ZERO)
        for u, w in zip(pts, pts[1:])
    ]
    return PWFn.build(pts, vals, segs)


def indicator(a: RatLike, b: RatLike) -> PWFn:
    """Characteristic function of the closed interval [a, b]."""
    a, b = as_fraction(a), as_fraction(b)
    if not ZERO <= a <= b <= ONE:
        raise PwfDomainError(f"need 0 <= a <= b <= 1, got a={a}, b={b}")
    return _indicator_cached(a, b)


def constant(c: RatLike) -> PWFn:
    c = as_fraction(c)
    return PWFn.build([ZERO, ONE], [c, c], [Affine(ZERO, c)])


def reflect(f: PWFn) -> PWFn:
    """The function x -> f(1 - x)."""
    pts = [ONE - p for p in reversed(f.breakpoints)]
    vals = list(reversed(f.values))
    segs = [
        Affine(-s.slope, s.slope + s.intercept) for s in reversed(f.segments)
    ]
    return PWFn.build(pts, vals, segs)


def combine_pointwise(f: PWFn, g: PWFn, mode: Literal["min", "max"]) -> PWFn:
    """Pointwise minimum or maximum, exact.

    Segments are split where the two affine laws cross inside a shared
    open interval, so the result is again piecewise-affine.
    """
    if mode == "min":
        is_min = True
    elif mode == "max":
        is_min = False
    else:
        raise ValueError(f"mode must be 'min' or 'max', got {mode!r}")
    pick = min if is_min else max

    fb, gb = f.breakpoints, g.breakpoints
    nf, ng = len(fb), len(gb)
    pts: list[Fraction] = []
    fvals: list[Optional[Fraction]] = []
    gvals: list[Optional[Fraction]] = []
    i = j = 0
    while i < nf or j < ng:
        if j >= ng or (i < nf and fb[i] <= gb[j]):
            p = fb[i]
        else:
            p = gb[j]
        pts.append(p)
        if i < nf and fb[i] == p:
            fvals.append(f.values[i])
            i += 1
        else:
            fvals.append(None)
        if j < ng and gb[j] == p:
            gvals.append(g.values[j])
            j += 1
        else:
            gvals.append(None)

    flaws: list[Affine] = []
    glaws: list[Affine] = []
    ki = kj = 0
    for idx in range(len(pts) - 1):
        u = pts[idx]
        while fb[ki + 1] <= u:
            ki += 1
        while gb[kj + 1] <= u:
            kj += 1
        flaws.append(f.segments[ki])
        glaws.append(g.segments[kj])

    # A point missing from one operand's breakpoints sits strictly inside
    # one of its segments, whose law also rules the preceding merged cell.
    for idx in range(1, len(pts) - 1):
        if fvals[idx] is None:
            fvals[idx] = flaws[idx - 1](pts[idx])
        if gvals[idx] is None:
            gvals[idx] = glaws[idx - 1](pts[idx])

    out_pts = [pts[0]]
    out_vals = [pick(fvals[0], gvals[0])]
    out_segs: list[Affine] = []
    for idx in range(len(pts) - 1):
        u, w = pts[idx], pts[idx + 1]
        lf, lg = flaws[idx], glaws[idx]
        du = lf(u) - lg(u)
        dw = lf(w) - lg(w)
        end_val = pick(fvals[idx + 1], gvals[idx + 1])
        if du != 0 and dw != 0 and (du < 0) != (dw < 0):
            cross = (lg.intercept - lf.intercept) / (lf.slope - lg.slope)
            before = lf if (du < 0) == is_min else lg
            after = lg if before is lf else lf
            out_pts.append(cross)
            out_vals.append(lf(cross))
            out_segs.append(before)
            out_pts.append(w)
            out_vals.append(end_val)
            out_segs.append(after)
            continue
        if du != 0:
            chosen = lf if (du < 0) == is_min else lg
        elif dw != 0:
            chosen = lf if (dw < 0) == is_min else lg
        else:
            chosen = lf
        out_pts.append(w)
        out_vals.append(end_val)
        out_segs.append(chosen)
    return PWFn.build(out_pts, out_vals, out_segs)


def sup_on(
    f: PWFn,
    lo: RatLike,
    hi: RatLike,
    closed_lo: bool = True,
    closed_hi: bool = True,
) -> Fraction:
    """Exact supremum of f over the interval from lo to hi.

    One-sided limits at open endpoints participate, so the supremum need
    not be attained.  A degenerate interval must be closed on both sides.
    """
    lo, hi = as_fraction(lo), as_fraction(hi)
    if not ZERO <= lo <= hi <= ONE:
        raise PwfDomainError(f"need 0 <= lo <= hi <= 1, got lo={lo}, hi={hi}")
    if lo == hi:
        if not (closed_lo and closed_hi):
            raise PwfDomainError("empty interval has no supremum")
        return f(lo)
    best = None

    def consider(v: Fraction) -> None:
        nonlocal best
        if best is None or v > best:
            best = v

    if closed_lo:
        consider(f(lo))
    if closed_hi:
        consider(f(hi))
    for p, v in zip(f.breakpoints, f.values):
        if lo < p < hi:
            consider(v)
    for i, seg in enumerate(f.segments):
        u = max(f.breakpoints[i], lo)
        w = min(f.breakpoints[i + 1], hi)
        if u < w:
            consider(seg(u))
            consider(seg(w))
    return best


def canonical_equal(f: PWFn, g: PWFn) -> bool:
    """Exact function equality (both sides are canonical by construction)."""
    return f == g


@dataclass(frozen=True)
class PwfDocument:
    """A parsed PWF text document: format version plus the payload."""

    version: str
    fn: PWFn


_TOKEN_RE = re.compile(r"\S+")
_SEG_RE = re.compile(r"\s*seg\s+(\d+):(.*)$")
_VEC_RE = {name: re.compile(rf"\s*{name}:(.*)$") for name in ("x", "v")}


def _tokens_with_columns(body: str) -> list[tuple[str, int]]:
    return [(m.group(0), m.start() + 1) for m in _TOKEN_RE.finditer(body)]


def _parse_vector(lineno: int, content: str, name: str) -> list[Fraction]:
    match = _VEC_RE[name].match(content)
    if match is None:
        raise PwfSyntaxError(f"expected '{name}: ...'", lineno)
    out = []
    offset = match.start(1)
    for token, col in _tokens_with_columns(match.group(1)):
        try:
            out.append(parse_rational(token))
        except ValueError as exc:
            raise PwfSyntaxError(str(exc), lineno, offset + col) from None
    if not out:
        raise PwfSyntaxError(f"'{name}:' line carries no entries", lineno)
    return out


def parse_pwf_document(text: Union[str, bytes]) -> PwfDocument:
    """Parse PWF v1 text.  '#' starts a comment, blank lines are skipped."""
    if isinstance(text, (bytes, bytearray)):
        text = bytes(text).decode("utf-8")
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if content.strip():
            rows.append((lineno, content))
    if not rows:
        raise PwfSyntaxError("empty document", 1)
    header_line, header = rows[0]
    if header.strip() != "pwf v1":
        raise PwfSyntaxError("expected header 'pwf v1'", header_line)
    if len(rows) < 3:
        raise PwfSyntaxError("missing 'x:' or 'v:' line", rows[-1][0])
    pts = _parse_vector(rows[1][0], rows[1][1], "x")
    vals = _parse_vector(rows[2][0], rows[2][1], "v")
    if len(vals) != len(pts):
        raise PwfDomainError(
            f"{len(pts)} breakpoints but {len(vals)} point values"
        )
    segs: list[Affine] = []
    for index, (lineno, content) in enumerate(rows[3:]):
        match = _SEG_RE.match(content)
        if match is None:
            raise PwfSyntaxError("expected 'seg i: slope intercept'", lineno)
        if int(match.group(1)) != index:
            raise PwfSyntaxError(f"expected segment index {index}", lineno)
        entries = _tokens_with_columns(match.group(2))
        if len(entries) != 2:
            raise PwfSyntaxError("segment needs exactly slope and intercept", lineno)
        offset = match.start(2)
        parsed = []
        for token, col in entries:
            try:
                parsed.append(parse_rational(token))
            except ValueError as exc:
                raise PwfSyntaxError(str(exc), lineno, offset + col) from None
        segs.append(Affine(parsed[0], parsed[1]))
    if len(segs) != len(pts) - 1:
        raise PwfDomainError(
            f"{len(pts)} breakpoints need {len(pts) - 1} segments, got {len(segs)}"
        )
    return PwfDocument("v1", PWFn.build(pts, vals, segs))


def parse_pwf(text: Union[str, bytes]) -> PWFn:
    return parse_pwf_document(text).fn


def serialize_pwf(f: PWFn) -> str:
    """Emit the canonical form in PWF v1 text, deterministically."""
    lines = [
        "pwf v1",
        "x: " + " ".join(str(p) for p in f.breakpoints),
        "v: " + " ".join(str(v) for v in f.values),
    ]
    for i, seg in enumerate(f.segments):
        lines.append(f"seg {i}: {seg.slope} {seg.intercept}")
    return "\n".join(lines) + "\n"

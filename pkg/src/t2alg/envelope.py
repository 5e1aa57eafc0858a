"""Directional supremum envelopes and the shape predicates built on them.

The left envelope at x is the supremum of f over [0, x]; the right
envelope takes [x, 1].  The weak variants exclude x itself (and fall back
to the boundary value of f at the end where the index set would be empty).
Envelopes of a piecewise-affine function are again piecewise-affine: a
single sweep carries the running supremum and splits a rising segment at
most once, where it crosses the carried level.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Literal

from .pwfn import (
    ONE,
    ZERO,
    Affine,
    PWFn,
    PwfDomainError,
    combine_pointwise,
    reflect,
    sup_on,
)


class EnvelopeKind(Enum):
    L = "L"
    R = "R"
    LW = "Lw"
    RW = "Rw"


def _left_sweep(f: PWFn, weak: bool) -> PWFn:
    pts: list[Fraction] = [ZERO]
    vals: list[Fraction] = [f.values[0]]
    segs: list[Affine] = []
    running = f.values[0]
    for i, seg in enumerate(f.segments):
        u, w = f.breakpoints[i], f.breakpoints[i + 1]
        left_limit, right_limit = seg(u), seg(w)
        if seg.slope > 0 and running < right_limit:
            if running <= left_limit:
                segs.append(seg)
            else:
                crossing = (running - seg.intercept) / seg.slope
                segs.append(Affine(ZERO, running))
                pts.append(crossing)
                vals.append(running)
                segs.append(seg)
            running = right_limit
        else:
            level = running if running > left_limit else left_limit
            segs.append(Affine(ZERO, level))
            running = level
        v = f.values[i + 1]
        pts.append(w)
        vals.append(running if weak else max(running, v))
        if v > running:
            running = v
    return PWFn.build(pts, vals, segs)


@lru_cache(maxsize=32768)
def _envelope_cached(f: PWFn, kind: EnvelopeKind) -> PWFn:
    if kind is EnvelopeKind.L:
        return _left_sweep(f, weak=False)
    if kind is EnvelopeKind.LW:
        return _left_sweep(f, weak=True)
    if kind is EnvelopeKind.R:
        return reflect(_left_sweep(reflect(f), weak=False))
    return reflect(_left_sweep(reflect(f), weak=True))


def envelope(f: PWFn, kind: EnvelopeKind | str) -> PWFn:
    """Directional supremum envelope of f."""
    if isinstance(kind, str):
        kind = EnvelopeKind(kind)
    return _envelope_cached(f, kind)


@lru_cache(maxsize=32768)
def is_normal(f: PWFn) -> bool:
    """Supremum over [0, 1] equals 1 (attainment not required)."""
    return sup_on(f, ZERO, ONE) == ONE


@lru_cache(maxsize=32768)
def is_convex(f: PWFn) -> bool:
    """f equals the pointwise minimum of its own two envelopes."""
    both = combine_pointwise(
        envelope(f, EnvelopeKind.L), envelope(f, EnvelopeKind.R), "min"
    )
    return both == f


def require_member(f: PWFn, role: str = "operand") -> None:
    """Raise PwfDomainError unless f is normal and convex."""
    if not is_normal(f):
        raise PwfDomainError(f"{role} is not normal")
    if not is_convex(f):
        raise PwfDomainError(f"{role} is not convex")


def _first_level_one(rising: PWFn) -> Fraction:
    """Leftmost x where a nondecreasing function reaches 1 (as an infimum)."""
    if rising.values[0] == ONE:
        return ZERO
    for i, seg in enumerate(rising.segments):
        u, w = rising.breakpoints[i], rising.breakpoints[i + 1]
        if seg.slope == 0:
            if seg.intercept == ONE:
                return u
        elif seg.slope > 0:
            crossing = (ONE - seg.intercept) / seg.slope
            if u < crossing < w:
                return crossing
        if rising.values[i + 1] == ONE:
            return w
    raise PwfDomainError("function never reaches level 1")


def plateau(f: PWFn, side: Literal["left", "right"]) -> Fraction:
    """Threshold where the directional envelope holds level 1.

    'left' gives the infimum of the set where the left envelope is 1,
    'right' the supremum of the set where the right envelope is 1.
    Requires a normal function, which makes both sets non-empty.
    """
    if not is_normal(f):
        raise PwfDomainError("plateau thresholds require a normal function")
    if side == "left":
        return _first_level_one(envelope(f, EnvelopeKind.L))
    if side == "right":
        return ONE - _first_level_one(envelope(reflect(f), EnvelopeKind.L))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")

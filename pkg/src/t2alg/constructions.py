"""Two constructed connectives that separate the operation hierarchy.

star keeps the restricted monotonicity axioms but breaks one of the
unrestricted ones; diamond satisfies the classical axioms yet fails to
preserve singleton indicators.  Both have closed forms assembled from
plateau thresholds and one-sided envelopes, and both expose their
envelopes in closed form as well, so tests can compare the direct and
the recomputed routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .envelope import envelope, plateau, require_member
from .pwfn import (
    ONE,
    ZERO,
    Affine,
    PWFn,
    PwfDomainError,
    _law_at,
    canonical_equal,
    combine_pointwise,
    constant,
    indicator,
)


def unit_singleton() -> PWFn:
    """The neutral element of both connectives: 1 at x = 1, else 0."""
    return indicator(ONE, ONE)


def is_unit_singleton(f: PWFn) -> bool:
    return canonical_equal(f, unit_singleton())


def _assemble(
    prefix: Optional[PWFn], eta: Fraction, xi: Fraction, xi_val: Fraction
) -> PWFn:
    """Build  prefix on [0,eta) | 1 on [eta,xi) | xi_val at xi | 0 on (xi,1].

    A None prefix stands for an empty first band (eta = 0).
    """
    cuts = {ZERO, ONE, eta, xi}
    if prefix is not None:
        cuts.update(p for p in prefix.breakpoints if p < eta)
    pts = sorted(cuts)

    def value_at(x: Fraction) -> Fraction:
        if x < eta:
            return prefix(x)
        if x < xi:
            return ONE
        if x == xi:
            return xi_val
        return ZERO

    vals = [value_at(p) for p in pts]
    segs: list[Affine] = []
    for u, w in zip(pts, pts[1:]):
        if w <= eta:
            segs.append(_law_at(prefix, (u + w) / 2))
        elif w <= xi:
            segs.append(Affine(ZERO, ONE))
        else:
            segs.append(Affine(ZERO, ZERO))
    return PWFn.build(pts, vals, segs)


def _thresholds(f: PWFn, g: PWFn) -> tuple[Fraction, Fraction]:
    eta = min(plateau(f, "left"), plateau(g, "left"))
    xi = min(plateau(f, "right"), plateau(g, "right"))
    return eta, xi


def _right_value(f: PWFn, g: PWFn, xi: Fraction) -> Fraction:
    return min(envelope(f, "R")(xi), envelope(g, "R")(xi))


@dataclass(frozen=True)
class StarResult:
    """star output together with the two thresholds it was built from."""

    result: PWFn
    eta: Fraction
    xi: Fraction


def star(f: PWFn, g: PWFn) -> StarResult:
    """Plateau-intersection connective.

    The output is the smaller left envelope band followed by a unit band
    between the combined plateau thresholds, a single right-envelope
    value at the upper threshold, then zero.
    """
    require_member(f, "left operand")
    require_member(g, "right operand")
    eta, xi = _thresholds(f, g)
    if is_unit_singleton(f):
        return StarResult(g, eta, xi)
    if is_unit_singleton(g):
        return StarResult(f, eta, xi)
    prefix = combine_pointwise(envelope(f, "L"), envelope(g, "L"), "max")
    xi_val = _right_value(f, g, xi)
    return StarResult(_assemble(prefix, eta, xi, xi_val), eta, xi)


def diamond(f: PWFn, g: PWFn) -> PWFn:
    """Left-saturating connective: unit up to the upper threshold, then zero."""
    require_member(f, "left operand")
    require_member(g, "right operand")
    if is_unit_singleton(f):
        return g
    if is_unit_singleton(g):
        return f
    _, xi = _thresholds(f, g)
    return _assemble(None, ZERO, xi, _right_value(f, g, xi))


def _reject_unit(f: PWFn, g: PWFn) -> None:
    if is_unit_singleton(f) or is_unit_singleton(g):
        raise PwfDomainError(
            "closed-form envelopes are not defined for the unit singleton"
        )


def star_envelopes(f: PWFn, g: PWFn) -> tuple[PWFn, PWFn]:
    """Closed-form (L, R) envelopes of star(f, g).result, computed directly."""
    require_member(f, "left operand")
    require_member(g, "right operand")
    _reject_unit(f, g)
    eta, xi = _thresholds(f, g)
    prefix = combine_pointwise(envelope(f, "L"), envelope(g, "L"), "max")
    left = _assemble(prefix, eta, ONE, ONE)
    right = _assemble(None, ZERO, xi, _right_value(f, g, xi))
    return left, right


def diamond_envelopes(f: PWFn, g: PWFn) -> tuple[PWFn, PWFn]:
    """Closed-form (L, R) envelopes of diamond(f, g), computed directly."""
    require_member(f, "left operand")
    require_member(g, "right operand")
    _reject_unit(f, g)
    _, xi = _thresholds(f, g)
    right = _assemble(None, ZERO, xi, _right_value(f, g, xi))
    return constant(ONE), right

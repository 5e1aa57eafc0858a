"""Lattice structure on normal convex membership functions.

Meet and join are the min/max convolutions of two functions.  On normal
convex operands they have closed forms built from pointwise max and the
one-sided envelopes, which is what this module computes.  The partial
order is "f <= g iff meet(f, g) == f", with two alternative decision
procedures kept callable side by side so they can cross-check each
other.
"""

from __future__ import annotations

from functools import lru_cache

from .envelope import envelope, require_member
from .pwfn import PWFn, canonical_equal, combine_pointwise


def _require_normal_convex(f: PWFn, role: str) -> None:
    require_member(f, f"{role} operand")


@lru_cache(maxsize=32768)
def meet(f: PWFn, g: PWFn) -> PWFn:
    """Min-convolution of two normal convex functions (closed form)."""
    _require_normal_convex(f, "left")
    _require_normal_convex(g, "right")
    upper = combine_pointwise(f, g, "max")
    cap = combine_pointwise(envelope(f, "R"), envelope(g, "R"), "min")
    return combine_pointwise(upper, cap, "min")


@lru_cache(maxsize=32768)
def join(f: PWFn, g: PWFn) -> PWFn:
    """Max-convolution of two normal convex functions (closed form)."""
    _require_normal_convex(f, "left")
    _require_normal_convex(g, "right")
    upper = combine_pointwise(f, g, "max")
    cap = combine_pointwise(envelope(f, "L"), envelope(g, "L"), "min")
    return combine_pointwise(upper, cap, "min")


def negate(f: PWFn) -> PWFn:
    """Involutive negation: reflect the function about x = 1/2."""
    from .pwfn import reflect

    return reflect(f)


LEQ_METHODS = ("meet_def", "join_def", "envelope")


def leq(f: PWFn, g: PWFn, method: str = "meet_def") -> bool:
    """Decide f <= g in the lattice order.

    meet_def:   meet(f, g) == f          (the definition)
    join_def:   join(f, g) == g          (equivalent by absorption)
    envelope:   g^L <= f^L and f^R <= g^R pointwise; valid only for
                normal convex operands and rejected otherwise.
    """
    if method == "meet_def":
        return canonical_equal(meet(f, g), f)
    if method == "join_def":
        return canonical_equal(join(f, g), g)
    if method == "envelope":
        _require_normal_convex(f, "left")
        _require_normal_convex(g, "right")
        fl = envelope(f, "L")
        gl = envelope(g, "L")
        fr = envelope(f, "R")
        gr = envelope(g, "R")
        return pointwise_leq(gl, fl) and pointwise_leq(fr, gr)
    raise ValueError(f"unknown leq method {method!r} (known: {', '.join(LEQ_METHODS)})")


def pointwise_leq(f: PWFn, g: PWFn) -> bool:
    """True when f(x) <= g(x) for every x in [0, 1]."""
    return canonical_equal(combine_pointwise(f, g, "max"), g)

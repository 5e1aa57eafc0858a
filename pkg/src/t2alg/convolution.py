"""Parametric sup-convolutions of scalar connectives, with three engines.

The lifted operation is (f op g)(x) = sup { star(f(y), g(z)) : combiner(y, z) = x }
where the combiner runs over a scalar t-norm (direction "norm") or
t-conorm (direction "conorm").  The general supremum over a real
constraint set is not computable exactly for arbitrary combiners, so
exact claims are restricted to three engines:

  exact_min   combiner is min/max and star is min; the convolution
              degenerates to the lattice meet/join closed forms.
  indicator   both operands are interval indicators and the combiner is
              continuous; the image of a product of intervals under a
              continuous monotone map is again an interval.
  grid        combiner grid-closed for denominator N and both operands'
              breakpoints on the grid; brute force over all grid pairs.

The grid engine returns the grid restriction: a function carrying the
exact supremum at each grid point and zero on the open cells between
them (sup over an empty constraint set is 0 by convention).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

from .pwfn import (
    ONE,
    ZERO,
    Affine,
    PWFn,
    PwfDomainError,
    canonical_equal,
    indicator,
)
from .scalar_ops import ScalarOp
from .truth_lattice import join, meet

Direction = Literal["norm", "conorm"]
ENGINES = ("exact_min", "indicator", "grid")


def star_has_tnorm_corners(op: ScalarOp) -> bool:
    """Corner behaviour needed for indicator images to stay indicators."""
    return (
        op(ZERO, ZERO) == ZERO
        and op(ZERO, ONE) == ZERO
        and op(ONE, ZERO) == ZERO
        and op(ONE, ONE) == ONE
    )


@dataclass(frozen=True)
class ConvSpec:
    direction: Direction
    combiner: ScalarOp
    star: ScalarOp
    engine: str
    grid_n: Optional[int] = None

    def __post_init__(self):
        if self.direction not in ("norm", "conorm"):
            raise PwfDomainError(f"unknown direction {self.direction!r}")
        if self.engine not in ENGINES:
            raise PwfDomainError(f"unknown engine {self.engine!r}")
        wanted = "t-norm" if self.direction == "norm" else "t-conorm"
        if self.combiner.kind != wanted:
            raise PwfDomainError(
                f"direction {self.direction!r} needs a {wanted} combiner, "
                f"got {self.combiner.name} ({self.combiner.kind})"
            )
        if self.engine == "exact_min":
            exact_name = "min" if self.direction == "norm" else "max"
            if self.combiner.name != exact_name or self.star.name != "min":
                raise PwfDomainError(
                    "exact_min engine needs combiner "
                    f"{exact_name} and star min, got "
                    f"{self.combiner.name}/{self.star.name}"
                )
        elif self.engine == "indicator":
            if not self.combiner.continuous:
                raise PwfDomainError(
                    f"indicator engine needs a continuous combiner, "
                    f"got {self.combiner.name}"
                )
            if not star_has_tnorm_corners(self.star):
                raise PwfDomainError(
                    f"indicator engine needs star with t-norm corner values, "
                    f"got {self.star.name}"
                )
        else:
            if self.grid_n is None or self.grid_n < 1:
                raise PwfDomainError("grid engine needs a positive grid_n")
            if not self.combiner.grid_closed_for(self.grid_n):
                raise PwfDomainError(
                    f"combiner {self.combiner.name} is not grid-closed "
                    f"for denominator {self.grid_n}"
                )
        if self.engine != "grid" and self.grid_n is not None:
            raise PwfDomainError(f"engine {self.engine} takes no grid_n")


@dataclass(frozen=True)
class GridValue:
    """Exact convolution value at one grid point.

    attained is False when no operand pair maps to the point; the value
    is then the empty-sup convention 0.
    """

    x: Fraction
    value: Fraction
    attained: bool


def as_interval_indicator(f: PWFn) -> Optional[tuple[Fraction, Fraction]]:
    """The endpoints (a, b) when f equals the indicator of [a, b], else None."""
    hits = [p for p, v in zip(f.breakpoints, f.values) if v == ONE]
    if not hits:
        return None
    a, b = hits[0], hits[-1]
    if canonical_equal(f, indicator(a, b)):
        return (a, b)
    return None


_INDEX_TABLES: dict[tuple[str, int], tuple[tuple[int, ...], ...]] = {}


def _combiner_index_table(op: ScalarOp, n: int) -> tuple[tuple[int, ...], ...]:
    key = (op.name, n)
    table = _INDEX_TABLES.get(key)
    if table is not None:
        return table
    xs = [Fraction(i, n) for i in range(n + 1)]
    rows = []
    for x in xs:
        row = []
        for y in xs:
            v = op(x, y) * n
            if v.denominator != 1:
                raise PwfDomainError(
                    f"{op.name}({x}, {y}) leaves the denominator-{n} grid"
                )
            row.append(int(v))
        rows.append(tuple(row))
    table = tuple(rows)
    _INDEX_TABLES[key] = table
    return table


def _require_on_grid(f: PWFn, n: int, role: str) -> None:
    for p in f.breakpoints:
        if (p * n).denominator != 1:
            raise PwfDomainError(
                f"{role} breakpoint {p} is off the denominator-{n} grid"
            )


def _grid_values(f: PWFn, g: PWFn, spec: ConvSpec) -> tuple[GridValue, ...]:
    n = spec.grid_n
    _require_on_grid(f, n, "left operand")
    _require_on_grid(g, n, "right operand")
    xs = [Fraction(k, n) for k in range(n + 1)]
    fv = [f(x) for x in xs]
    gv = [g(x) for x in xs]
    idx = _combiner_index_table(spec.combiner, n)
    star = spec.star
    best: list[Optional[Fraction]] = [None] * (n + 1)
    for i in range(n + 1):
        row = idx[i]
        fi = fv[i]
        for j in range(n + 1):
            k = row[j]
            v = star(fi, gv[j])
            if best[k] is None or v > best[k]:
                best[k] = v
    return tuple(
        GridValue(xs[k], best[k] if best[k] is not None else ZERO, best[k] is not None)
        for k in range(n + 1)
    )


def grid_oracle(f: PWFn, g: PWFn, spec: ConvSpec) -> tuple[GridValue, ...]:
    """Brute-force the defining supremum over all grid pairs.

    Independent of every closed form in the package: it only evaluates
    the two operands and the scalar ops.
    """
    if spec.engine != "grid":
        raise PwfDomainError("grid_oracle needs a grid-engine spec")
    return _grid_values(f, g, spec)


def _spike(values: tuple[GridValue, ...]) -> PWFn:
    pts = [gv.x for gv in values]
    vals = [gv.value for gv in values]
    segs = [Affine(ZERO, ZERO)] * (len(pts) - 1)
    return PWFn.build(pts, vals, segs)


def convolve(f: PWFn, g: PWFn, spec: ConvSpec) -> PWFn:
    """Lift the scalar pair (combiner, star) to membership functions."""
    if spec.engine == "exact_min":
        return meet(f, g) if spec.direction == "norm" else join(f, g)
    if spec.engine == "indicator":
        fi = as_interval_indicator(f)
        gi = as_interval_indicator(g)
        if fi is None:
            raise PwfDomainError("indicator engine: left operand is not 1_[a,b]")
        if gi is None:
            raise PwfDomainError("indicator engine: right operand is not 1_[a,b]")
        (a1, b1), (a2, b2) = fi, gi
        return indicator(spec.combiner(a1, a2), spec.combiner(b1, b2))
    return _spike(_grid_values(f, g, spec))

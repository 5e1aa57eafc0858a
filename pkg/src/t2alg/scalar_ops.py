"""Built-in scalar connectives on [0, 1] and evidence-grade scanners.

Every operation works on exact rationals.  Grid closure means the
operation maps {i/N} x {i/N} into {j/N}; the flag claims this for every N
and is verified exhaustively for all N up to 64 the first time an
operation is materialised.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Literal, Optional

from .pwfn import ONE, ZERO

Kind = Literal["t-norm", "t-conorm"]


@dataclass(frozen=True)
class ScalarOp:
    name: str
    kind: Kind
    continuous: bool
    grid_closed: bool
    fn: Callable[[Fraction, Fraction], Fraction]

    def __call__(self, x: Fraction, y: Fraction) -> Fraction:
        return self.fn(x, y)

    def grid_closed_for(self, n: int) -> bool:
        return self.grid_closed


def _min(x: Fraction, y: Fraction) -> Fraction:
    return x if x <= y else y


def _max(x: Fraction, y: Fraction) -> Fraction:
    return x if x >= y else y


def _product(x: Fraction, y: Fraction) -> Fraction:
    return x * y


def _prob_sum(x: Fraction, y: Fraction) -> Fraction:
    return x + y - x * y


def _lukasiewicz(x: Fraction, y: Fraction) -> Fraction:
    s = x + y - ONE
    return s if s > ZERO else ZERO


def _bounded_sum(x: Fraction, y: Fraction) -> Fraction:
    s = x + y
    return s if s < ONE else ONE


def _drastic_product(x: Fraction, y: Fraction) -> Fraction:
    if x == ONE:
        return y
    if y == ONE:
        return x
    return ZERO


def _drastic_sum(x: Fraction, y: Fraction) -> Fraction:
    if x == ZERO:
        return y
    if y == ZERO:
        return x
    return ONE


def _nilpotent_min(x: Fraction, y: Fraction) -> Fraction:
    if x + y > ONE:
        return x if x <= y else y
    return ZERO


_SPECS: dict[str, tuple[Kind, bool, bool, Callable]] = {
    "min": ("t-norm", True, True, _min),
    "max": ("t-conorm", True, True, _max),
    "product": ("t-norm", True, False, _product),
    "prob_sum": ("t-conorm", True, False, _prob_sum),
    "lukasiewicz": ("t-norm", True, True, _lukasiewicz),
    "bounded_sum": ("t-conorm", True, True, _bounded_sum),
    "drastic_product": ("t-norm", False, True, _drastic_product),
    "drastic_sum": ("t-conorm", False, True, _drastic_sum),
    "nilpotent_min": ("t-norm", False, True, _nilpotent_min),
}

BUILTIN_NAMES = tuple(sorted(_SPECS))

_GRID_VERIFY_LIMIT = 64
_registry: dict[str, ScalarOp] = {}


def _verify_grid_closure(op: ScalarOp, max_n: int) -> None:
    for n in range(1, max_n + 1):
        grid = [Fraction(i, n) for i in range(n + 1)]
        for x in grid:
            for y in grid:
                r = op(x, y)
                if n % r.denominator != 0:
                    raise PwfGridClaimError(
                        f"{op.name} claims grid closure but maps "
                        f"({x}, {y}) to {r} off the denominator-{n} grid"
                    )


class PwfGridClaimError(AssertionError):
    """A declared grid-closure claim failed its registration check."""


def builtin(name: str) -> ScalarOp:
    """Look up a built-in scalar operation by its stable identifier."""
    cached = _registry.get(name)
    if cached is not None:
        return cached
    spec = _SPECS.get(name)
    if spec is None:
        known = ", ".join(BUILTIN_NAMES)
        raise ValueError(f"unknown scalar operation {name!r} (known: {known})")
    kind, continuous, grid_closed, fn = spec
    op = ScalarOp(name, kind, continuous, grid_closed, fn)
    if grid_closed:
        _verify_grid_closure(op, _GRID_VERIFY_LIMIT)
    _registry[name] = op
    return op


@dataclass(frozen=True)
class ScalarAxiomCheck:
    axiom: str
    ok: bool
    witness: Optional[tuple]


@dataclass(frozen=True)
class ScalarAxiomReport:
    op_name: str
    kind: Kind
    grid_n: int
    checks: tuple[ScalarAxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> tuple[ScalarAxiomCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def _assoc_witness(op: ScalarOp, xs: list[Fraction], table) -> Optional[tuple]:
    n1 = len(xs)
    if op.grid_closed_for(n1 - 1):
        # Grid-closed results re-index into the grid, so the whole triple
        # scan runs on integer lookups.
        scale = n1 - 1
        idx = [[int(v * scale) for v in row] for row in table]
        for i in range(n1):
            row_i = idx[i]
            for j in range(n1):
                ij = row_i[j]
                row_ij = idx[ij]
                row_j = idx[j]
                for k in range(n1):
                    if row_ij[k] != row_i[row_j[k]]:
                        return (
                            xs[i],
                            xs[j],
                            xs[k],
                            Fraction(row_ij[k], scale),
                            Fraction(row_i[row_j[k]], scale),
                        )
        return None
    for i in range(n1):
        for j in range(n1):
            tij = table[i][j]
            row_j = table[j]
            for k in range(n1):
                lhs = op(tij, xs[k])
                rhs = op(xs[i], row_j[k])
                if lhs != rhs:
                    return (xs[i], xs[j], xs[k], lhs, rhs)
    return None


def check_scalar_axioms(op: ScalarOp, kind: Kind, grid_n: int) -> ScalarAxiomReport:
    """Exhaustive axiom scan on the denominator-grid_n grid.

    Checks commutativity, associativity, monotonicity, the neutral
    element for the requested kind, and the boundary law (the extreme
    output occurs only at the extreme input pair).
    """
    if grid_n < 2:
        raise ValueError(f"grid_n must be at least 2, got {grid_n}")
    if kind not in ("t-norm", "t-conorm"):
        raise ValueError(f"kind must be 't-norm' or 't-conorm', got {kind!r}")
    xs = [Fraction(i, grid_n) for i in range(grid_n + 1)]
    n1 = grid_n + 1
    table = [[op(x, y) for y in xs] for x in xs]
    checks: list[ScalarAxiomCheck] = []

    witness = None
    for i in range(n1):
        for j in range(i + 1, n1):
            if table[i][j] != table[j][i]:
                witness = (xs[i], xs[j], table[i][j], table[j][i])
                break
        if witness:
            break
    checks.append(ScalarAxiomCheck("T1-commutative", witness is None, witness))

    witness = _assoc_witness(op, xs, table)
    checks.append(ScalarAxiomCheck("T2-associative", witness is None, witness))

    witness = None
    for i in range(n1):
        for j in range(n1):
            if j + 1 < n1 and table[i][j] > table[i][j + 1]:
                witness = (xs[i], xs[j], xs[j + 1], table[i][j], table[i][j + 1])
                break
            if i + 1 < n1 and table[i][j] > table[i + 1][j]:
                witness = (xs[i], xs[i + 1], xs[j], table[i][j], table[i + 1][j])
                break
        if witness:
            break
    checks.append(ScalarAxiomCheck("T3-increasing", witness is None, witness))

    neutral_index = grid_n if kind == "t-norm" else 0
    neutral_label = "T4-neutral-1" if kind == "t-norm" else "T4-neutral-0"
    witness = None
    for j in range(n1):
        if table[neutral_index][j] != xs[j]:
            witness = (xs[neutral_index], xs[j], table[neutral_index][j])
            break
        if table[j][neutral_index] != xs[j]:
            witness = (xs[j], xs[neutral_index], table[j][neutral_index])
            break
    checks.append(ScalarAxiomCheck(neutral_label, witness is None, witness))

    extreme = ONE if kind == "t-norm" else ZERO
    extreme_index = grid_n if kind == "t-norm" else 0
    witness = None
    for i in range(n1):
        for j in range(n1):
            hit = table[i][j] == extreme
            only_at_corner = i == extreme_index and j == extreme_index
            if hit != only_at_corner:
                witness = (xs[i], xs[j], table[i][j])
                break
        if witness:
            break
    checks.append(ScalarAxiomCheck("boundary", witness is None, witness))

    return ScalarAxiomReport(op.name, kind, grid_n, tuple(checks))


@dataclass(frozen=True)
class SectionScan:
    """Evidence record from a one-variable continuity scan."""

    op_name: str
    b: Fraction
    grid_n: int
    continuous_on_grid: bool
    jumps: tuple[tuple[Fraction, Fraction, Fraction, Fraction], ...]


_LIPSCHITZ_FACTOR = 2


def section_continuity_scan(op: ScalarOp, b: Fraction, grid_n: int) -> SectionScan:
    """Scan x -> op(x, b) for jumps larger than 2/grid_n between neighbours.

    Heuristic evidence only: it can miss discontinuities between grid
    points and can flag very steep continuous sections.
    """
    if grid_n < 8:
        raise ValueError(f"grid_n must be at least 8, got {grid_n}")
    if not ZERO <= b <= ONE:
        raise ValueError(f"section point {b} outside [0, 1]")
    tolerance = Fraction(_LIPSCHITZ_FACTOR, grid_n)
    xs = [Fraction(i, grid_n) for i in range(grid_n + 1)]
    vals = [op(x, b) for x in xs]
    jumps = []
    for i in range(grid_n):
        delta = vals[i + 1] - vals[i]
        if delta < 0:
            delta = -delta
        if delta > tolerance:
            jumps.append((xs[i], xs[i + 1], vals[i], vals[i + 1]))
    return SectionScan(op.name, b, grid_n, not jumps, tuple(jumps))

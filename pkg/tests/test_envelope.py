"""Envelope sweeps, shape predicates, and plateau thresholds."""

from fractions import Fraction

import pytest

from t2alg.envelope import (
    EnvelopeKind,
    envelope,
    is_convex,
    is_normal,
    plateau,
    require_member,
)
from t2alg.axiom_lab import GenConfig, gen_normal_convex
from t2alg.pwfn import (
    ONE,
    ZERO,
    Affine,
    PWFn,
    PwfDomainError,
    canonical_equal,
    combine_pointwise,
    constant,
    reflect,
)

from _support import convex_by_triple_scan, load_fixture, make_bimodal, scale_values

F = Fraction
HALF = F(1, 2)


def _pts_with_mids(*fns):
    pts = set()
    for fn in fns:
        pts.update(fn.breakpoints)
    base = sorted(pts)
    mids = [(u + w) / 2 for u, w in zip(base, base[1:])]
    return sorted(base + mids)


def test_left_envelope_of_descending_ramp():
    g = load_fixture("g")
    expected = PWFn.build(
        (ZERO, HALF, ONE),
        (ZERO, ZERO, ONE),
        (Affine(ZERO, ZERO), Affine(ZERO, ONE)),
    )
    assert canonical_equal(envelope(g, "L"), expected)


def test_right_envelope_of_descending_ramp():
    g = load_fixture("g")
    expected = PWFn.build(
        (ZERO, HALF, ONE),
        (ONE, ONE, ZERO),
        (Affine(ZERO, ONE), Affine(F(-2), F(2))),
    )
    assert canonical_equal(envelope(g, "R"), expected)


def test_envelopes_of_spike():
    f = load_fixture("f")
    left = PWFn.build(
        (ZERO, F(3, 4), ONE),
        (ZERO, ONE, ONE),
        (Affine(ZERO, ZERO), Affine(ZERO, ONE)),
    )
    right = PWFn.build(
        (ZERO, F(3, 4), ONE),
        (ONE, ONE, ZERO),
        (Affine(ZERO, ONE), Affine(ZERO, ZERO)),
    )
    assert canonical_equal(envelope(f, EnvelopeKind.L), left)
    assert canonical_equal(envelope(f, EnvelopeKind.R), right)


def test_weak_envelopes_exclude_the_point():
    f = load_fixture("f")
    x = F(3, 4)
    assert envelope(f, "L")(x) == ONE
    assert envelope(f, "Lw")(x) == ZERO
    assert envelope(f, "R")(x) == ONE
    assert envelope(f, "Rw")(x) == ZERO
    # away from the spike the variants agree
    for probe in (ZERO, HALF, F(7, 8), ONE):
        assert envelope(f, "Lw")(probe) == envelope(f, "L")(probe)


def test_weak_envelope_boundary_falls_back_to_f():
    h = load_fixture("h")
    assert envelope(h, "Lw")(ZERO) == h(ZERO)
    assert envelope(h, "Rw")(ONE) == h(ONE)


def test_identity_ramp_envelopes():
    h = load_fixture("h")
    assert canonical_equal(envelope(h, "L"), h)
    assert canonical_equal(envelope(h, "R"), constant(ONE))


def _corpus(count=120):
    cfg = GenConfig(seed=11)
    out = []
    for i in range(count):
        f = gen_normal_convex(cfg, ("env", i))
        out.append(f)
        if i % 3 == 0:
            out.append(scale_values(f, F(2, 3)))
        if i % 4 == 0:
            bim = make_bimodal(gen_normal_convex(cfg, ("env", i), step_only=True))
            if bim is not None:
                out.append(bim)
    return out


def test_envelope_dominates_and_is_monotone():
    for fn in _corpus(60):
        left = envelope(fn, "L")
        right = envelope(fn, "R")
        xs = _pts_with_mids(fn, left, right)
        prev = None
        for x in xs:
            assert left(x) >= fn(x)
            assert right(x) >= fn(x)
            if prev is not None:
                assert left(x) >= left(prev)
                assert right(x) <= right(prev)
            prev = x


def test_envelope_idempotence():
    for fn in _corpus(60):
        left = envelope(fn, "L")
        right = envelope(fn, "R")
        assert canonical_equal(envelope(left, "L"), left)
        assert canonical_equal(envelope(right, "R"), right)


def test_envelope_reflect_conjugation():
    for fn in _corpus(60):
        assert canonical_equal(
            envelope(reflect(fn), "L"), reflect(envelope(fn, "R"))
        )
        assert canonical_equal(
            envelope(reflect(fn), "Lw"), reflect(envelope(fn, "Rw"))
        )


def test_is_normal():
    assert is_normal(load_fixture("f"))
    assert is_normal(load_fixture("g"))
    assert is_normal(load_fixture("h"))
    assert not is_normal(constant(HALF))
    assert not is_normal(scale_values(load_fixture("h"), F(3, 4)))


def test_is_convex_on_fixtures():
    for name in ("f", "g", "h"):
        assert is_convex(load_fixture(name))
    bimodal = PWFn.build(
        (ZERO, F(1, 4), HALF, F(3, 4), ONE),
        (ZERO, ONE, ZERO, ONE, ZERO),
        (Affine(ZERO, ZERO),) * 4,
    )
    assert not is_convex(bimodal)


def test_is_convex_agrees_with_triple_scan_oracle():
    cfg = GenConfig(seed=23)
    checked_nonconvex = 0
    for i in range(120):
        step = gen_normal_convex(cfg, ("scan", i), step_only=True)
        assert convex_by_triple_scan(step), "generator produced a non-convex step"
        assert is_convex(step)
        bad = make_bimodal(step)
        if bad is not None:
            checked_nonconvex += 1
            assert not convex_by_triple_scan(bad)
            assert not is_convex(bad)
    assert checked_nonconvex >= 30


def test_require_member_messages():
    require_member(load_fixture("g"))
    with pytest.raises(PwfDomainError, match="not normal"):
        require_member(constant(HALF))
    bimodal = PWFn.build(
        (ZERO, F(1, 4), HALF, F(3, 4), ONE),
        (ZERO, ONE, ZERO, ONE, ZERO),
        (Affine(ZERO, ZERO),) * 4,
    )
    with pytest.raises(PwfDomainError, match="not convex"):
        require_member(bimodal)


def test_plateau_fixture_values():
    f = load_fixture("f")
    g = load_fixture("g")
    h = load_fixture("h")
    assert plateau(f, "left") == F(3, 4)
    assert plateau(f, "right") == F(3, 4)
    assert plateau(g, "left") == HALF
    assert plateau(g, "right") == HALF
    assert plateau(h, "left") == ONE
    assert plateau(h, "right") == ONE
    box = PWFn.build(
        (ZERO, F(1, 4), HALF, ONE),
        (ZERO, ONE, ONE, ZERO),
        (Affine(ZERO, ZERO), Affine(ZERO, ONE), Affine(ZERO, ZERO)),
    )
    assert plateau(box, "left") == F(1, 4)
    assert plateau(box, "right") == HALF


def test_plateau_of_non_attained_supremum():
    ramp = PWFn.build(
        (ZERO, HALF, ONE),
        (ZERO, ZERO, ZERO),
        (Affine(F(2), ZERO), Affine(ZERO, ZERO)),
    )
    assert is_normal(ramp)
    assert plateau(ramp, "left") == HALF
    assert plateau(ramp, "right") == HALF
    # the threshold value itself is not at level 1
    assert envelope(ramp, "R")(HALF) == ZERO


def test_plateau_requires_normal_input():
    with pytest.raises(PwfDomainError):
        plateau(constant(HALF), "left")
    with pytest.raises(ValueError):
        plateau(load_fixture("h"), "up")


def test_plateau_consistency_on_corpus():
    cfg = GenConfig(seed=31)
    for i in range(80):
        fn = gen_normal_convex(cfg, ("plat", i))
        eta = plateau(fn, "left")
        xi = plateau(fn, "right")
        assert ZERO <= eta <= xi <= ONE
        left = envelope(fn, "L")
        if eta > ZERO:
            assert left((eta) / 2) < ONE
        if eta < ONE:
            assert left(eta + (ONE - eta) / 2) == ONE

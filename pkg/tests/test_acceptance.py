"""Acceptance gate: eight end-to-end criteria over the whole package.

Each test prints exactly one [OK]/[FAIL] line (straight to the real
stdout so the lines survive capture) and then asserts.  All comparisons
are exact rational equality; the only tolerances are the stated runtime
budgets.
"""

import subprocess
import sys
import time
from fractions import Fraction

from t2alg.axiom_lab import (
    GenConfig,
    _witness_triple,
    classify,
    gen_comparable_pair,
    gen_normal_convex,
    reproduce,
)
from t2alg.constructions import (
    diamond,
    diamond_envelopes,
    is_unit_singleton,
    star,
    star_envelopes,
)
from t2alg.convolution import ConvSpec, convolve, grid_oracle
from t2alg.envelope import envelope, is_convex, plateau
from t2alg.pwfn import (
    Affine,
    ONE,
    PWFn,
    ZERO,
    canonical_equal,
    combine_pointwise,
    constant,
    indicator,
    parse_pwf,
    serialize_pwf,
    sup_on,
)
from t2alg.scalar_ops import builtin
from t2alg.truth_lattice import LEQ_METHODS, join, leq, meet, pointwise_leq

from _support import load_fixture, make_bimodal, scale_values


F = Fraction


def _line(capsys, n: int, ok: bool, label: str) -> None:
    tag = "OK" if ok else "FAIL"
    with capsys.disabled():
        sys.stdout.write(f"[{tag}] criterion {n}: {label}\n")
        sys.stdout.flush()


def test_criterion_1_exact_counterexample_reproduction(capsys):
    t0 = time.time()
    f = load_fixture("f")
    g = load_fixture("g")
    h = load_fixture("h")
    fg = star(f, g).result
    fh = star(f, h).result
    gh = join(g, h)
    expected_gh = PWFn.build(
        (ZERO, F(1, 2), ONE),
        (ZERO, ZERO, ONE),
        (Affine(ZERO, ZERO), Affine(ONE, ZERO)),
    )
    rhs = join(fg, fh)
    lhs = star(f, gh).result
    half = F(1, 2)
    checks = {
        "gh_literal": canonical_equal(gh, expected_gh),
        "rhs_at_half": rhs(half) == half,
        "lhs_at_half": lhs(half) == ZERO,
        "sides_differ": not canonical_equal(lhs, rhs),
    }
    elapsed = time.time() - t0
    ok = all(checks.values()) and elapsed < 1.0
    _line(capsys, 1, ok, f"exact two-sided counterexample from fixtures ({elapsed:.2f}s)")
    assert all(checks.values()), checks
    assert elapsed < 1.0, elapsed


def test_criterion_2_star_distributes_over_meet(capsys):
    t0 = time.time()
    cfg = GenConfig(seed=2024, max_breakpoints=16, grid_denominator=64)
    failures = 0
    for i in range(500):
        f = gen_normal_convex(cfg, salt=("c2", i, 0))
        g = gen_normal_convex(cfg, salt=("c2", i, 1))
        h = gen_normal_convex(cfg, salt=("c2", i, 2))
        lhs = star(f, meet(g, h)).result
        rhs = meet(star(f, g).result, star(f, h).result)
        if not canonical_equal(lhs, rhs):
            failures += 1
    elapsed = time.time() - t0
    ok = failures == 0 and elapsed < 10.0
    _line(capsys, 2, ok, f"500 seeded triples, zero failures ({elapsed:.2f}s)")
    assert failures == 0
    assert elapsed < 10.0, elapsed


def test_criterion_3_separation_ladder(capsys):
    cfg = GenConfig(seed=0)
    c_star = classify("star", trials=30, cfg=cfg)
    c_dia = classify("diamond", trials=30, cfg=cfg)
    c_meet = classify("meet", trials=30, cfg=cfg)
    star_ok = (
        c_star.label == "t_r_norm"
        and not c_star.report("O4p").passed
        and c_star.report("O4p").witness.inputs == _witness_triple()
    )
    dia_witness = c_dia.report("O6").witness
    dia_ok = (
        c_dia.label == "t_norm"
        and not c_dia.report("O6").passed
        and dia_witness.inputs == (indicator(F(1, 4), F(1, 4)), indicator(F(1, 2), F(1, 2)))
        and canonical_equal(dia_witness.lhs, indicator(ZERO, F(1, 4)))
    )
    meet_ok = c_meet.label in ("t_r_norm", "t_w_norm") and all(
        c_meet.report(a).passed for a in ("O1", "O2", "O3", "O4", "O5", "O6", "O7")
    )
    ok = star_ok and dia_ok and meet_ok
    _line(capsys, 3, ok, "classify separates star / diamond / meet with forced witnesses")
    assert star_ok, c_star
    assert dia_ok, c_dia
    assert meet_ok, c_meet


def test_criterion_4_envelope_law_suite(capsys):
    t0 = time.time()
    cfg = GenConfig(seed=4)
    fns = [gen_normal_convex(cfg, salt=("c4", i)) for i in range(1000)]
    bad = []

    # Domination, idempotence, and the two-sided collapse to the supremum,
    # also exercised on subnormal rescalings.
    for i, f in enumerate(fns):
        probe = f if i % 5 else scale_values(f, F(2, 3))
        fl = envelope(probe, "L")
        fr = envelope(probe, "R")
        if not pointwise_leq(probe, combine_pointwise(fl, fr, "min")):
            bad.append(("dominate", i))
        if not canonical_equal(envelope(fl, "L"), fl):
            bad.append(("idem_L", i))
        if not canonical_equal(envelope(fr, "R"), fr):
            bad.append(("idem_R", i))
        top = constant(sup_on(probe, ZERO, ONE))
        if not canonical_equal(envelope(fl, "R"), top):
            bad.append(("collapse_LR", i))
        if not canonical_equal(envelope(fr, "L"), top):
            bad.append(("collapse_RL", i))

    # Convexity is equivalent to being the min of the two envelopes.
    for i, f in enumerate(fns):
        fl = envelope(f, "L")
        fr = envelope(f, "R")
        if not canonical_equal(f, combine_pointwise(fl, fr, "min")):
            bad.append(("convex_eq", i))
        m = make_bimodal(f)
        if m is not None:
            ml = envelope(m, "L")
            mr = envelope(m, "R")
            eq = canonical_equal(m, combine_pointwise(ml, mr, "min"))
            if eq or is_convex(m):
                bad.append(("bimodal_eq", i))

    # Plateau threshold order on normal functions, convex or not.
    for i, f in enumerate(fns):
        g = fns[(i * 3 + 1) % len(fns)]
        mix = combine_pointwise(f, g, "max")
        for probe in (f, mix):
            if plateau(probe, "left") > plateau(probe, "right"):
                bad.append(("plateau", i))

    # Envelope images of meet and join.
    for i, f in enumerate(fns):
        g = fns[(i * 7 + 3) % len(fns)]
        m = meet(f, g)
        j = join(f, g)
        fl, gl = envelope(f, "L"), envelope(g, "L")
        fr, gr = envelope(f, "R"), envelope(g, "R")
        pairs = (
            (envelope(m, "L"), combine_pointwise(fl, gl, "max")),
            (envelope(m, "R"), combine_pointwise(fr, gr, "min")),
            (envelope(j, "L"), combine_pointwise(fl, gl, "min")),
            (envelope(j, "R"), combine_pointwise(fr, gr, "max")),
        )
        if not all(canonical_equal(a, b) for a, b in pairs):
            bad.append(("meet_join_env", i))

    # Three decision procedures for the order agree everywhere.
    for i in range(500):
        lo, hi = gen_comparable_pair(cfg, salt=("c4cmp", i))
        if not all(leq(lo, hi, method=m) for m in LEQ_METHODS):
            bad.append(("order_cmp", i))
    for i in range(500):
        f = fns[i]
        g = fns[(i * 11 + 5) % len(fns)]
        verdicts = {leq(f, g, method=m) for m in LEQ_METHODS}
        if len(verdicts) != 1:
            bad.append(("order_mix", i))

    elapsed = time.time() - t0
    ok = not bad and elapsed < 10.0
    _line(capsys, 4, ok, f"envelope and order laws over 1000 samples each ({elapsed:.2f}s)")
    assert not bad, bad[:5]
    assert elapsed < 10.0, elapsed


def test_criterion_5_engine_cross_validation(capsys):
    t0 = time.time()
    n = 64
    cfg = GenConfig(seed=5, grid_denominator=n)
    mn, mx = builtin("min"), builtin("max")
    meet_spec = ConvSpec("norm", mn, mn, "grid", grid_n=n)
    join_spec = ConvSpec("conorm", mx, mn, "grid", grid_n=n)
    bad = []
    for i in range(200):
        f = gen_normal_convex(cfg, salt=("c5", i, 0), step_only=True)
        g = gen_normal_convex(cfg, salt=("c5", i, 1), step_only=True)
        m = meet(f, g)
        j = join(f, g)
        for gv in grid_oracle(f, g, meet_spec):
            if m(gv.x) != gv.value:
                bad.append(("meet", i, gv.x))
        for gv in grid_oracle(f, g, join_spec):
            if j(gv.x) != gv.value:
                bad.append(("join", i, gv.x))

    n8 = 8
    boxes = [(F(a, n8), F(b, n8)) for a in range(n8 + 1) for b in range(a, n8 + 1)]
    for comb_name in ("min", "lukasiewicz"):
        comb = builtin(comb_name)
        ind_spec = ConvSpec("norm", comb, mn, "indicator")
        grid_spec = ConvSpec("norm", comb, mn, "grid", grid_n=n8)
        for a1, b1 in boxes:
            for a2, b2 in boxes:
                fi, gi = indicator(a1, b1), indicator(a2, b2)
                out = convolve(fi, gi, ind_spec)
                for gv in grid_oracle(fi, gi, grid_spec):
                    if out(gv.x) != gv.value:
                        bad.append((comb_name, (a1, b1), (a2, b2), gv.x))
    elapsed = time.time() - t0
    ok = not bad
    _line(capsys, 5, ok, f"closed forms match the brute-force grid supremum ({elapsed:.2f}s)")
    assert not bad, bad[:5]


def test_criterion_6_characterization_experiments(capsys):
    cases = (
        "thm34_o5_fail",
        "thm34_o5_pass",
        "thm35_o6_fail",
        "thm35_o6_pass",
        "cor36_o7",
        "o5prime_conorm",
        "thm42_conorm_o6",
    )
    results = {cid: reproduce(cid) for cid in cases}
    all_passed = all(r.passed for r in results.values())

    # Independent spot check of the failing absorption pattern: lifting
    # the drastic product against 1_[1/4,1/2] reaches {0} u [1/4, 1/2]
    # on the grid, which is not an interval.
    spec = ConvSpec("norm", builtin("drastic_product"), builtin("min"), "grid", 16)
    out = convolve(indicator(ZERO, ONE), indicator(F(1, 4), F(1, 2)), spec)
    ones = {k for k in range(17) if out(F(k, 16)) == ONE}
    spot_fail = ones == {0, 4, 5, 6, 7, 8}

    # And of a passing one: lukasiewicz on singletons stays a singleton.
    spec_l = ConvSpec("norm", builtin("lukasiewicz"), builtin("min"), "indicator")
    spot_pass = canonical_equal(
        convolve(indicator(F(5, 8), F(5, 8)), indicator(F(7, 8), F(7, 8)), spec_l),
        indicator(F(1, 2), F(1, 2)),
    )
    ok = all_passed and spot_fail and spot_pass
    _line(capsys, 6, ok, "seven scripted characterization cases hold exactly")
    assert all_passed, {cid: r.passed for cid, r in results.items()}
    assert spot_fail, sorted(ones)
    assert spot_pass


def test_criterion_7_closed_form_envelopes(capsys):
    t0 = time.time()
    cfg = GenConfig(seed=7)

    def draw(i, side):
        for k in range(10):
            f = gen_normal_convex(cfg, salt=("c7", i, side, k))
            if not is_unit_singleton(f):
                return f
        raise AssertionError("generator kept producing the unit singleton")

    bad = []
    for i in range(500):
        f = draw(i, 0)
        g = draw(i, 1)
        sl, sr = star_envelopes(f, g)
        s = star(f, g).result
        if not canonical_equal(sl, envelope(s, "L")):
            bad.append(("star_L", i))
        if not canonical_equal(sr, envelope(s, "R")):
            bad.append(("star_R", i))
        dl, dr = diamond_envelopes(f, g)
        d = diamond(f, g)
        if not canonical_equal(dl, envelope(d, "L")):
            bad.append(("dia_L", i))
        if not canonical_equal(dr, envelope(d, "R")):
            bad.append(("dia_R", i))
    elapsed = time.time() - t0
    ok = not bad
    _line(capsys, 7, ok, f"direct envelopes equal recomputed ones on 500 pairs ({elapsed:.2f}s)")
    assert not bad, bad[:5]


def test_criterion_8_round_trip_and_determinism(capsys):
    cfg = GenConfig(seed=8)
    bad = []
    for i in range(500):
        f = gen_normal_convex(cfg, salt=("c8", i))
        if parse_pwf(serialize_pwf(f)) != f:
            bad.append(i)

    def run(args):
        return subprocess.run(
            [sys.executable, "-m", "t2alg.cli", *args],
            capture_output=True,
            timeout=120,
        )

    commands = (
        ["check", "--op", "star", "--axiom", "O4p", "--trials", "5", "--seed", "3"],
        ["classify", "--op", "diamond", "--trials", "8", "--seed", "11"],
    )
    deterministic = True
    for cmd in commands:
        first, second = run(cmd), run(cmd)
        if first.stdout != second.stdout or first.returncode != second.returncode:
            deterministic = False
    ok = not bad and deterministic
    _line(capsys, 8, ok, "serialization round trip and byte-identical reports")
    assert not bad, bad[:5]
    assert deterministic

"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines, or
``python3 tests/test_acceptance.py`` for a standalone summary.
"""

import random
import sys
from fractions import Fraction as F
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from contactd3.circle_bundle import (SpinCClass, d3_honda, d3_semifillable, honda_diagram,
                                     honda_spinc, model_manifold, nicolaescu_kappa)
from contactd3.exact_arith import cf_evaluate, determinant, inertia, negative_cf_expand
from contactd3.invariants import compute_invariants, verify_plus_one_family
from contactd3.kirby import MarkedForm, blowdown, blowup, d3_of_form, handleslide, reduce_to_blocks
from contactd3.surgery import CONVENTIONS, DEFAULT_CONVENTION, build_four_manifold, reduce_diagram

from conftest import random_symmetric

SWEEP = [(g, n) for g in range(1, 9) for n in range(2 * g, 41)]
PRE_SLIDE = [(1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (2, 6)]
SEED = 20021017


def report(num, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}", flush=True)
    return ok


def closed_forms(g, n):
    return n - 4 * g + 4, 1 - n + 2 * g, F(-2 * g * (n - 2 * g), n), d3_honda(g, n)


def criterion_1():
    bad = []
    for g, n in SWEEP:
        chi, sigma, c1sq, d3 = closed_forms(g, n)
        assert d3 == F(n * n - 3 * n + 4 * g * g, 4 * n)
        for i in (0, 1):
            r = compute_invariants(model_manifold(g, n, i))
            if (r.chi, r.sigma, r.c1_squared, r.d3) != (chi, sigma, c1sq, d3):
                bad.append((g, n, i))
    return not bad, f"model chi/sigma/c1^2/d3 on {2 * len(SWEEP)} cases, mismatches {bad[:5]}"


def criterion_2():
    bad = []
    for g, n in SWEEP:
        target = F(n * n + n + 4 * g * g, 4 * n) - 2 * g - 2
        for kappa in {g, n - g}:
            if d3_semifillable(g, n, kappa) != target:
                bad.append((g, n, kappa))
    return not bad, f"semi-fillable d3 for kappa in {{g, n-g}} on {len(SWEEP)} pairs, mismatches {bad[:5]}"


def criterion_3():
    bad = []
    for g, n in SWEEP:
        for i in (0, 1):
            kappa = nicolaescu_kappa(g, n, i)
            if d3_honda(g, n) - d3_semifillable(g, n, kappa) != 2 * g + 1:
                bad.append((g, n, i))
    return not bad, f"gap 2g+1 on {2 * len(SWEEP)} cases, mismatches {bad[:5]}"


def criterion_4():
    ok = verify_plus_one_family(10)
    return ok, "verify_plus_one_family(10) is " + str(ok)


def criterion_5():
    bad = []
    for g, n in SWEEP:
        for i in (0, 1):
            s = honda_spinc(g, n, i)
            if s.c1_on_generator != (-1) ** i * (n - 2 * g) or (s.e - (2 * i * g - 1)) % n:
                bad.append((g, n, i))
    rng = random.Random(SEED)
    periodic = 0
    for _ in range(1000):
        g, n = rng.choice(SWEEP)
        e = rng.randint(-10**9, 10**9)
        periodic += SpinCClass(g, n, e + n) == SpinCClass(g, n, e) != SpinCClass(g, n, e + 1)
    return not bad and periodic == 1000, (f"equation and congruence mismatches {bad[:5]}, "
                                          f"periodicity {periodic}/1000")


def _nondegenerate_form(rng):
    while True:
        n = rng.randint(1, 6)
        A = random_symmetric(rng, n)
        if determinant(A) != 0:
            return MarkedForm(A, [rng.randint(-5, 5) for _ in range(n)])


def criterion_6():
    rng = random.Random(SEED)
    slides = 0
    for _ in range(1000):
        m = _nondegenerate_form(rng)
        if m.dim < 2:
            m = MarkedForm.from_four_manifold(model_manifold(1, rng.randint(2, 12), rng.randint(0, 1)))
        i, j = rng.sample(range(m.dim), 2)
        out = handleslide(m, i, j, rng.choice((1, -1)))
        slides += (inertia(out.matrix()) == inertia(m.matrix())
                   and determinant(out.matrix()) == determinant(m.matrix()))
    trips = 0
    for _ in range(1000):
        m = _nondegenerate_form(rng)
        h, q = rng.randint(0, 4), rng.randint(0, 3)
        up = blowup(m, -1, rng.choice((1, -1)))
        k = rng.randrange(m.dim) if m.dim else None
        if k is not None:
            # slide an old handle over the new class and back; d3 is unchanged throughout
            s = rng.choice((1, -1))
            mid = handleslide(up, k, up.dim - 1, s)
            ok_mid = d3_of_form(mid, h, q) == d3_of_form(m, h, q)
            up = handleslide(mid, k, up.dim - 1, -s)
        else:
            ok_mid = True
        down = blowdown(up, up.dim - 1)
        trips += (ok_mid and down == m and d3_of_form(up, h, q) == d3_of_form(m, h, q)
                  == d3_of_form(down, h, q))
    return slides == 1000 and trips == 1000, (f"slide inertia/det {slides}/1000, "
                                              f"blowup/blowdown d3 round trips {trips}/1000")


def criterion_7():
    bad = []
    count = 0
    for a in range(2, 201):
        for b in range(1, a):
            count += 1
            if cf_evaluate(negative_cf_expand(F(-a, b))) != F(-a, b):
                bad.append((a, b))
    chains = all(negative_cf_expand(F(-p, p - 1)) == [-2] * (p - 1) for p in range(2, 201))
    return not bad and chains, (f"round trip on {count} fractions, failures {bad[:5]}; "
                                f"-p/(p-1) all-(-2) chains for p <= 200: {chains}")


def _pre_slide_matches(g, n, i, convention):
    fm = build_four_manifold(reduce_diagram(honda_diagram(g, n, i, convention)))
    r = compute_invariants(fm)
    return (r.chi, r.sigma, r.c1_squared, r.d3) == closed_forms(g, n), fm


def criterion_8():
    matching = {c: True for c in CONVENTIONS}
    reduced = True
    for g, n in PRE_SLIDE:
        for i in (0, 1):
            for c in CONVENTIONS:
                ok, fm = _pre_slide_matches(g, n, i, c)
                matching[c] &= ok
                if c != DEFAULT_CONVENTION:
                    continue
                target = model_manifold(g, n, i)
                out, _ = reduce_to_blocks(MarkedForm.from_four_manifold(fm))
                reduced &= (out.Q == MarkedForm.from_four_manifold(target).Q
                            and out.c1 == target.c1_vec)
    anchor = build_four_manifold(reduce_diagram(honda_diagram(1, 3, 0)))
    anchor_ok = (anchor.Q == [[0, 1, 1, 1], [1, 0, -1, -1], [1, -1, 0, -1], [1, -1, -1, -3]]
                 and anchor.c1_vec == (0, 0, 0, 1)
                 and compute_invariants(anchor).c1_squared == F(-2, 3)
                 and compute_invariants(anchor).d3 == F(1, 3))
    ok = matching[DEFAULT_CONVENTION] and reduced and anchor_ok
    return ok, (f"selected convention {DEFAULT_CONVENTION!r}; all-cases match per convention "
                f"{matching}; block reduction {reduced}; (1,3,0) anchor {anchor_ok}")


def criterion_9():
    from test_cli import GOLDEN, GOLDEN_CASES, run
    failed = []
    codes = set()
    for name, code, argv in GOLDEN_CASES:
        got, text = run(*argv)
        codes.add(got)
        if got != code or text != (GOLDEN / name).read_text(encoding="utf-8"):
            failed.append(name)
    commands = {argv[0] for _, _, argv in GOLDEN_CASES}
    ok = not failed and {2, 3} <= codes and {"invariants", "expand", "circle-bundle"} <= commands
    return ok, f"{len(GOLDEN_CASES)} golden files, failures {failed}, exit codes seen {sorted(codes)}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("num", range(1, 10))
def test_criterion(num):
    ok, detail = CRITERIA[num - 1]()
    assert report(num, ok, detail), detail


if __name__ == "__main__":
    results = [report(k, *fn()) for k, fn in enumerate(CRITERIA, 1)]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)

"""Acceptance criteria, each run at its stated tolerance and time budget.

Every test prints one line "criterion N: PASS|FAIL ..." straight to the
terminal, so the verdicts show up even under pytest's output capture.
"""

import time

import pytest

from scrollar.suites import RunConfig, run_suite

BUDGET = {"pinch-tower": 300, "pinch-tower-mod-p": 60, "kummer": 120, "inflation-law": 120,
          "generic-drop": 120, "lingen": 180, "miranda": 300, "dims": 60, "engine": 60}


def _run(name, char=0):
    t0 = time.perf_counter()
    rep = run_suite(name, RunConfig(char=char, seed=1))
    return rep, time.perf_counter() - t0


def _verdict(capsys, n, label, ok, detail):
    with capsys.disabled():
        print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} {label} ({detail})")
    assert ok, f"criterion {n} failed: {detail}"


def _suite_criterion(capsys, n, name, extra=lambda rep: (True, "")):
    rep, secs = _run(name)
    ok_extra, note = extra(rep)
    failed = sorted(k for k, v in rep.checks.items() if not v)
    in_time = secs < BUDGET[name]
    ok = rep.passed and ok_extra and in_time
    detail = f"{len(rep.trials)} trials, {secs:.1f}s / {BUDGET[name]}s"
    if failed:
        detail += f", failed checks: {failed}"
    if note:
        detail += f", {note}"
    _verdict(capsys, n, name, ok, detail)


def test_criterion_1_pinch_tower(capsys):
    rep0, t0 = _run("pinch-tower")
    repp, tp = _run("pinch-tower", char=10007)
    # every sorted vector with entries in 1..4 for d = 2..5: 4 + 10 + 20 + 35
    counts = (len(rep0.trials), len(repp.trials))
    ok = (rep0.passed and repp.passed and counts == (69, 69)
          and t0 < BUDGET["pinch-tower"] and tp < BUDGET["pinch-tower-mod-p"])
    _verdict(capsys, 1, "pinch-tower", ok,
             f"{counts[0]} towers char 0 in {t0:.1f}s, {counts[1]} towers mod 10007 in {tp:.1f}s")


def test_criterion_2_kummer(capsys):
    # d in {2,3,5}, e in 1..8, 10 polynomials each
    _suite_criterion(capsys, 2, "kummer", lambda rep: (len(rep.trials) == 240, ""))


def test_criterion_3_inflation_law(capsys):
    _suite_criterion(capsys, 3, "inflation-law", lambda rep: (len(rep.trials) == 200, ""))


def test_criterion_4_generic_drop(capsys):
    _suite_criterion(capsys, 4, "generic-drop",
                     lambda rep: (len(rep.trials) == 50, f"{len(rep.redraws)} redraw(s)"))


def test_criterion_5_lingen(capsys):
    def ranks(rep):
        got = [t["rank"] for t in rep.trials if "rank" in t]
        return got == [6, 12, 20], f"ranks {got}"
    _suite_criterion(capsys, 5, "lingen", ranks)


def test_criterion_6_miranda(capsys):
    # 15 pairs with 1 <= a1 <= a2 <= 5
    _suite_criterion(capsys, 6, "miranda", lambda rep: (len(rep.trials) == 15, ""))


def test_criterion_7_dims(capsys):
    _suite_criterion(capsys, 7, "dims", lambda rep: (len(rep.trials) == 30, "30 End-lattice types"))


def test_criterion_8_engine(capsys):
    def counts(rep):
        kinds = [t["kind"] for t in rep.trials]
        return (kinds.count("popov"), kinds.count("kernel")) == (200, 100), ""
    _suite_criterion(capsys, 8, "engine", counts)

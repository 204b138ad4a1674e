"""Report model and the two renderings."""

import pytest

from bicat.gen import GenConfig
from bicat.report import (CheckResult, RunReport, SuiteReport, parse_machine,
                          render_machine, render_text, strip_wall)

CFG = GenConfig(seed=7, max_carrier=3, trials=20, instance="rel",
                suites=("kernel", "homprod"))


def _sample_run():
    return RunReport(CFG, (
        SuiteReport("kernel", (
            CheckResult("pasting-interchange", "pass", 20, None, 12),
            CheckResult("negative-nonmap-rejected", "pass", 1,
                        "set X = x0\nrel R : X -> X =\ncheck map R\n", 3),
        )),
        SuiteReport("homprod", (
            CheckResult("wedge-universal-pairing", "fail", 4,
                        "# shrunk witness\nset A = a0\n", 8),
            CheckResult("unit-axiom", "skipped", 0, None, 0),
        )),
    ))


def test_ok_reflects_failures():
    run = _sample_run()
    assert not run.ok
    healthy = RunReport(CFG, (run.suites[0],))
    assert healthy.ok
    skipped_only = RunReport(CFG, (run.suites[1].__class__(
        "homprod", (CheckResult("unit-axiom", "skipped", 0, None, 0),)),))
    assert skipped_only.ok


def test_duplicate_check_ids_rejected():
    c = CheckResult("x", "pass", 1, None, 0)
    with pytest.raises(ValueError):
        SuiteReport("kernel", (c, c))


def test_machine_round_trip_modulo_wall():
    run = _sample_run()
    text = render_machine(run)
    assert text.startswith("bicat-report 1\n")
    parsed = parse_machine(text)
    assert strip_wall(parsed) == strip_wall(run)
    # wall times survive the round trip too; only the guarantee is weaker.
    assert parsed == run


def test_counterexamples_keep_their_lines():
    run = _sample_run()
    parsed = parse_machine(render_machine(run))
    cx = parsed.suites[1].checks[0].counterexample
    assert cx == "# shrunk witness\nset A = a0\n"


def test_parse_rejects_foreign_text():
    with pytest.raises(ValueError):
        parse_machine("hello\n")
    with pytest.raises(ValueError):
        parse_machine("bicat-report 1\nconfig seed=0 max-size=1 trials=1 "
                      "instance=rel suites=kernel\nsurprise\n")


def test_text_rendering_mentions_every_check():
    run = _sample_run()
    text = render_text(run)
    for suite in run.suites:
        for c in suite.checks:
            assert c.check_id in text
    assert "FAILURES PRESENT" in text
    assert "suite homprod: 0 passed, 1 failed, 1 skipped" in text
    healthy = RunReport(CFG, (run.suites[0],))
    assert "result: all checks passed" in render_text(healthy)
    assert "[SKIPPED]" in text
    assert "counterexample:" in text


def test_strip_wall_zeroes_only_wall():
    run = _sample_run()
    stripped = strip_wall(run)
    for suite in stripped.suites:
        for c in suite.checks:
            assert c.wall_ms == 0
    assert [c.check_id for s in stripped.suites for c in s.checks] \
        == [c.check_id for s in run.suites for c in s.checks]

"""Check results and the two report renderings.

The machine format is line-delimited so CI can diff it:

    bicat-report 1
    config seed=<n> max-size=<n> trials=<n> instance=<name> suites=<a,b>
    suite <name>
    check <id> <pass|fail|skipped> trials=<n> wall_ms=<n>
    | <counterexample line>

A check line is followed by zero or more ``| `` lines holding its
counterexample in the interchange format.  Everything except the trailing
``wall_ms`` field is a pure function of the config (and fixture files), and
:func:`strip_wall` is what the determinism guarantee is stated through.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .gen import GenConfig


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str  # pass | fail | skipped
    trials: int
    counterexample: str | None
    wall_ms: int


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    checks: tuple

    def __post_init__(self):
        ids = [c.check_id for c in self.checks]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate check id in suite %s" % self.suite)


@dataclass(frozen=True)
class RunReport:
    config: GenConfig
    suites: tuple

    @property
    def ok(self) -> bool:
        return all(c.status != "fail"
                   for s in self.suites for c in s.checks)


def strip_wall(run: RunReport) -> RunReport:
    suites = tuple(
        replace(s, checks=tuple(replace(c, wall_ms=0) for c in s.checks))
        for s in run.suites)
    return replace(run, suites=suites)


def render_machine(run: RunReport) -> str:
    cfg = run.config
    lines = ["bicat-report 1",
             "config seed=%d max-size=%d trials=%d instance=%s suites=%s"
             % (cfg.seed, cfg.max_carrier, cfg.trials, cfg.instance,
                ",".join(cfg.suites))]
    for suite in run.suites:
        lines.append("suite %s" % suite.suite)
        for c in suite.checks:
            lines.append("check %s %s trials=%d wall_ms=%d"
                         % (c.check_id, c.status, c.trials, c.wall_ms))
            if c.counterexample:
                for cx in c.counterexample.splitlines():
                    lines.append("| %s" % cx)
    return "\n".join(lines) + "\n"


def parse_machine(text: str) -> RunReport:
    lines = [l for l in text.splitlines() if l.strip()]
    if not lines or lines[0] != "bicat-report 1":
        raise ValueError("not a bicat machine report")
    fields = dict(kv.split("=", 1) for kv in lines[1].split()[1:])
    config = GenConfig(seed=int(fields["seed"]),
                       max_carrier=int(fields["max-size"]),
                       trials=int(fields["trials"]),
                       instance=fields["instance"],
                       suites=tuple(fields["suites"].split(",")))
    suites, checks, cx = [], [], []
    suite_name = None

    def flush_check():
        if checks and cx:
            checks[-1] = replace(checks[-1],
                                 counterexample="\n".join(cx) + "\n")
            cx.clear()

    def flush_suite():
        nonlocal suite_name
        flush_check()
        if suite_name is not None:
            suites.append(SuiteReport(suite_name, tuple(checks)))
            checks.clear()

    for line in lines[2:]:
        if line.startswith("suite "):
            flush_suite()
            suite_name = line.split(None, 1)[1]
        elif line.startswith("check "):
            flush_check()
            _, cid, status, tfield, wfield = line.split()
            checks.append(CheckResult(cid, status,
                                      int(tfield.split("=", 1)[1]),
                                      None,
                                      int(wfield.split("=", 1)[1])))
        elif line.startswith("| "):
            cx.append(line[2:])
        elif line == "|":
            cx.append("")
        else:
            raise ValueError("unrecognized report line %r" % line)
    flush_suite()
    return RunReport(config, tuple(suites))


def render_text(run: RunReport) -> str:
    cfg = run.config
    out = ["bicat-check: instance=%s seed=%d max-size=%d trials=%d"
           % (cfg.instance, cfg.seed, cfg.max_carrier, cfg.trials)]
    for suite in run.suites:
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for c in suite.checks:
            counts[c.status] += 1
        out.append("")
        out.append("suite %s: %d passed, %d failed, %d skipped"
                   % (suite.suite, counts["pass"], counts["fail"],
                      counts["skipped"]))
        for c in suite.checks:
            out.append("  [%s] %s (trials=%d, %d ms)"
                       % (c.status.upper().ljust(7), c.check_id,
                          c.trials, c.wall_ms))
            if c.counterexample:
                out.append("    counterexample:")
                for cx in c.counterexample.splitlines():
                    out.append("      " + cx)
    out.append("")
    out.append("result: %s" % ("all checks passed" if run.ok
                               else "FAILURES PRESENT"))
    return "\n".join(out) + "\n"

"""Helpers shared by the sympy oracles."""
import re
import subprocess
import sys

import sympy as sp


def run(cli, *args, ok_codes=(0,)):
    p = subprocess.run([cli, *args], capture_output=True, text=True)
    if p.returncode not in ok_codes:
        sys.exit(f"{' '.join(args)}: exit {p.returncode}\n{p.stderr}")
    return p.stdout


def to_sympy(text, names="x"):
    """Parse the library's canonical polynomial printing."""
    t = text.replace("^", "**")
    return sp.sympify(t, locals={n: sp.Symbol(n) for n in names.split()})


def check_statuses(report):
    """label -> ok | DEFECT | FAIL from a certificate report."""
    out = {}
    for line in report.splitlines():
        m = re.match(r"check (.*): (ok|DEFECT|FAIL)$", line)
        if m:
            out[m.group(1)] = m.group(2)
    return out


class Tally:
    def __init__(self):
        self.failures = 0

    def expect(self, ok, what):
        print(("ok   " if ok else "FAIL ") + what)
        if not ok:
            self.failures += 1

    def finish(self):
        print(f"{self.failures} failures")
        sys.exit(1 if self.failures else 0)

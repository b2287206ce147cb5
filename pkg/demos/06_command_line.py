#! /usr/bin/env python3
"""Driving the command line tool and reading its JSON reports."""

import json
import subprocess
import sys


def gl2modp(*args):
    res = subprocess.run([sys.executable, "-m", "gl2modp", *args], capture_output=True, text=True)
    return res.returncode, res.stdout, res.stderr


# Every report has the same four keys.  Checks carry a pass/fail status and a
# witness, and the exit code is 0 only when they all pass.

code, out, _ = gl2modp("weights", "s", "--p", "29", "--f", "2", "--digits", "3,4")
report = json.loads(out)
print("exit", code, "keys", sorted(report))
print(json.dumps(report["results"], indent=2))

code, out, _ = gl2modp("diagram", "weights", "--p", "29", "--f", "2", "--r", "3,4")
for w in json.loads(out)["results"]["weights"]:
    print(w)

# Bad input exits with 1 and writes nothing to stdout.

code, out, err = gl2modp("weights", "s", "--p", "29", "--f", "1", "--digits", "0")
print("exit", code, "stdout empty:", out == "", "stderr:", err.strip())

# verify sweeps the invariants over a grid of (p, f) and reports one check per
# invariant and grid point.

code, out, _ = gl2modp("verify", "--p-max", "11", "--f-max", "2", "--samples", "4")
checks = json.loads(out)["checks"]
print("exit", code, "-", sum(c["status"] == "pass" for c in checks), "of", len(checks), "checks pass")

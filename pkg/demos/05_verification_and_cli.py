"""The verification suite and the command-line interface.

Runs the full identity suite on one lattice in-process, then drives the
installed CLI on a generated job file: adjoint computation, frame bounds,
dual windows, and the verify subcommand with CSV output.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

from heisenmod import FiniteAbelianGroup, subgroup_from_generators, verify_suite

g = FiniteAbelianGroup((6,))
lat = subgroup_from_generators(g, [((2,), (0,)), ((0,), (3,))], 1)
report = verify_suite(lat, seed=42)
print(f"verify suite on Z_6, lattice 2Z x 3Z^, seed 42: pass = {report['pass']}")
print(f"{'identity':24s} {'cases':>5s} {'max abs gap':>12s}")
for entry in report["identities"]:
    print(f"{entry['name']:24s} {entry['cases']:5d} {entry['max_abs_gap']:12.2e}")

# The same computations are reachable from the command line via a JSON job.
job = {
    "group": [6],
    "generators": [[[2], [0]], [[0], [3]]],
    "weight": "1",
    "windows": ["randn:1"],
    "seed": 42,
}
with tempfile.TemporaryDirectory() as tmp:
    spec = Path(tmp) / "job.json"
    spec.write_text(json.dumps(job))

    def run(*argv):
        out = subprocess.run(
            [sys.executable, "-m", "heisenmod.cli", *argv, "--spec", str(spec)],
            capture_output=True, text=True,
        )
        return out.returncode, out.stdout.strip()

    code, text = run("adjoint")
    print(f"\n$ heisenmod adjoint --spec job.json   (exit {code})")
    print(text)

    code, text = run("frame-bounds")
    print(f"\n$ heisenmod frame-bounds --spec job.json   (exit {code})")
    print(text)

    code, text = run("verify", "--out", "csv")
    print(f"\n$ heisenmod verify --spec job.json --out csv   (exit {code})")
    print(text)

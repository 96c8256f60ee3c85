#!/usr/bin/env python3
"""Regenerate the standard figure gallery as SVG files.

Four plots:
  basis_narrow.svg     cubic quantum basis on [pi/8, pi/4], q = 1.1, 1.2, 1.3
  basis_quarter.svg    cubic quantum basis on [0, pi/2], same q values
                       (the outer functions cos^3 and sin^3 coincide across q)
  rational_basis.svg   rational cubic basis on [0, pi/2], unit weights, same q
  rational_curves.svg  rational cubic curves for the arch polygon
                       (0,0), (1,2), (2,2), (3,0) at q = 1, 2, 3; larger q
                       pulls the curve toward the chord between the endpoints
"""

import argparse
import json
import pathlib
import sys

from qtrig.cli import main as qtrig_main

ARCH = {"points": [[0, 0], [1, 2], [2, 2], [3, 0]], "weights": [1, 1, 1, 1]}


def run(outdir: pathlib.Path) -> int:
    outdir.mkdir(parents=True, exist_ok=True)
    polygon = outdir / "arch_polygon.json"
    polygon.write_text(json.dumps(ARCH) + "\n", encoding="utf-8")

    jobs = [
        ("basis_narrow.svg", ["basis", "--degree", "3", "--q", "1.1", "--q", "1.2",
                              "--q", "1.3", "--interval", "pi/8,pi/4"]),
        ("basis_quarter.svg", ["basis", "--degree", "3", "--q", "1.1", "--q", "1.2",
                               "--q", "1.3", "--interval", "0,pi/2"]),
        ("rational_basis.svg", ["rational", "--basis", "--degree", "3",
                                "--weights", "1,1,1,1", "--q", "1.1", "--q", "1.2",
                                "--q", "1.3", "--interval", "0,pi/2"]),
        ("rational_curves.svg", ["rational", "--polygon", str(polygon),
                                 "--q", "1", "--q", "2", "--q", "3",
                                 "--interval", "0,pi/2"]),
    ]
    for name, args in jobs:
        target = outdir / name
        code = qtrig_main(args + ["--format", "svg", "--samples", "129",
                                  "--out", str(target)])
        if code != 0:
            print(f"failed ({code}): {name}", file=sys.stderr)
            return code
        print(f"wrote {target}")
    return 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="figures", type=pathlib.Path)
    sys.exit(run(ap.parse_args().outdir))

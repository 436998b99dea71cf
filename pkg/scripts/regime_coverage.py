"""Branch coverage of the plateau regimes on a seeded sample.

    python3 scripts/regime_coverage.py --count 3000 --report coverage.json
"""

import argparse
import dataclasses
import json

from rtangle.config import CoverageConfig
from rtangle.coverage import regime_coverage


def main():
    base = CoverageConfig()
    ap = argparse.ArgumentParser()
    for f in dataclasses.fields(base):
        ap.add_argument("--" + f.name.replace("_", "-"), type=int, default=getattr(base, f.name))
    ap.add_argument("--report", default="coverage_report.json")
    args = ap.parse_args()
    cfg = CoverageConfig(**{f.name: getattr(args, f.name) for f in dataclasses.fields(base)})

    report = regime_coverage(cfg)
    out = report.to_json() | {"config": dataclasses.asdict(cfg)}
    with open(args.report, "w") as fh:
        json.dump(out, fh, indent=1, sort_keys=True)
    for name, n in sorted(report.hits.items()):
        print(f"{name:10s} {n:6d}")
    for name, c in out["checks"].items():
        print(f"{name:20s} {c['pass']:6d} ok {c['fail']:5d} bad")


if __name__ == "__main__":
    main()

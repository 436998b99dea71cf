"""Property suite over the desk corpus; writes a JSON report.

    python3 scripts/run_corpus.py --report corpus.json
"""

import argparse
import json
import time

from rtangle.config import CorpusConfig
from rtangle.oracle_harness import run_corpus


def main():
    cfg = CorpusConfig()
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=int, default=cfg.bound)
    ap.add_argument("--qbound", type=int, default=cfg.q_bound)
    ap.add_argument("--no-oracle", action="store_true")
    ap.add_argument("--no-reps", action="store_true", help="skip the representative checks (slow)")
    ap.add_argument("--report", default="corpus_report.json")
    args = ap.parse_args()

    t0 = time.time()
    report = run_corpus(args.bound, args.qbound, oracle=not args.no_oracle, representatives=not args.no_reps)
    out = report.to_json()
    out["seconds"] = round(time.time() - t0, 1)
    with open(args.report, "w") as fh:
        json.dump(out, fh, indent=1, sort_keys=True)
    for name, c in out["checks"].items():
        print(f"{name:40s} {c['pass']:7d} ok {c['fail']:5d} bad")
    print(f"{report.items} normal coordinates in {out['seconds']}s -> {args.report}")


if __name__ == "__main__":
    main()

"""Representatives on jump-move balls and a pair sample against ball membership."""

import argparse
import dataclasses
import json

from rtangle.config import ClassConfig
from rtangle.soundness import check_classes


def main():
    base = ClassConfig()
    ap = argparse.ArgumentParser()
    for f in dataclasses.fields(base):
        ap.add_argument("--" + f.name.replace("_", "-"), type=int, default=getattr(base, f.name))
    ap.add_argument("--report")
    args = ap.parse_args()
    cfg = ClassConfig(**{f.name: getattr(args, f.name) for f in dataclasses.fields(base)})

    out = check_classes(cfg).to_json()
    text = json.dumps(out, indent=1)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text + "\n")
    print(text)


if __name__ == "__main__":
    main()

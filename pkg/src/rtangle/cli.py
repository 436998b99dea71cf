"""Command line front end.

Exit codes: 0 success (or equivalent), 1 not equivalent, 2 invalid input,
3 a tripwire fired.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .errors import InvalidCoordinate, NotNormal, ParseError, TangleError, TripwireError
from .surface_model import DehnCoordinate, realize

EXIT_OK, EXIT_DIFFERENT, EXIT_INVALID, EXIT_TRIPWIRE = 0, 1, 2, 3

_INT = re.compile(r"\s*(-?\d+)\s*")


def parse_coordinate(text: str) -> DehnCoordinate:
    """Read ``{"p": [...], "q": [...]}`` or ``p1,q1,p2,q2,p3,q3``."""
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, lead + e.pos) from None
        if not isinstance(obj, dict) or set(obj) != {"p", "q"}:
            raise ParseError('expected keys "p" and "q"', lead)
        p, q = obj["p"], obj["q"]
        for name, xs in (("p", p), ("q", q)):
            if not isinstance(xs, list) or not all(isinstance(x, int) for x in xs):
                raise ParseError(f'"{name}" must be a list of integers', lead + stripped.index(f'"{name}"'))
        return DehnCoordinate(tuple(p), tuple(q))
    values, pos = [], 0
    for part in text.split(","):
        m = _INT.fullmatch(part)
        if not m:
            raise ParseError(f"not an integer: {part!r}", pos)
        values.append(int(m.group(1)))
        pos += len(part) + 1
    if len(values) != 6:
        raise ParseError(f"expected 6 integers, got {len(values)}", len(text))
    return DehnCoordinate.from_tuple(values)


def _coord(c: DehnCoordinate) -> list[int]:
    return list(c.as_tuple())


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


# ----------------------------------------------------------------- commands


def _validate(args) -> int:
    c = parse_coordinate(args.coordinate)
    from .normal_form import is_normal

    s = realize(c)
    _emit({"coordinate": _coord(c), "valid": True, "normal": is_normal(s), "words": s.words})
    return EXIT_OK


def _normalize(args) -> int:
    from .normal_form import find_violation, normalize

    s = realize(parse_coordinate(args.coordinate))
    out = normalize(s)
    _emit({"input": _coord(s.dehn), "normal_form": _coord(out.dehn), "was_normal": find_violation(s) is None})
    return EXIT_OK


def _minimize(args) -> int:
    from .minimization import descend_E1, plateau, regime
    from .normal_form import normalize
    from .surface_model import weight

    path = []
    m = descend_E1(normalize(realize(parse_coordinate(args.coordinate))), path)
    pl = plateau(m, limit=args.limit)
    _emit(
        {
            "minimal": _coord(m.dehn),
            "weight_E1": weight(m, 1),
            "descent": [_coord(x.dehn) for x in path],
            "plateau": [_coord(c) for c in pl.coordinates()],
            "plateau_complete": pl.complete,
            "regime": regime(m).to_json(),
        }
    )
    return EXIT_OK


def _rep(args) -> int:
    from .canonical_rep import representative

    r = representative(realize(parse_coordinate(args.coordinate)))
    _emit(r.to_json())
    return EXIT_OK if r.unique_by_rule else EXIT_TRIPWIRE


def _equiv(args) -> int:
    from .canonical_rep import representative

    a = representative(realize(parse_coordinate(args.first)))
    b = representative(realize(parse_coordinate(args.second)))
    same = a.representative == b.representative
    _emit({"equivalent": same, "representatives": [_coord(a.representative), _coord(b.representative)]})
    return EXIT_OK if same else EXIT_DIFFERENT


def _neighbors(args) -> int:
    from .jump_moves import neighbors

    s = realize(parse_coordinate(args.coordinate))
    _emit({"coordinate": _coord(s.dehn), "neighbors": [nb.to_json() for nb in neighbors(s)]})
    return EXIT_OK


def _explore(args) -> int:
    from .complex_explorer import explore, export_dot, is_tree

    g = explore(parse_coordinate(args.coordinate), args.radius)
    tree = is_tree(g)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(export_dot(g))
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(g.dumps())
    _emit({"seed": _coord(g.seed), "radius": g.radius, "vertices": len(g.vertices), "edges": len(g.edges), "is_tree": tree})
    return EXIT_OK if tree else EXIT_TRIPWIRE


def _random(args) -> int:
    from .oracle_harness import sample_valid

    _emit([_coord(c) for c in sample_valid(args.bound, args.qbound, args.count, args.seed)])
    return EXIT_OK


def _corpus(args) -> int:
    from .oracle_harness import run_corpus

    report = run_corpus(args.bound, args.qbound, oracle=not args.no_oracle)
    text = json.dumps(report.to_json(), indent=1, sort_keys=True)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text + "\n")
    _emit({"items": report.items, "ok": report.ok, "checks": report.to_json()["checks"]})
    return EXIT_OK if report.ok else EXIT_TRIPWIRE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rtangle", description="Rational 3-tangle classifier")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn in (("validate", _validate), ("normalize", _normalize), ("rep", _rep), ("neighbors", _neighbors)):
        p = sub.add_parser(name)
        p.add_argument("coordinate")
        p.set_defaults(func=fn)

    p = sub.add_parser("minimize")
    p.add_argument("coordinate")
    p.add_argument("--limit", type=int, default=64, help="plateau members to list")
    p.set_defaults(func=_minimize)

    p = sub.add_parser("equiv")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_equiv)

    p = sub.add_parser("explore")
    p.add_argument("coordinate")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--dot")
    p.add_argument("--json")
    p.set_defaults(func=_explore)

    p = sub.add_parser("random")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--qbound", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_random)

    p = sub.add_parser("corpus")
    p.add_argument("action", choices=["run"])
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--qbound", type=int, default=3)
    p.add_argument("--report")
    p.add_argument("--no-oracle", action="store_true", help="skip the brute-force completion check")
    p.set_defaults(func=_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TripwireError as e:
        print(json.dumps({"error": "tripwire", "detail": str(e)}), file=sys.stderr)
        return EXIT_TRIPWIRE
    except (ParseError, InvalidCoordinate, NotNormal) as e:
        print(json.dumps({"error": type(e).__name__, "detail": str(e)}), file=sys.stderr)
        return EXIT_INVALID
    except TangleError as e:
        print(json.dumps({"error": type(e).__name__, "detail": str(e)}), file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Every command prints one JSON document (``hunt`` prints JSON lines) that
ends with a ``replay`` object; feeding the document back through
``--replay FILE`` repeats the computation.  Runtime goes to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import HatError, SampledReportNotConclusive
from .evaluator import evaluate_exhaustive, evaluate_sampled, parse_goal, ps_membership
from .game import PartialColoring, condition_profile, derive_structure, set_to_json, validate_game
from .lab import THEOREMS, check_theorem
from .search import UNKNOWN, FamilySpec, SearchCertificate, decide_ps, hunt
from .strategies import CONSTRUCTORS, build_predictor, run_predictor, table_predictor

SEEDED_THEOREMS = {"average", "robust-parity", "after-fiva"}


class UsageError(HatError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _read_json(path: str):
    try:
        with open(path) if path != "-" else sys.stdin as fh:
            return json.load(fh)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"{path} is not valid JSON: {e}") from None


def _parse_budget(text: str) -> int:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"budget must be a number, got {text!r}") from None
    if v < 0 or v != int(v):
        raise argparse.ArgumentTypeError(f"budget must be a nonnegative integer, got {text!r}")
    return int(v)


def _parse_coloring(game, text: str):
    text = text.strip()
    if game.is_omega or "=" in text:
        pairs = {}
        for part in filter(None, (p.strip() for p in text.split(","))):
            if "=" not in part:
                raise UsageError(f"--coloring: expected i=v pairs, got {part!r}")
            i, v = part.split("=", 1)
            pairs[int(i)] = int(v)
        if game.is_omega:
            return PartialColoring.omega(pairs)
        f = [game.colors.zero] * game.n
        for i, v in pairs.items():
            f[game.check(i)] = v
        return tuple(f)
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--coloring: expected a comma list of integers, got {text!r}") from None


def _record_json(rec) -> dict:
    if isinstance(rec.guesses, PartialColoring):
        return {"guesses": rec.guesses.to_json(), "match": set_to_json(rec.match),
                "errors": set_to_json(rec.errors)}
    return {"guesses": list(rec.guesses), "match": sorted(rec.match), "errors": sorted(rec.errors)}


def _predictor(game, opts):
    if opts.get("tables") is not None:
        return table_predictor(game, opts["tables"])
    if not opts.get("predictor"):
        raise UsageError("give --predictor NAME or --tables FILE")
    return build_predictor(opts["predictor"], game, cycle=opts.get("cycle"))


# ---------------------------------------------------------------------------
# handlers: opts -> (payload, exit code)

def do_validate(opts):
    game = validate_game(opts["game"])
    return {"valid": True, "game": game.to_spec()}, 0


def do_conditions(opts):
    game = validate_game(opts["game"])
    st = derive_structure(game)
    out = {"IN": st.IN, "inning_sets": [set_to_json(s) for s in st.inning_sets]}
    if not game.is_omega:
        out["hearing_sets"] = [sorted(h) for h in st.hearing_sets]
    out["conditions"] = condition_profile(game) if game.IN >= 2 else None
    return out, 0


def do_run(opts):
    game = validate_game(opts["game"])
    p = _predictor(game, opts)
    rec = run_predictor(game, p, _parse_coloring(game, opts["coloring"]))
    return {"predictor": p.name, **_record_json(rec)}, 0


def do_evaluate(opts, threads=1):
    game = validate_game(opts["game"])
    p = _predictor(game, opts)
    if opts.get("sample"):
        if opts.get("seed") is None:
            raise UsageError("--sample needs an explicit --seed")
        rep = evaluate_sampled(game, p, opts["sample"], opts["seed"], opts.get("range", 1000),
                               max_support=opts.get("max_support", 3))
    else:
        rep = evaluate_exhaustive(game, p, workers=threads)
    out = {"predictor": p.name, **rep.to_json()}
    code = 0
    if opts.get("goal"):
        goal = parse_goal(opts["goal"])
        try:
            member = ps_membership(rep, goal)
        except SampledReportNotConclusive:
            member = None
        out["goal"] = str(goal)
        out["in_ps"] = member
        code = 1 if member is False else 0
    return out, code


def do_search(opts):
    if opts.get("certificate") is not None:
        # replaying a certificate re-runs the search from its own record
        c = SearchCertificate.from_json(opts["certificate"])
        opts = {"game": c.game.to_spec(), "goal": str(c.goal), **c.options}
    game = validate_game(opts["game"])
    c = decide_ps(game, parse_goal(opts["goal"]), opts["budget"],
                  symmetry=opts.get("symmetry", False), prune=opts.get("prune", True))
    out = c.to_json()
    if c.sat:
        out["replay_check"] = ps_membership(evaluate_exhaustive(game, c.predictor()), c.goal)
    return out, 0 if c.sat else 1


def do_theorem(opts):
    name, params = opts["name"], dict(opts.get("params", {}))
    if name in SEEDED_THEOREMS:
        if opts.get("seed") is None:
            raise UsageError(f"theorem {name} is randomized; give --seed")
        params["seed"] = opts["seed"]
    rep = check_theorem(name, params)
    return rep.to_json(), 1 if rep.violations else 0


def do_hunt(opts):
    fam = FamilySpec.parse(opts["family"])
    rows = list(hunt(fam, parse_goal(opts["goal"]), opts["budget"], symmetry=opts.get("symmetry", False)))
    bad = sum(any(f.startswith("violates:") for f in r["flags"]) for r in rows)
    verdicts = {}
    for r in rows:
        verdicts[r["verdict"]] = verdicts.get(r["verdict"], 0) + 1
    summary = {"family": fam.to_json(), "goal": opts["goal"], "games": len(rows),
               "verdicts": verdicts, "violations": bad,
               "unknown": verdicts.get(UNKNOWN, 0)}
    return (rows, summary), 1 if bad else 0


HANDLERS = {"validate": do_validate, "conditions": do_conditions, "run": do_run,
            "evaluate": do_evaluate, "search": do_search, "theorem": do_theorem, "hunt": do_hunt}


# ---------------------------------------------------------------------------
# argument parsing

def _theorem_params(items) -> dict:
    out = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"theorem parameter {item!r} must be key=value")
        key, val = item.split("=", 1)
        try:
            parts = [int(v) for v in val.split(",")]
        except ValueError:
            raise UsageError(f"theorem parameter {key} needs integers, got {val!r}") from None
        out[key] = parts if "," in val else parts[0]
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hatlab", description="Hat-guessing game laboratory.")
    sub = ap.add_subparsers(dest="command", required=True)

    def cmd(name, help_, game=True):
        p = sub.add_parser(name, help=help_)
        if game:
            p.add_argument("game", nargs="?", help="game-spec JSON file ('-' for stdin)")
        p.add_argument("--replay", metavar="FILE", help="repeat the run recorded in an earlier output")
        p.add_argument("--threads", type=int, default=1, help="worker threads (output is identical)")
        return p

    cmd("validate", "check a game spec")
    cmd("conditions", "inning structure and conditions S1-S6")
    for name in ("run", "evaluate"):
        p = cmd(name, "execute a predictor" if name == "run" else "evaluate a predictor over colorings")
        p.add_argument("--predictor", choices=sorted(CONSTRUCTORS))
        p.add_argument("--tables", metavar="FILE", help="table strategies (list, or a search certificate)")
        p.add_argument("--cycle", help="cycle for cycle-parity, comma separated")
    sub.choices["run"].add_argument("--coloring", required=False, help="'1,0,1' or support pairs '1=3,2=7'")
    ev = sub.choices["evaluate"]
    ev.add_argument("--sample", type=int, metavar="N")
    ev.add_argument("--seed", type=int)
    ev.add_argument("--range", type=int, default=1000, dest="value_range")
    ev.add_argument("--max-support", type=int, default=3)
    ev.add_argument("--goal")
    s = cmd("search", "decide whether a predictor meets a goal")
    s.add_argument("--goal")
    s.add_argument("--budget", type=_parse_budget, default=10 ** 7)
    s.add_argument("--symmetry", action="store_true")
    s.add_argument("--no-prune", action="store_true")
    t = cmd("theorem", "run a named theorem check", game=False)
    t.add_argument("name", nargs="?", help=f"one of {', '.join(sorted(THEOREMS))}")
    t.add_argument("params", nargs="*", help="key=value parameters, e.g. n=3 ks=2,3")
    t.add_argument("--seed", type=int)
    h = cmd("hunt", "search every game of a family", game=False)
    h.add_argument("--family", help="e.g. 'n=3,colors=2,IN=2,first=2,vis=all'")
    h.add_argument("--goal")
    h.add_argument("--budget", type=_parse_budget, default=10 ** 6)
    h.add_argument("--symmetry", action="store_true")
    return ap


def _options(args) -> dict:
    """Normalized, self-contained options; this is what ``replay`` stores."""
    c = args.command
    opts: dict = {}
    if c in ("validate", "conditions", "run", "evaluate", "search"):
        if args.game is None:
            raise UsageError("missing game file")
        opts["game"] = _read_json(args.game)
    if c in ("run", "evaluate"):
        if args.tables:
            obj = _read_json(args.tables)
            opts["tables"] = obj["tables"] if isinstance(obj, dict) else obj
            if opts["tables"] is None:
                raise UsageError(f"{args.tables} holds no tables")
        opts["predictor"] = args.predictor
        if args.cycle:
            try:
                opts["cycle"] = [int(x) for x in args.cycle.split(",")]
            except ValueError:
                raise UsageError(f"--cycle: expected integers, got {args.cycle!r}") from None
    if c == "run":
        if args.coloring is None:
            raise UsageError("missing --coloring")
        opts["coloring"] = args.coloring
    if c == "evaluate":
        opts.update(sample=args.sample, seed=args.seed, range=args.value_range,
                    max_support=args.max_support, goal=args.goal)
        if args.sample is not None and args.sample < 1:
            raise UsageError("--sample must be positive")
        if args.sample and args.seed is None:
            raise UsageError("--sample needs an explicit --seed")
    if c in ("search", "hunt"):
        if not args.goal:
            raise UsageError("missing --goal")
        parse_goal(args.goal)
        opts.update(goal=args.goal, budget=args.budget, symmetry=args.symmetry)
    if c == "search":
        opts["prune"] = not args.no_prune
    if c == "hunt":
        if args.family is None:
            raise UsageError("missing --family")
        FamilySpec.parse(args.family)
        opts["family"] = args.family
    if c == "theorem":
        if args.name is None:
            raise UsageError("missing theorem name")
        opts.update(name=args.name, params=_theorem_params(args.params), seed=args.seed)
    return opts


def _replay_options(command: str, path: str) -> dict:
    with open(path) as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise UsageError(f"{path} is empty") from None
        doc = json.loads(lines[-1])
    if "replay" not in doc and "verdict" in doc and command == "search":
        return {"certificate": doc}
    rep = doc.get("replay")
    if not isinstance(rep, dict) or rep.get("command") != command:
        raise UsageError(f"{path} does not hold a replayable {command} run")
    return {k: v for k, v in rep.items() if k != "command"}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        opts = _replay_options(args.command, args.replay) if args.replay else _options(args)
        handler = HANDLERS[args.command]
        if args.command == "evaluate":
            payload, code = handler(opts, threads=args.threads)
        else:
            payload, code = handler(opts)
    except HatError as e:
        print(f"hatlab {args.command}: error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"hatlab {args.command}: error: {e}", file=sys.stderr)
        return 2
    replay = {"command": args.command, **opts}
    if args.command == "hunt":
        rows, summary = payload
        for r in rows:
            print(json.dumps(r))
        print(json.dumps({"summary": summary, "replay": replay}))
    else:
        payload["replay"] = replay
        print(_dump(payload))
    print(f"runtime: {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

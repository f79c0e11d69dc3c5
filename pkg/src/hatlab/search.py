"""Backtracking decision procedure for PS(correct>=n) / PS(errors<=n) on
finite games, plus family hunts over enumerated games."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product

from .digraphs import MODES, canonical_mask, enumerate_digraphs, mask_of
from .errors import HatError, RequiresIntColors, SpaceTooLarge
from .evaluator import Goal, evaluate_exhaustive, parse_goal, ps_membership
from .game import ColorSpace, Game, condition_profile, make_game, validate_game
from .strategies import Predictor, find_cycle, table_from_json, table_predictor, table_strategy

SAT, UNSAT, UNKNOWN = "SAT", "UNSAT", "Unknown"
DEFAULT_BUDGET = 10 ** 7
DEFAULT_CAP = 2 ** 22


@dataclass
class SearchCertificate:
    verdict: str
    game: Game
    goal: Goal
    tables: list | None
    nodes_explored: int
    budget_used: int
    options: dict = field(default_factory=dict)

    @property
    def sat(self) -> bool:
        return self.verdict == SAT

    def predictor(self) -> Predictor:
        if self.tables is None:
            raise HatError(f"a {self.verdict} certificate carries no strategy")
        return table_predictor(self.game, self.tables, name="search")

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "goal": str(self.goal),
            "nodes_explored": self.nodes_explored,
            "budget_used": self.budget_used,
            "options": self.options,
            "game": self.game.to_spec(),
            "tables": None if self.tables is None else [t.to_json() for t in self.tables],
        }

    @classmethod
    def from_json(cls, obj: dict) -> SearchCertificate:
        game = validate_game(obj["game"])
        tables = obj.get("tables")
        if tables is not None:
            tables = [table_from_json(game, t) for t in tables]
        return cls(obj["verdict"], game, parse_goal(obj["goal"]), tables,
                   obj["nodes_explored"], obj["budget_used"], obj.get("options", {}))


def _check_searchable(game: Game, cap: int):
    if game.is_omega:
        raise SpaceTooLarge(float("inf"), cap)
    if not game.colors.finite:
        raise RequiresIntColors("search needs mod(n) colors")
    k, n = game.colors.n, game.n
    tables = sum(k ** (len(game.heard(a)) + len(game.seen(a))) for a in range(n))
    if tables > cap or k ** n > cap:
        raise SpaceTooLarge(max(tables, k ** n), cap)


def decide_ps(game: Game, goal: Goal, budget: int = DEFAULT_BUDGET, *, symmetry: bool = False,
              prune: bool = True, cap: int = DEFAULT_CAP) -> SearchCertificate:
    """Lazy table-filling backtracking.

    Colorings are scanned lexicographically.  Whenever a prisoner consults a
    table entry that is still unset, the entry becomes a branch point tried
    with colors 0, 1, ... in order.  A coloring that misses the goal sends the
    search back to the most recent branch point with colors left.  Each color
    tried counts as one node; hitting ``budget`` yields Unknown.

    ``prune`` enables two sound cuts.  A coloring fails as soon as the
    prisoners still to declare cannot reach the goal.  For single-inning
    games a counting bound is also applied after each passing coloring: every
    unset entry can repair at most one remaining coloring per hat value, and
    if all such repairs together cannot cover the outstanding deficit, the
    branch is dead.

    ``symmetry`` pins the first branched entry to 0.  Relabeling the colors
    of that entry's owner (a bijection on their hat and their guess alike)
    maps predictors to predictors with the same correct sets, so some
    solution has that entry at 0 if any solution exists.
    """
    _check_searchable(game, cap)
    n, k = game.n, game.colors.n
    opts = {"budget": budget, "symmetry": symmetry, "prune": prune}
    need = goal.required_correct(n)

    def cert(verdict, tables, nodes):
        ts = None
        if tables is not None:
            ts = [table_strategy(game, a, [max(c, 0) for c in tables[a]]) for a in range(n)]
        return SearchCertificate(verdict, game, goal, ts, nodes, nodes, opts)

    heard = [sorted(game.heard(a)) for a in range(n)]
    seen = [sorted(game.seen(a)) for a in range(n)]
    sizes = [k ** (len(heard[a]) + len(seen[a])) for a in range(n)]
    if need <= 0:
        return cert(SAT, [[0] * s for s in sizes], 0)
    if need > n:
        return cert(UNSAT, None, 0)

    order = game.declaration_order()
    colorings = list(product(range(k), repeat=n))
    N = len(colorings)
    hmul = [k ** len(seen[a]) for a in range(n)]
    vkey = []
    for a in range(n):
        col = []
        for f in colorings:
            v = 0
            for b in seen[a]:
                v = v * k + f[b]
            col.append(v)
        vkey.append(col)
    tables = [[-1] * s for s in sizes]
    simultaneous = game.IN == 1
    cutoff = prune

    def bound_ok(start: int) -> bool:
        deficit = 0
        gain: dict = defaultdict(int)
        for j in range(start, N):
            f = colorings[j]
            matched = 0
            unset = []
            for a in range(n):
                key = vkey[a][j]
                c = tables[a][key]
                if c < 0:
                    unset.append((a, key, f[a]))
                elif c == f[a]:
                    matched += 1
            d = need - matched
            if d > 0:
                if d > len(unset):
                    return False
                deficit += d
                for u in unset:
                    gain[u] += 1
        supply: dict = defaultdict(int)
        for (a, key, _), g in gain.items():
            if g > supply[(a, key)]:
                supply[(a, key)] = g
        return deficit <= sum(supply.values())

    if prune and simultaneous and not bound_ok(0):
        return cert(UNSAT, None, 0)

    stack: list = []  # frames [prisoner, key, value, coloring index]
    nodes = 0
    i = 0
    decl = [0] * n
    while True:
        if i == N:
            return cert(SAT, tables, nodes)
        f = colorings[i]
        correct = 0
        left = n
        ok = True
        for a in order:
            key = vkey[a][i]
            if heard[a]:
                h = 0
                for b in heard[a]:
                    h = h * k + decl[b]
                key += h * hmul[a]
            t = tables[a]
            c = t[key]
            if c < 0:
                if nodes >= budget:
                    return cert(UNKNOWN, None, nodes)
                nodes += 1
                c = 0
                t[key] = 0
                stack.append([a, key, 0, i])
            decl[a] = c
            left -= 1
            if c == f[a]:
                correct += 1
            elif cutoff and correct + left < need:
                ok = False
                break
        if ok and correct < need:
            ok = False
        if ok and prune and simultaneous and not bound_ok(i + 1):
            ok = False
        if ok:
            i += 1
            continue
        while stack:
            top = stack[-1]
            a, key, val, ci = top
            if val + 1 < k and not (symmetry and len(stack) == 1):
                if nodes >= budget:
                    return cert(UNKNOWN, None, nodes)
                nodes += 1
                top[2] = val + 1
                tables[a][key] = val + 1
                i = ci
                break
            tables[a][key] = -1
            stack.pop()
        else:
            return cert(UNSAT, None, nodes)


def verify_certificate(c: SearchCertificate) -> bool:
    """SAT: the tables meet the goal on every coloring.  UNSAT/Unknown: a
    fresh run with the same options reproduces the verdict and node count."""
    if c.verdict == SAT:
        return ps_membership(evaluate_exhaustive(c.game, c.predictor()), c.goal)
    again = decide_ps(c.game, c.goal, c.options.get("budget", DEFAULT_BUDGET),
                      symmetry=c.options.get("symmetry", False), prune=c.options.get("prune", True))
    return again.verdict == c.verdict and again.nodes_explored == c.nodes_explored


# ---------------------------------------------------------------------------
# hunts

@dataclass(frozen=True)
class FamilySpec:
    """A finite family of games.

    ``innings`` lists the allowed inning counts.  ``first_size`` fixes how
    many prisoners declare in the first inning: an int, None for no
    constraint, or "auto" (two when there are several innings, free
    otherwise).
    """

    prisoners: tuple = (3,)
    colors: ColorSpace = ColorSpace.mod(2)
    innings: tuple = (1,)
    first_size: int | str | None = "auto"
    visibility: str = "all"

    def __post_init__(self):
        if self.visibility not in MODES:
            raise HatError(f"unknown visibility mode {self.visibility!r}")
        if not self.colors.finite:
            raise RequiresIntColors("families need mod(n) colors")
        if not (self.first_size in (None, "auto") or isinstance(self.first_size, int)):
            raise HatError(f"first_size must be an int, 'auto' or None, got {self.first_size!r}")

    def first_constraint(self, IN: int):
        if self.first_size == "auto":
            return 2 if IN >= 2 else None
        return self.first_size

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """``n=2..3,colors=2,IN=2,first=2,vis=all`` style descriptions."""
        kw: dict = {}
        for part in filter(None, (p.strip() for p in text.split(","))):
            if "=" not in part:
                raise HatError(f"family field {part!r} needs key=value")
            key, val = (s.strip() for s in part.split("=", 1))
            if key in ("n", "prisoners"):
                kw["prisoners"] = _int_range(val)
            elif key == "colors":
                kw["colors"] = ColorSpace.mod(int(val))
            elif key in ("IN", "innings"):
                kw["innings"] = _int_range(val)
            elif key in ("first", "first_size"):
                kw["first_size"] = None if val == "any" else val if val == "auto" else int(val)
            elif key in ("vis", "visibility"):
                kw["visibility"] = val
            else:
                raise HatError(f"unknown family field {key!r}")
        return cls(**kw)

    def to_json(self) -> dict:
        return {"prisoners": list(self.prisoners), "colors": self.colors.to_json(),
                "innings": list(self.innings), "first_size": self.first_size,
                "visibility": self.visibility}


def _int_range(val: str) -> tuple:
    if ".." in val:
        lo, hi = val.split("..")
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(int(v) for v in val.split("|"))


def _inning_patterns(n: int, IN: int, first_size):
    for pat in product(range(1, IN + 1), repeat=n):
        if set(pat) != set(range(1, IN + 1)):
            continue
        if first_size is not None and pat.count(1) != first_size:
            continue
        yield pat


def enumerate_family(family: FamilySpec):
    """Games in order of prisoner count, inning count, inning pattern and
    visibility mask."""
    for n in family.prisoners:
        if n < 1:
            continue
        graph_mode = "connected-only" if family.visibility == "connected-only" else "all"
        for IN in family.innings:
            if IN < 1 or IN > n:
                continue
            for pat in _inning_patterns(n, IN, family.first_constraint(IN)):
                for edges in enumerate_digraphs(n, graph_mode):
                    if family.visibility == "up-to-iso" and \
                            canonical_mask(edges, n, pat) != (pat, mask_of(edges, n)):
                        continue
                    vis = [sorted(b for (x, b) in edges if x == a) for a in range(n)]
                    yield make_game(n, family.colors, vis, pat)


def game_profile(game: Game) -> dict:
    prof = {"IN": game.IN, "first_inning_size": len(game.inning_set(1)),
            "cyclic": find_cycle(game) is not None, "complete": game.is_complete()}
    if game.IN >= 2:
        prof.update(condition_profile(game))
    return prof


def theory_flags(game: Game, prof: dict, goal: Goal, verdict: str) -> list[str]:
    """Compare a verdict with the proven directions that apply to the game.
    Mismatches read ``violates:<name>``; open-question probes ``q1:``/``q2:``."""
    if verdict == UNKNOWN:
        return []
    sat = verdict == SAT
    k, n = game.colors.n, game.n
    flags = []

    def expect(name, want):
        flags.append(f"{'agrees' if want == sat else 'violates'}:{name}")

    if game.IN == 1 and goal == Goal("correct", 1):
        if k == 2:
            expect("two-color-cyclic", prof["cyclic"])
        if n == k:
            expect("square-complete", prof["complete"])
        if n < k:
            expect("counting", False)
    if game.IN >= 2 and goal == Goal("errors", 1):
        s12 = prof["S1"] and prof["S2"]
        s456 = prof["S4"] and prof["S5"] and prof["S6"]
        if s12:
            expect("hint-sum", True)
        if k == 2 and s456:
            expect("dual-hint", True)
        if k >= 3 and prof["S3"]:
            expect("finite-converse", s12)
        if k == 2 and sat and not s456:
            flags.append("q1:sat-without-S4S5S6")
        if k >= 3 and not prof["S3"] and sat and not s12:
            flags.append("q2:sat-without-S1S2")
    return flags


def hunt(family: FamilySpec, goal: Goal, budget: int = DEFAULT_BUDGET, *, symmetry: bool = False):
    """Yield one findings row per game of the family."""
    for game in enumerate_family(family):
        prof = game_profile(game)
        c = decide_ps(game, goal, budget, symmetry=symmetry)
        yield {"game": game.to_spec(), "profile": prof, "verdict": c.verdict,
               "nodes": c.nodes_explored, "flags": theory_flags(game, prof, goal, c.verdict)}

"""Named theorem checks over small exhaustive corpora."""
from __future__ import annotations

import inspect
import random
import time
from dataclasses import dataclass, field
from itertools import product

from .digraphs import enumerate_digraphs
from .errors import BudgetExceeded, HatError, UnknownTheorem
from .evaluator import (
    Goal,
    average_correct_check,
    evaluate_exhaustive,
    evaluate_sampled,
    ps_membership,
    zero_correct_coloring,
)
from .game import ColorSpace, Game, make_game, omega_game
from .parity import check_parity_equation, finite_parity, parity_from_robust_fep
from .search import SAT, UNKNOWN, FamilySpec, decide_ps, enumerate_family, game_profile, verify_certificate
from .strategies import (
    Predictor,
    RuleStrategy,
    cycle_parity_predictor,
    dual_hint_predictor,
    find_cycle,
    finite_support_fep,
    hint_sum_predictor,
    mod_sum_predictor,
    parity_hint_predictor,
    random_table_predictor,
    rehost,
    restrict_colors,
    restrict_to_first_inning,
    run_predictor,
)

__all__ = ["TheoremReport", "check_theorem", "enumerate_digraphs", "THEOREMS"]


@dataclass
class TheoremReport:
    name: str
    params: dict
    instances: int = 0
    consistent: int = 0
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    runtime: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, good: bool, witness: dict | None = None) -> None:
        self.instances += 1
        if good:
            self.consistent += 1
        else:
            self.violations.append(witness or {})

    def to_json(self, include_runtime: bool = False) -> dict:
        out = {"theorem": self.name, "params": self.params, "instances": self.instances,
               "consistent": self.consistent, "violations": self.violations, "notes": self.notes}
        if include_runtime:
            out["runtime"] = round(self.runtime, 3)
        return out


def _vis(edges, n):
    return [sorted(b for (x, b) in edges if x == a) for a in range(n)]


def _decide(game, goal, budget):
    c = decide_ps(game, goal, budget)
    if c.verdict == UNKNOWN:
        raise BudgetExceeded(f"search budget {budget} exhausted on {game.to_spec()}")
    return c


def _predictor_json(p: Predictor) -> dict:
    return p.describe()


# ---------------------------------------------------------------------------
# individual checks

def _f2vcyclic(rep, n=3, budget=10 ** 7):
    goal = Goal("correct", 1)
    for edges in enumerate_digraphs(n):
        game = make_game(n, 2, _vis(edges, n))
        cycle = find_cycle(game)
        c = _decide(game, goal, budget)
        good = (c.verdict == SAT) == (cycle is not None)
        if good and c.sat:
            good = verify_certificate(c)
        if good and cycle is not None:
            rp = evaluate_exhaustive(game, cycle_parity_predictor(game, cycle))
            good = ps_membership(rp, goal)
        rep.record(good, {"game": game.to_spec(), "verdict": c.verdict, "cycle": cycle,
                          "tables": None if c.tables is None else [t.to_json() for t in c.tables]})


def _ffvcomplete(rep, n=3, budget=10 ** 7):
    goal = Goal("correct", 1)
    for edges in enumerate_digraphs(n):
        game = make_game(n, n, _vis(edges, n))
        c = _decide(game, goal, budget)
        good = (c.verdict == SAT) == game.is_complete()
        if good and game.is_complete():
            ms = evaluate_exhaustive(game, mod_sum_predictor(game))
            good = ms.min_correct == 1 and ms.histogram == {1: n ** n} and verify_certificate(c)
        rep.record(good, {"game": game.to_spec(), "verdict": c.verdict})


def _average(rep, n=3, k=2, count=100, seed=0):
    game = make_game(n, k)
    rng = random.Random(f"average:{seed}:{n}:{k}")
    for _ in range(count):
        p = random_table_predictor(game, rng)
        rep.record(average_correct_check(game, p), {"game": game.to_spec(), "predictor": _predictor_json(p)})
    rep.notes.append(f"expected total {n * k ** (n - 1)} per predictor")


def _s1s3_games(n, k):
    fam = FamilySpec((n,), ColorSpace.mod(k), tuple(range(2, n + 1)), 1, "all")
    for game in enumerate_family(fam):
        prof = game_profile(game)
        if prof["S1"] and prof["S3"]:
            yield game


def useful_properties(game: Game, p: Predictor) -> list[str]:
    """Names of the useful-property clauses that fail for p (empty if all hold).
    Clause 4 is checked only between histories reached on some coloring."""
    n, k = game.n, game.colors.n
    (s,) = game.inning_set(1)
    failed = []
    if set(game.seen(s)) != set(range(n)) - {s}:
        failed.append("1:first-speaker-sees-all")
    colorings = list(product(range(k), repeat=n))
    recs = {f: run_predictor(game, p, f) for f in colorings}
    if any(r.errors - {s} for r in recs.values()):
        failed.append("2:errors-only-at-first-speaker")
    three = True
    for f, r in recs.items():
        for a in range(n):
            if a == s:
                continue
            for c in range(k):
                if c != f[a]:
                    g = f[:a] + (c,) + f[a + 1:]
                    if recs[g].guess(s) == r.guess(s):
                        three = False
    if not three:
        failed.append("3:other-hats-move-first-guess")
    # reachable (history, view) pairs per prisoner, keyed by the history's
    # first-speaker digit and the remaining context
    reach: dict = {}
    for f, r in recs.items():
        for a in range(n):
            if a == s:
                continue
            heard = sorted(game.heard(a))
            hist = tuple(r.guess(b) for b in heard)
            view = tuple(f[b] for b in sorted(game.seen(a)))
            pos = heard.index(s)
            rest = hist[:pos] + hist[pos + 1:]
            reach.setdefault((a, rest, view), {})[hist[pos]] = r.guess(a)
    checked = 0
    four = True
    for outs in reach.values():
        vals = list(outs.values())
        checked += len(vals) * (len(vals) - 1) // 2
        if len(set(vals)) != len(vals):
            four = False
    if not four:
        failed.append("4:first-guess-moves-later-guesses")
    if checked == 0 and n > 1:
        failed.append("4:no-reachable-pairs")
    return failed


def _useful_props(rep, n=3, ks=(2, 3), budget=10 ** 7):
    goal = Goal("errors", 1)
    sat = 0
    for k in ks:
        for game in _s1s3_games(n, k):
            c = _decide(game, goal, budget)
            if not c.sat:
                continue
            sat += 1
            p = c.predictor()
            failed = useful_properties(game, p)
            rep.record(not failed, {"game": game.to_spec(), "failed": failed,
                                    "tables": [t.to_json() for t in c.tables]})
    rep.notes.append(f"{sat} SAT games with S1 and S3 examined")


def _after_ffva(rep, n=3, ks=(3,), budget=10 ** 7):
    goal = Goal("errors", 1)
    for k in ks:
        if k < 3:
            raise HatError("after-ffva needs at least 3 colors")
        fam = FamilySpec((n,), ColorSpace.mod(k), tuple(range(2, n + 1)), None, "all")
        for game in enumerate_family(fam):
            prof = game_profile(game)
            if not prof["S3"]:
                continue
            c = _decide(game, goal, budget)
            rep.record(c.sat == (prof["S1"] and prof["S2"]),
                       {"game": game.to_spec(), "verdict": c.verdict, "profile": prof})


def _named_games():
    return [
        ("G52", make_game(5, 2, "complete", [1, 2, 2, 2, 2]), hint_sum_predictor),
        ("G52chain", make_game(5, 2, [[1, 2, 3, 4], [2, 3, 4], [3, 4], [4], []], [1, 2, 3, 4, 5]),
         hint_sum_predictor),
        ("G3dual", make_game(3, 2, "complete", [1, 1, 2]), dual_hint_predictor),
        ("G5dual", make_game(5, 2, "complete", [1, 1, 2, 2, 2]), dual_hint_predictor),
    ]


def _first_group(rep, n=3, ks=(2, 3), budget=10 ** 7):
    goal = Goal("errors", 1)

    def check(game, p, label):
        for fill in game.colors.values():
            sub, q = restrict_to_first_inning(game, p, fill)
            r = evaluate_exhaustive(sub, q)
            rep.record(r.max_errors <= 1, {"source": label, "game": game.to_spec(), "fill": fill,
                                           "witness": r.witnesses[min(r.witnesses)][1]})

    for label, game, build in _named_games():
        check(game, build(game), label)
    for k in ks:
        fam = FamilySpec((n,), ColorSpace.mod(k), tuple(range(2, n + 1)), None, "all")
        for game in enumerate_family(fam):
            c = _decide(game, goal, budget)
            if c.sat:
                check(game, c.predictor(), "search")


def _robust_parity(rep, trials=1000, samples=100, seed=0):
    space = ColorSpace.integers()
    fep_game = omega_game(space)
    phi = parity_from_robust_fep(fep_game, finite_support_fep(fep_game), seed=seed)
    chk = check_parity_equation(phi, trials, seed)
    rep.record(chk.ok, {"check": "parity-equation", "failures": chk.failures[:5]})
    ref = finite_parity(space, "omega finite-support")
    rng_seed = f"{seed}:agree"
    rngx = random.Random(rng_seed)
    from .evaluator import sample_coloring
    bad = [f.to_json() for f in (sample_coloring(fep_game, rngx) for _ in range(samples)) if phi(f) != ref(f)]
    rep.record(not bad, {"check": "agrees-with-negated-sum", "colorings": bad[:5]})
    hint_game = omega_game(space, innings={0: 1}, default=2)
    p = parity_hint_predictor(hint_game, phi)
    r = evaluate_sampled(hint_game, p, samples, seed)
    rep.record(r.max_errors <= 1, {"check": "parity-hint-errors", "report": r.to_json()})


def _projection_predictor(game: Game, seed: int) -> Predictor:
    """An integer-colored simultaneous predictor: a seeded affine rule."""
    rng = random.Random(f"projection:{seed}:{game.n}")
    coef = {a: {b: rng.randrange(-3, 4) for b in game.seen(a)} for a in range(game.n)}
    off = {a: rng.randrange(-5, 6) for a in range(game.n)}
    strats = {a: RuleStrategy("affine", {}, (lambda a: lambda h, v: off[a] + sum(
        coef[a][b] * v[b] for b in coef[a]))(a)) for a in range(game.n)}
    return Predictor(game, "affine", {"seed": seed}, strats.__getitem__)


def _after_fiva(rep, n=3, budget=10 ** 7, seed=0):
    rep.notes.append("infinite colors cannot be searched; each game lacking S1 is checked through "
                     "its first-inning subgame with colors restricted to mod(|A_1|+1)")
    fam = FamilySpec((n,), ColorSpace.mod(2), tuple(range(2, n + 1)), None, "all")
    seen_subgames = set()
    for game in enumerate_family(fam):
        prof = game_profile(game)
        if prof["S1"] or not prof["S3"]:
            continue
        first = sorted(game.inning_set(1))
        m = len(first)
        idx = {a: i for i, a in enumerate(first)}
        vis = [sorted(idx[b] for b in game.seen(a) if b in idx) for a in first]
        key = (m, tuple(map(tuple, vis)))
        if key in seen_subgames:
            continue
        seen_subgames.add(key)
        finite_sub = make_game(m, m + 1, vis)
        c = _decide(finite_sub, Goal("correct", 1), budget)
        int_sub = finite_sub.with_colors(ColorSpace.integers())
        p = _projection_predictor(int_sub, seed)
        q = rehost(restrict_colors(int_sub, p, range(m + 1), 0), finite_sub)
        f = zero_correct_coloring(finite_sub, q)
        good = c.verdict != SAT and f is not None and not run_predictor(int_sub, p, f).match
        rep.record(good, {"subgame": finite_sub.to_spec(), "verdict": c.verdict,
                          "coloring": None if f is None else list(f)})


THEOREMS = {
    "f2vcyclic": _f2vcyclic,
    "ffvcomplete": _ffvcomplete,
    "average": _average,
    "useful-props": _useful_props,
    "after-ffva": _after_ffva,
    "after-fiva": _after_fiva,
    "first-group": _first_group,
    "robust-parity": _robust_parity,
}


def check_theorem(name: str, params: dict | None = None) -> TheoremReport:
    if name not in THEOREMS:
        raise UnknownTheorem(f"unknown theorem {name!r}; choose from {sorted(THEOREMS)}")
    params = dict(params or {})
    rep = TheoremReport(name, {k: (list(v) if isinstance(v, tuple) else v) for k, v in params.items()})
    try:
        inspect.signature(THEOREMS[name]).bind(rep, **params)
    except TypeError as e:
        raise HatError(f"bad parameters for {name}: {e}") from None
    t = time.perf_counter()
    THEOREMS[name](rep, **params)
    rep.runtime = time.perf_counter() - t
    return rep

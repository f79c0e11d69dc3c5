"""Strategies, predictors, inning-by-inning execution, and the closed-form
predictor constructions.

A strategy is any callable ``(history, view) -> color`` where both
arguments are ``PartialColoring`` objects: the declarations heard so far and
the hats seen.  Prisoners in the first inning always get an empty history.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import prod
from typing import Callable, Mapping

from .errors import (
    FillOutsideSubcolors,
    HatError,
    InapplicableConditions,
    MismatchedPredictor,
    NotACycle,
    ParityDomainMismatch,
    PredictorError,
    RequiresCompleteVisibility,
    RequiresIntColors,
    RequiresMultiInning,
    RequiresOmegaCompleteSimultaneous,
    RequiresS1S2,
    RequiresS1S4,
    RequiresS4S5S6,
    RequiresSimultaneous,
    RequiresSquareGame,
    RequiresTwoColors,
)
from .game import (
    ALL,
    Cofinite,
    ColorSpace,
    Game,
    PartialColoring,
    condition_profile,
    make_game,
    view_of,
)
from .parity import ParityFunction, decode_ints, encode_ints

EMPTY = PartialColoring(frozenset(), {})


# ---------------------------------------------------------------------------
# strategies

@dataclass(frozen=True)
class RuleStrategy:
    """A closed-form strategy; ``name`` and ``params`` describe the rule."""

    name: str
    params: Mapping = field(default_factory=dict)
    rule: Callable = field(default=None, compare=False, repr=False)

    def __call__(self, history: PartialColoring, view: PartialColoring) -> int:
        return self.rule(history, view)


@dataclass(frozen=True)
class TableStrategy:
    """Explicit strategy table for one prisoner.

    Entries are indexed mixed-radix, most significant digit first: heard
    declarations in ascending prisoner order, then seen hats likewise.
    """

    prisoner: int
    heard: tuple
    seen: tuple
    k: int
    table: tuple

    def __post_init__(self):
        if len(self.table) != self.size:
            raise ValueError(f"table for prisoner {self.prisoner} needs {self.size} entries, got {len(self.table)}")
        if any(not (isinstance(c, int) and 0 <= c < self.k) for c in self.table):
            raise ValueError(f"table for prisoner {self.prisoner} has entries outside mod({self.k})")

    @property
    def radix(self) -> list[int]:
        return [self.k] * (len(self.heard) + len(self.seen))

    @property
    def size(self) -> int:
        return self.k ** (len(self.heard) + len(self.seen))

    def index(self, history: PartialColoring, view: PartialColoring) -> int:
        i = 0
        for b in self.heard:
            i = i * self.k + history[b]
        for b in self.seen:
            i = i * self.k + view[b]
        return i

    def __call__(self, history, view) -> int:
        return self.table[self.index(history, view)]

    def to_json(self) -> dict:
        return {"prisoner": self.prisoner, "radix": self.radix, "table": list(self.table)}


def _table_shape(game: Game, a: int) -> tuple[tuple, tuple]:
    return tuple(sorted(game.heard(a))), tuple(sorted(game.seen(a)))


def table_strategy(game: Game, a: int, table) -> TableStrategy:
    heard, seen = _table_shape(game, a)
    return TableStrategy(a, heard, seen, game.colors.n, tuple(table))


def table_from_json(game: Game, obj: Mapping) -> TableStrategy:
    a = game.check(obj["prisoner"])
    strat = table_strategy(game, a, obj["table"])
    if list(obj.get("radix", strat.radix)) != strat.radix:
        raise MismatchedPredictor(f"radix for prisoner {a} does not match the game")
    return strat


# ---------------------------------------------------------------------------
# predictors

@dataclass(frozen=True)
class Predictor:
    game: Game
    name: str
    params: Mapping
    strategy_for: Callable = field(compare=False, repr=False)
    tables: Mapping | None = field(default=None, compare=False, repr=False)

    def strategy(self, a: int):
        return self.strategy_for(a)

    @property
    def strategies(self) -> dict:
        return {a: self.strategy(a) for a in range(self.game.n)}

    def describe(self) -> dict:
        out = {"name": self.name, "params": dict(self.params)}
        if self.tables is not None:
            out["tables"] = [self.tables[a].to_json() for a in sorted(self.tables)]
        return out


def table_predictor(game: Game, tables, name: str = "tables") -> Predictor:
    """``tables`` maps prisoner -> flat entry list, or is a list of the
    JSON table objects."""
    if not game.colors.finite or game.is_omega:
        raise MismatchedPredictor("table predictors need a finite game with mod(n) colors")
    if isinstance(tables, Mapping):
        strats = {a: table_strategy(game, a, t) for a, t in tables.items()}
    else:
        strats = {}
        for obj in tables:
            s = obj if isinstance(obj, TableStrategy) else table_from_json(game, obj)
            strats[s.prisoner] = s
    if set(strats) != set(range(game.n)):
        raise MismatchedPredictor("need exactly one table per prisoner")
    for a, s in strats.items():
        if (s.heard, s.seen) != _table_shape(game, a) or s.k != game.colors.n:
            raise MismatchedPredictor(f"table for prisoner {a} does not match its view/history")
    return Predictor(game, name, {}, strats.__getitem__, strats)


def constant_predictor(game: Game, c: int = 0) -> Predictor:
    sizes = {a: game.colors.n ** (len(game.heard(a)) + len(game.seen(a))) for a in range(game.n)}
    p = table_predictor(game, {a: [c] * s for a, s in sizes.items()}, name="constant")
    return Predictor(game, "constant", {"color": c}, p.strategy_for, p.tables)


def random_table_predictor(game: Game, rng: random.Random) -> Predictor:
    k = game.colors.n
    tables = {}
    for a in range(game.n):
        size = k ** (len(game.heard(a)) + len(game.seen(a)))
        tables[a] = [rng.randrange(k) for _ in range(size)]
    return table_predictor(game, tables, name="random-tables")


def _rule_predictor(game, name, params, rules: Callable[[int], Callable]) -> Predictor:
    cache = {}

    def strategy_for(a):
        if a not in cache:
            cache[a] = RuleStrategy(name, params, rules(a))
        return cache[a]

    return Predictor(game, name, params, strategy_for)


# ---------------------------------------------------------------------------
# execution

@dataclass(frozen=True)
class GuessRecord:
    guesses: object  # tuple, or PartialColoring over omega
    match: object
    errors: object

    def guess(self, a: int) -> int:
        return self.guesses[a]

    @property
    def finite_errors(self) -> bool:
        return not isinstance(self.errors, Cofinite)

    @property
    def n_errors(self) -> int:
        return len(self.errors)

    @property
    def n_correct(self) -> int:
        return len(self.match)


def run_predictor(game: Game, p: Predictor, f) -> GuessRecord:
    """Declare inning by inning and compare with the coloring."""
    if p.game != game:
        raise MismatchedPredictor(f"predictor {p.name} was built for a different game")
    if game.is_omega:
        return _run_omega(game, p, f)
    space = game.colors
    n = game.n
    if len(f) != n:
        raise MismatchedPredictor(f"coloring has {len(f)} entries for {n} prisoners")
    decl = [None] * n
    for a in game.declaration_order():
        heard = game.heard(a)
        hist = PartialColoring(heard, {b: decl[b] for b in heard}) if heard else EMPTY
        c = p.strategy(a)(hist, view_of(game, a, f))
        if not space.contains(c):
            raise PredictorError(f"prisoner {a} declared {c!r}, not a color of {space}")
        decl[a] = c
    guesses = tuple(decl)
    match = frozenset(a for a in range(n) if guesses[a] == f[a])
    return GuessRecord(guesses, match, frozenset(range(n)) - match)


def _run_omega(game: Game, p: Predictor, f: PartialColoring) -> GuessRecord:
    # Declarations are computed for the exceptional prisoners, the support of
    # f, and two fresh default prisoners; every other prisoner is a default
    # prisoner outside the support and must declare what the fresh ones do.
    if not isinstance(f, PartialColoring) or f.domain != ALL or f.base != 0:
        raise MismatchedPredictor("omega colorings are finite-support PartialColorings")
    space = game.colors
    reps = game.representatives(f.values)
    probe1, probe2 = reps[-2], reps[-1]
    default = game.innings.default
    decl: dict[int, int] = {}
    base = {}
    for beta in range(1, game.IN + 1):
        members = [a for a in reps if game.inning(a) == beta]
        for a in members:
            heard = game.heard(a)
            if isinstance(heard, Cofinite):
                hist = PartialColoring(heard, {b: decl[b] for b in reps if b in heard}, base[default])
            elif heard:
                hist = PartialColoring(heard, {b: decl[b] for b in heard})
            else:
                hist = EMPTY
            c = p.strategy(a)(hist, view_of(game, a, f))
            if not space.contains(c):
                raise PredictorError(f"prisoner {a} declared {c!r}, not a color of {space}")
            decl[a] = c
        if beta == default:
            if decl[probe1] != decl[probe2]:
                raise PredictorError(f"predictor {p.name} is not uniform on default prisoners")
            base[beta] = decl[probe1]
    b0 = base[default]
    guesses = PartialColoring(ALL, decl, b0)
    agree = frozenset(a for a in reps if decl[a] == f[a])
    if b0 == 0:
        errors = frozenset(reps) - agree
        match = Cofinite(errors)
    else:
        match = agree
        errors = Cofinite(agree)
    return GuessRecord(guesses, match, errors)


# ---------------------------------------------------------------------------
# constructions

def _profile(game: Game, err) -> dict:
    try:
        return condition_profile(game)
    except InapplicableConditions as exc:
        raise err(str(exc)) from None


def _only(s) -> int:
    (x,) = tuple(s)
    return x


def mod_sum_predictor(game: Game) -> Predictor:
    """Prisoner m declares m minus the sum of the hats it sees."""
    if game.is_omega:
        raise RequiresSquareGame("mod-sum needs finitely many prisoners")
    if game.IN != 1:
        raise RequiresSimultaneous("mod-sum needs a single inning")
    if game.colors.n != game.n:
        raise RequiresSquareGame(f"need mod({game.n}) colors for {game.n} prisoners, got {game.colors}")
    if not game.is_complete():
        raise RequiresCompleteVisibility("mod-sum needs every prisoner to see every other hat")
    space = game.colors

    def rules(m):
        return lambda h, v: space.sub(m, v.total(space))

    return _rule_predictor(game, "mod-sum", {}, rules)


def cycle_parity_predictor(game: Game, cycle) -> Predictor:
    """The head of a directed cycle guesses its successor's hat; the other
    members guess the complement of their successor's hat."""
    if game.colors != ColorSpace.mod(2):
        raise RequiresTwoColors("cycle-parity needs mod(2) colors")
    if game.IN != 1:
        raise RequiresSimultaneous("cycle-parity needs a single inning")
    cycle = list(cycle)
    if len(cycle) < 2 or len(set(cycle)) != len(cycle):
        raise NotACycle(f"{cycle} is not a cycle")
    for a in cycle:
        game.check(a)
    succ = {a: cycle[(i + 1) % len(cycle)] for i, a in enumerate(cycle)}
    for a, b in succ.items():
        if not game.sees(a, b):
            raise NotACycle(f"{a} does not see {b}")
    head = cycle[0]

    def rules(a):
        if a == head:
            return lambda h, v: v[succ[a]]
        if a in succ:
            return lambda h, v: 1 - v[succ[a]]
        return lambda h, v: 0

    return _rule_predictor(game, "cycle-parity", {"cycle": cycle}, rules)


def find_cycle(game: Game) -> list[int] | None:
    """Some directed cycle of V, or None when V is acyclic."""
    n = game.n
    color = [0] * n
    parent = [-1] * n
    for root in range(n):
        if color[root]:
            continue
        stack = [(root, iter(sorted(game.visibility[root])))]
        color[root] = 1
        while stack:
            a, it = stack[-1]
            b = next(it, None)
            if b is None:
                color[a] = 2
                stack.pop()
            elif color[b] == 0:
                color[b] = 1
                parent[b] = a
                stack.append((b, iter(sorted(game.visibility[b]))))
            elif color[b] == 1:
                cyc = [a]
                while cyc[-1] != b:
                    cyc.append(parent[cyc[-1]])
                return list(reversed(cyc))
    return None


def hint_sum_predictor(game: Game) -> Predictor:
    """The single first speaker announces the sum of all hats it sees; the
    others subtract what they hear and see from it."""
    prof = _profile(game, RequiresS1S2)
    if not (prof["S1"] and prof["S2"]):
        raise RequiresS1S2(f"hint-sum needs S1 and S2, got {prof}")
    s = _only(game.inning_set(1))
    if game.seen(s) != game.prisoner_set() - {s}:
        raise RequiresS1S2("the first speaker must see every other hat")
    space = game.colors

    def rules(a):
        if a == s:
            return lambda h, v: v.total(space)

        def later(h, v):
            heard_rest = h.without({s}).total(space)
            seen_rest = v.restrict(v.domain - h.domain).total(space)
            return space.sub(space.sub(h[s], heard_rest), seen_rest)
        return later

    return _rule_predictor(game, "hint-sum", {"speaker": s}, rules)


def dual_hint_predictor(game: Game) -> Predictor:
    """Two first speakers; exactly one is right, and its identity tells the
    rest the parity of all hats."""
    if game.colors != ColorSpace.mod(2):
        raise RequiresTwoColors("dual-hint needs mod(2) colors")
    prof = _profile(game, RequiresS4S5S6)
    if not (prof["S4"] and prof["S5"] and prof["S6"]):
        raise RequiresS4S5S6(f"dual-hint needs S4, S5 and S6, got {prof}")
    s0, s1 = sorted(game.inning_set(1))
    first = {s0, s1}
    space = game.colors

    def rules(a):
        if a in first:
            i = 0 if a == s0 else 1
            other = s1 if i == 0 else s0
            return lambda h, v: space.sub(space.add(v.without({other}).total(space), i), v[other])

        def later(h, v):
            ibar = space.sum(i for i, si in enumerate((s0, s1)) if h[si] == v[si])
            out = space.sub(ibar, space.add(v[s0], v[s1]))
            out = space.sub(out, h.without(first).total(space))
            rest = v.restrict(v.domain - h.domain).without(first)
            return space.sub(out, rest.total(space))
        return later

    return _rule_predictor(game, "dual-hint", {"speakers": [s0, s1]}, rules)


def bijection_hint_predictor(game: Game) -> Predictor:
    """The first speaker encodes every other hat into one integer; everyone
    else decodes its own coordinate."""
    if game.colors.kind != "int":
        raise RequiresIntColors("bijection-hint needs int colors")
    if game.is_omega:
        raise RequiresS1S4("bijection-hint needs finitely many prisoners")
    prof = _profile(game, RequiresS1S4)
    if not (prof["S1"] and prof["S4"]):
        raise RequiresS1S4(f"bijection-hint needs S1 and S4, got {prof}")
    s = _only(game.inning_set(1))
    others = [b for b in range(game.n) if b != s]
    slot = {b: i for i, b in enumerate(others)}

    def rules(a):
        if a == s:
            return lambda h, v: encode_ints(v[b] for b in others)
        return lambda h, v: decode_ints(h[s], len(others))[slot[a]]

    return _rule_predictor(game, "bijection-hint", {"speaker": s}, rules)


def parity_hint_predictor(game: Game, phi: ParityFunction) -> Predictor:
    """Hint strategy with a parity function standing in for the sum."""
    if not phi.fits(game):
        raise ParityDomainMismatch(f"parity function on {phi.slots} x {phi.space} does not fit the game")
    prof = _profile(game, RequiresS1S2)
    if not (prof["S1"] and prof["S2"]):
        raise RequiresS1S2(f"parity-hint needs S1 and S2, got {prof}")
    s = _only(game.inning_set(1))
    space = game.colors
    zero = space.zero

    def rules(a):
        if a == s:
            return lambda h, v: phi(v | PartialColoring({s}, {s: zero}))

        def later(h, v):
            arg = h.with_value(s, zero) | PartialColoring({a}, {a: zero}) | v.restrict(v.domain - h.domain)
            return space.sub(phi(arg), h[s])
        return later

    return _rule_predictor(game, "parity-hint", {"speaker": s, "phi": phi.provenance}, rules)


def finite_support_fep(game: Game) -> Predictor:
    """Finite-error predictor on the finite-support colorings of omega.

    All such colorings lie in the =* class of the zero coloring, whose chosen
    representative is zero itself, so each prisoner declares zero.
    """
    if not (game.is_omega and game.is_complete() and game.IN == 1):
        raise RequiresOmegaCompleteSimultaneous("fep-zero needs omega prisoners, complete visibility and one inning")
    zero = game.colors.zero

    def rules(a):
        return lambda h, v: zero

    return _rule_predictor(game, "fep-zero", {}, rules)


def restrict_to_first_inning(game: Game, p: Predictor, fill: int) -> tuple[Game, Predictor]:
    """Simultaneous subgame on A_1 with the induced predictor: each first
    speaker fills every hat it cannot see in the subgame with ``fill`` and
    declares what p would."""
    if game.IN < 2:
        raise RequiresMultiInning("need at least two innings")
    if game.is_omega:
        raise RequiresMultiInning("first-inning restriction is implemented for finite games")
    if not game.colors.contains(fill):
        raise FillOutsideSubcolors(f"fill {fill} is not a color of {game.colors}")
    first = sorted(game.inning_set(1))
    idx = {a: i for i, a in enumerate(first)}
    vis = [[idx[b] for b in game.seen(a) if b in idx] for a in first]
    sub = make_game(len(first), game.colors, vis, [1] * len(first))

    def rules(i):
        a = first[i]
        seen = game.seen(a)

        def induced(h, v):
            big = PartialColoring(seen, {b: (v[idx[b]] if b in idx else fill) for b in seen})
            return p.strategy(a)(EMPTY, big)
        return induced

    q = _rule_predictor(sub, "first-inning", {"from": p.name, "fill": fill, "prisoners": first}, rules)
    return sub, q


def restrict_colors(game: Game, p: Predictor, subcolors, fill: int) -> Predictor:
    """Keep p's guess when it lies in ``subcolors``, otherwise declare fill."""
    subcolors = frozenset(subcolors)
    if fill not in subcolors:
        raise FillOutsideSubcolors(f"fill {fill} not in {sorted(subcolors)}")
    if game.IN != 1:
        raise RequiresSimultaneous("color restriction replaces declarations, so it needs a single inning")

    def rules(a):
        inner = p.strategy(a)

        def restricted(h, v):
            c = inner(h, v)
            return c if c in subcolors else fill
        return restricted

    return _rule_predictor(game, "restrict-colors",
                           {"from": p.name, "subcolors": sorted(subcolors), "fill": fill}, rules)


def rehost(p: Predictor, game: Game) -> Predictor:
    """Same strategies, viewed as a predictor of a game with identical
    prisoners, visibility and innings but different colors."""
    if (game.prisoners, game.visibility, game.innings) != (p.game.prisoners, p.game.visibility, p.game.innings):
        raise MismatchedPredictor("rehost needs identical prisoners, visibility and innings")
    return Predictor(game, p.name, p.params, p.strategy_for, p.tables)


CONSTRUCTORS = {
    "mod-sum": mod_sum_predictor,
    "cycle-parity": cycle_parity_predictor,
    "hint-sum": hint_sum_predictor,
    "dual-hint": dual_hint_predictor,
    "bijection-hint": bijection_hint_predictor,
    "parity-hint": parity_hint_predictor,
    "fep-zero": finite_support_fep,
}


def build_predictor(name: str, game: Game, *, cycle=None, phi: ParityFunction | None = None) -> Predictor:
    """Construct a predictor by its CLI name with sensible defaults."""
    from .parity import finite_parity

    if name not in CONSTRUCTORS:
        raise HatError(f"unknown predictor {name!r}; choose from {sorted(CONSTRUCTORS)}")
    if name == "cycle-parity":
        if cycle is None:
            if game.is_omega:
                raise NotACycle("give an explicit cycle for omega games")
            cycle = find_cycle(game)
            if cycle is None:
                raise NotACycle("visibility graph is acyclic")
        return cycle_parity_predictor(game, cycle)
    if name == "parity-hint":
        return parity_hint_predictor(game, phi or finite_parity(game.colors, game.prisoners))
    return CONSTRUCTORS[name](game)


def table_space_size(game: Game) -> int:
    k = game.colors.n
    return sum(k ** (len(game.heard(a)) + len(game.seen(a))) for a in range(game.n))


def coloring_space_size(game: Game) -> int:
    return prod([game.colors.n] * game.n)

"""Hat games <A, K, V, I>: colors, prisoners, visibility, innings.

Prisoners are the integers ``0..n-1`` or, for ``OMEGA``, all naturals.
Infinite games are stored lazily: visibility is "complete except a finite
hidden list" per prisoner and innings are a default plus finite exceptions.
Colorings of a finite game are plain tuples; colorings of an omega game are
``PartialColoring`` objects over the whole of omega with base color zero.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .errors import (
    DuplicateTarget,
    GameSpecError,
    InapplicableConditions,
    LoopInVisibility,
    NonSurjectiveInnings,
    NotFiniteSupport,
    TooFewColors,
    TooFewPrisoners,
    UnknownPrisonerId,
)

OMEGA = "omega"


# ---------------------------------------------------------------------------
# colors

@dataclass(frozen=True)
class ColorSpace:
    """Either the cyclic group Z/nZ (``kind="mod"``) or the integers."""

    kind: str
    n: int | None = None

    def __post_init__(self):
        if self.kind == "mod":
            if not isinstance(self.n, int) or self.n < 2:
                raise TooFewColors(f"mod(n) needs n >= 2, got {self.n}")
        elif self.kind == "int":
            if self.n is not None:
                raise GameSpecError("int colors take no modulus")
        else:
            raise GameSpecError(f"unknown color kind {self.kind!r}")

    @classmethod
    def mod(cls, n: int) -> ColorSpace:
        return cls("mod", n)

    @classmethod
    def integers(cls) -> ColorSpace:
        return cls("int")

    @property
    def finite(self) -> bool:
        return self.kind == "mod"

    @property
    def size(self) -> int | None:
        return self.n

    zero = 0

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.n if self.n else x + y

    def neg(self, x: int) -> int:
        return (-x) % self.n if self.n else -x

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.n if self.n else x - y

    def norm(self, x: int) -> int:
        return x % self.n if self.n else x

    def sum(self, values: Iterable[int]) -> int:
        return self.norm(sum(values))

    def contains(self, x) -> bool:
        if isinstance(x, bool) or not isinstance(x, int):
            return False
        return 0 <= x < self.n if self.n else True

    def values(self) -> range:
        if not self.n:
            raise ValueError("the integers cannot be enumerated")
        return range(self.n)

    def to_json(self) -> dict:
        return {"kind": "mod", "n": self.n} if self.n else {"kind": "int"}

    def __str__(self):
        return f"mod({self.n})" if self.n else "int"


# ---------------------------------------------------------------------------
# prisoner sets: frozensets, or cofinite subsets of omega

@dataclass(frozen=True)
class Cofinite:
    """omega minus a finite set of excluded prisoners."""

    excluded: frozenset = frozenset()

    def __contains__(self, x) -> bool:
        return x not in self.excluded

    def __iter__(self):
        raise TypeError("cannot iterate an infinite prisoner set")

    def __len__(self):
        raise TypeError("infinite prisoner set has no len()")

    def __or__(self, other):
        if isinstance(other, Cofinite):
            return Cofinite(self.excluded & other.excluded)
        return Cofinite(self.excluded - frozenset(other))

    __ror__ = __or__

    def __and__(self, other):
        if isinstance(other, Cofinite):
            return Cofinite(self.excluded | other.excluded)
        return frozenset(other) - self.excluded

    __rand__ = __and__

    def __sub__(self, other):
        if isinstance(other, Cofinite):
            return other.excluded - self.excluded
        return Cofinite(self.excluded | frozenset(other))

    def __rsub__(self, other):
        return frozenset(other) & self.excluded

    def issubset(self, other) -> bool:
        if isinstance(other, Cofinite):
            return other.excluded <= self.excluded
        return False

    def __repr__(self):
        return f"Cofinite(omega - {sorted(self.excluded)})"


ALL = Cofinite()


def is_finite(s) -> bool:
    return not isinstance(s, Cofinite)


def subset(a, b) -> bool:
    if isinstance(a, Cofinite):
        return a.issubset(b)
    return all(x in b for x in a)


def set_to_json(s):
    if isinstance(s, Cofinite):
        return {"cofinite": True, "excluded": sorted(s.excluded)}
    return sorted(s)


# ---------------------------------------------------------------------------
# partial colorings

class PartialColoring:
    """A map from a prisoner set to colors.

    Finite domains hold every value explicitly.  Cofinite domains hold a
    ``base`` color plus the finitely many points that differ from it.
    """

    __slots__ = ("domain", "values", "base")

    def __init__(self, domain, values: Mapping[int, int], base: int = 0):
        if isinstance(domain, Cofinite):
            vals = {x: c for x, c in values.items() if c != base}
            if any(x not in domain for x in vals):
                raise ValueError("values outside domain")
        else:
            domain = frozenset(domain)
            vals = dict(values)
            if vals.keys() != domain:
                raise ValueError("finite partial coloring must be total on its domain")
            base = 0
        self.domain = domain
        self.values = vals
        self.base = base

    @classmethod
    def omega(cls, support: Mapping[int, int] | None = None, base: int = 0) -> PartialColoring:
        return cls(ALL, support or {}, base)

    @property
    def finite(self) -> bool:
        return not isinstance(self.domain, Cofinite)

    def __getitem__(self, x) -> int:
        if x not in self.domain:
            raise KeyError(x)
        return self.values.get(x, self.base)

    def get(self, x, default=None):
        return self[x] if x in self.domain else default

    def __contains__(self, x) -> bool:
        return x in self.domain

    def __len__(self):
        return len(self.domain)

    def support(self) -> dict:
        """Points whose value is not the zero color."""
        if self.finite:
            return {x: c for x, c in self.values.items() if c != 0}
        if self.base != 0:
            raise NotFiniteSupport("base color is not zero")
        return dict(self.values)

    def total(self, space: ColorSpace) -> int:
        if self.finite:
            return space.sum(self.values.values())
        if self.base != 0:
            raise NotFiniteSupport("cannot sum infinitely many nonzero colors")
        return space.sum(self.values.values())

    def restrict(self, sub) -> PartialColoring:
        sub = self.domain & sub
        if isinstance(sub, Cofinite):
            return PartialColoring(sub, {x: c for x, c in self.values.items() if x in sub}, self.base)
        return PartialColoring(sub, {x: self[x] for x in sub})

    def without(self, drop) -> PartialColoring:
        if not isinstance(drop, Cofinite):
            drop = frozenset(drop)
        return self.restrict(self.domain - drop)

    def with_value(self, x: int, c: int) -> PartialColoring:
        """f[x|c]; extends the domain when x is new."""
        if x in self.domain:
            vals = dict(self.values)
            vals[x] = c
            return PartialColoring(self.domain, vals, self.base)
        return self | PartialColoring({x}, {x: c})

    def __or__(self, other: PartialColoring) -> PartialColoring:
        """Union of two partial colorings that agree on their overlap."""
        dom = self.domain | other.domain
        if isinstance(dom, Cofinite):
            infinite = [p for p in (self, other) if not p.finite]
            if len(infinite) == 2 and infinite[0].base != infinite[1].base:
                raise ValueError("cannot join cofinite colorings with different bases")
            base = infinite[0].base
            vals = {**self.values, **other.values}
            for x in vals:
                for p in (self, other):
                    if x in p.domain and p[x] != vals[x]:
                        raise ValueError(f"conflicting values at {x}")
            return PartialColoring(dom, vals, base)
        vals = dict(self.values)
        for x, c in other.values.items():
            if vals.get(x, c) != c:
                raise ValueError(f"conflicting values at {x}")
            vals[x] = c
        return PartialColoring(dom, vals)

    def __eq__(self, other):
        if not isinstance(other, PartialColoring):
            return NotImplemented
        return (self.domain == other.domain and self.values == other.values
                and self.base == other.base)

    def __hash__(self):
        return hash((self.domain, frozenset(self.values.items()), self.base))

    def to_json(self):
        if self.finite:
            return {str(x): self.values[x] for x in sorted(self.values)}
        return {"base": self.base, "domain": set_to_json(self.domain),
                "values": {str(x): self.values[x] for x in sorted(self.values)}}

    def __repr__(self):
        if self.finite:
            return f"PartialColoring({dict(sorted(self.values.items()))})"
        return f"PartialColoring({self.domain!r}, base={self.base}, {dict(sorted(self.values.items()))})"


# ---------------------------------------------------------------------------
# games

@dataclass(frozen=True)
class OmegaVisibility:
    """Every prisoner sees all others except those in its ``hidden`` list."""

    hidden: Mapping[int, frozenset] = field(default_factory=dict)

    def seen(self, a: int) -> Cofinite:
        return Cofinite(frozenset({a}) | self.hidden.get(a, frozenset()))


@dataclass(frozen=True)
class OmegaInnings:
    default: int
    exceptions: Mapping[int, int] = field(default_factory=dict)

    def __call__(self, a: int) -> int:
        return self.exceptions.get(a, self.default)


@dataclass(frozen=True, eq=True)
class Game:
    prisoners: int | str
    colors: ColorSpace
    visibility: tuple | OmegaVisibility
    innings: tuple | OmegaInnings
    names: tuple | None = None

    def __post_init__(self):
        if self.is_omega:
            for a, hid in self.visibility.hidden.items():
                if a in hid:
                    raise LoopInVisibility(a)
            used = {self.innings.default, *self.innings.exceptions.values()}
        else:
            if len(self.visibility) != self.prisoners or len(self.innings) != self.prisoners:
                raise GameSpecError("visibility/innings length differs from prisoner count")
            for a, seen in enumerate(self.visibility):
                if a in seen:
                    raise LoopInVisibility(self.name_of(a))
                for b in seen:
                    if not (isinstance(b, int) and 0 <= b < self.prisoners):
                        raise UnknownPrisonerId(b)
            used = set(self.innings)
        if not used or min(used) < 1:
            raise GameSpecError("innings must be positive integers")
        missing = set(range(1, max(used) + 1)) - used
        if missing:
            raise NonSurjectiveInnings(missing)

    # -- basic accessors --------------------------------------------------

    @property
    def is_omega(self) -> bool:
        return self.prisoners == OMEGA

    @property
    def n(self) -> int:
        if self.is_omega:
            raise TypeError("omega game has no finite size")
        return self.prisoners

    def name_of(self, a: int):
        return self.names[a] if self.names else a

    def check(self, a) -> int:
        if isinstance(a, bool) or not isinstance(a, int) or a < 0:
            raise UnknownPrisonerId(a)
        if not self.is_omega and a >= self.prisoners:
            raise UnknownPrisonerId(a)
        return a

    def prisoner_set(self):
        return ALL if self.is_omega else frozenset(range(self.prisoners))

    def seen(self, a: int):
        self.check(a)
        if self.is_omega:
            return self.visibility.seen(a)
        return self.visibility[a]

    def sees(self, a: int, b: int) -> bool:
        return a != b and b in self.seen(a)

    def inning(self, a: int) -> int:
        self.check(a)
        return self.innings(a) if self.is_omega else self.innings[a]

    def hears(self, a: int, b: int) -> bool:
        return self.inning(b) < self.inning(a)

    @cached_property
    def IN(self) -> int:
        if self.is_omega:
            return max([self.innings.default, *self.innings.exceptions.values()])
        return max(self.innings)

    @cached_property
    def structure(self) -> GameStructure:
        return derive_structure(self)

    def heard(self, a: int):
        return self.structure.hearing(a)

    def inning_set(self, beta: int):
        return self.structure.inning_sets[beta - 1]

    def declaration_order(self) -> list[int]:
        """Finite games: prisoners sorted by (inning, index)."""
        return sorted(range(self.n), key=lambda a: (self.innings[a], a))

    def is_complete(self) -> bool:
        if self.is_omega:
            return not any(self.visibility.hidden.values())
        return all(len(v) == self.n - 1 for v in self.visibility)

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in sorted(self.visibility[a])]

    def exceptional(self) -> frozenset:
        """Omega games: every prisoner mentioned by an exception list."""
        if not self.is_omega:
            return self.prisoner_set()
        out = set(self.innings.exceptions)
        for a, hid in self.visibility.hidden.items():
            if hid:
                out.add(a)
                out |= hid
        return frozenset(out)

    def representatives(self, extra: Iterable[int] = ()) -> list[int]:
        """Finite games: all prisoners.  Omega games: the exceptional
        prisoners, ``extra``, and two fresh default prisoners that stand in
        for the infinitely many indistinguishable others."""
        if not self.is_omega:
            return list(range(self.n))
        pts = set(self.exceptional()) | set(extra)
        top = max(pts, default=-1)
        return sorted(pts | {top + 1, top + 2})

    def with_colors(self, colors: ColorSpace) -> Game:
        return Game(self.prisoners, colors, self.visibility, self.innings, self.names)

    def to_spec(self) -> dict:
        if self.is_omega:
            vis = {"default": "complete",
                   "exceptions": {str(a): sorted(h) for a, h in sorted(self.visibility.hidden.items()) if h}}
            inn = {"default": self.innings.default,
                   "exceptions": {str(a): i for a, i in sorted(self.innings.exceptions.items())}}
            return {"prisoners": OMEGA, "colors": self.colors.to_json(),
                    "visibility": vis, "innings": inn}
        vis = "complete" if self.is_complete() else [sorted(v) for v in self.visibility]
        return {"prisoners": list(self.names) if self.names else self.prisoners,
                "colors": self.colors.to_json(), "visibility": vis,
                "innings": list(self.innings)}


def make_game(n: int, colors: ColorSpace | int, visibility="complete", innings=None) -> Game:
    """Convenience constructor for finite games.

    ``colors`` may be an int k meaning mod(k); ``visibility`` is "complete",
    a list of seen-lists, or a list of (a, b) edges.
    """
    if isinstance(colors, int):
        colors = ColorSpace.mod(colors)
    if visibility == "complete":
        vis = tuple(frozenset(range(n)) - {a} for a in range(n))
    elif visibility and isinstance(visibility[0], tuple):
        adj = [set() for _ in range(n)]
        for a, b in visibility:
            adj[a].add(b)
        vis = tuple(frozenset(s) for s in adj)
    else:
        vis = tuple(frozenset(s) for s in visibility)
    inn = tuple(innings) if innings is not None else (1,) * n
    return Game(n, colors, vis, inn)


def omega_game(colors: ColorSpace | None = None, innings: Mapping[int, int] | None = None,
               default: int = 1, hidden: Mapping[int, Iterable[int]] | None = None) -> Game:
    colors = colors or ColorSpace.integers()
    vis = OmegaVisibility({a: frozenset(h) for a, h in (hidden or {}).items()})
    return Game(OMEGA, colors, vis, OmegaInnings(default, dict(innings or {})))


# ---------------------------------------------------------------------------
# parsing

_KEYS = {"prisoners", "colors", "visibility", "innings"}


def _parse_colors(raw) -> ColorSpace:
    if not isinstance(raw, dict):
        raise GameSpecError("colors must be an object")
    extra = set(raw) - {"kind", "n"}
    if extra:
        raise GameSpecError(f"unknown color keys {sorted(extra)}")
    kind = raw.get("kind")
    if kind == "mod":
        n = raw.get("n")
        if isinstance(n, bool) or not isinstance(n, int):
            raise GameSpecError("mod colors need an integer n")
        return ColorSpace.mod(n)
    if kind == "int":
        if "n" in raw:
            raise GameSpecError("int colors take no n")
        return ColorSpace.integers()
    raise GameSpecError(f"unknown color kind {kind!r}")


def _pos_int(x, what) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or x < 1:
        raise GameSpecError(f"{what} must be a positive integer, got {x!r}")
    return x


def validate_game(raw: Mapping) -> Game:
    """Parse and validate a game-spec object (the JSON format of the CLI)."""
    if not isinstance(raw, Mapping):
        raise GameSpecError("game spec must be an object")
    extra = set(raw) - _KEYS
    if extra:
        raise GameSpecError(f"unknown keys {sorted(extra)}")
    if "prisoners" not in raw or "colors" not in raw:
        raise GameSpecError("game spec needs 'prisoners' and 'colors'")
    colors = _parse_colors(raw["colors"])
    pr = raw["prisoners"]
    if pr == OMEGA:
        return _validate_omega(raw, colors)

    names = None
    if isinstance(pr, list):
        names = tuple(str(x) for x in pr)
        if len(set(names)) != len(names):
            raise GameSpecError("duplicate prisoner names")
        n = len(names)
    elif isinstance(pr, int) and not isinstance(pr, bool):
        n = pr
    else:
        raise GameSpecError("prisoners must be an integer, a list of names, or 'omega'")
    if n < 2:
        raise TooFewPrisoners(f"need at least 2 prisoners, got {n}")
    index = {nm: i for i, nm in enumerate(names)} if names else {}

    def ident(x):
        if names and isinstance(x, str):
            if x not in index:
                raise UnknownPrisonerId(x)
            return index[x]
        if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < n:
            raise UnknownPrisonerId(x)
        return x

    vis_raw = raw.get("visibility", "complete")
    if vis_raw == "complete":
        vis = tuple(frozenset(range(n)) - {a} for a in range(n))
    elif isinstance(vis_raw, list):
        if len(vis_raw) != n:
            raise GameSpecError(f"visibility needs {n} entries, got {len(vis_raw)}")
        rows = []
        for a, row in enumerate(vis_raw):
            if not isinstance(row, list):
                raise GameSpecError("visibility rows must be arrays")
            seen = frozenset(ident(b) for b in row)
            if a in seen:
                raise LoopInVisibility(names[a] if names else a)
            rows.append(seen)
        vis = tuple(rows)
    else:
        raise GameSpecError("visibility must be 'complete' or an array of arrays")

    inn_raw = raw.get("innings", [1] * n)
    if isinstance(inn_raw, list):
        if len(inn_raw) != n:
            raise GameSpecError(f"innings needs {n} entries, got {len(inn_raw)}")
        inn = tuple(_pos_int(i, "inning") for i in inn_raw)
    elif isinstance(inn_raw, dict):
        if set(inn_raw) - {"default", "exceptions"}:
            raise GameSpecError("innings object takes 'default' and 'exceptions'")
        d = _pos_int(inn_raw.get("default", 1), "default inning")
        lst = [d] * n
        for k, v in inn_raw.get("exceptions", {}).items():
            key = int(k) if not names else (index[k] if k in index else ident(int(k)))
            lst[ident(key)] = _pos_int(v, "inning")
        inn = tuple(lst)
    else:
        raise GameSpecError("innings must be an array or an object")
    return Game(n, colors, vis, inn, names)


def _omega_key(k) -> int:
    try:
        a = int(k)
    except (TypeError, ValueError):
        raise UnknownPrisonerId(k) from None
    if a < 0:
        raise UnknownPrisonerId(k)
    return a


def _validate_omega(raw, colors) -> Game:
    vis_raw = raw.get("visibility", "complete")
    hidden = {}
    if vis_raw == "complete":
        pass
    elif isinstance(vis_raw, dict):
        if set(vis_raw) - {"default", "exceptions"} or vis_raw.get("default", "complete") != "complete":
            raise GameSpecError("omega visibility must be {'default': 'complete', 'exceptions': {...}}")
        for k, lst in vis_raw.get("exceptions", {}).items():
            a = _omega_key(k)
            hid = frozenset(_omega_key(b) for b in lst)
            if a in hid:
                raise LoopInVisibility(a)
            hidden[a] = hid
    else:
        raise GameSpecError("omega visibility must be 'complete' or a default/exceptions object")
    inn_raw = raw.get("innings", {"default": 1})
    if not isinstance(inn_raw, dict) or set(inn_raw) - {"default", "exceptions"}:
        raise GameSpecError("omega innings must be {'default': D, 'exceptions': {...}}")
    d = _pos_int(inn_raw.get("default", 1), "default inning")
    exc = {_omega_key(k): _pos_int(v, "inning") for k, v in inn_raw.get("exceptions", {}).items()}
    exc = {a: i for a, i in exc.items() if i != d}
    return Game(OMEGA, colors, OmegaVisibility(hidden), OmegaInnings(d, exc))


# ---------------------------------------------------------------------------
# derived structure

@dataclass(frozen=True)
class GameStructure:
    inning_sets: tuple
    IN: int
    first_speakers: object
    heard_before: tuple  # heard_before[b-1] = union of A_g for g < b
    inning_of: object = field(compare=False, repr=False)
    size: int | None = None

    def hearing(self, a: int):
        """H(a): prisoners declaring strictly before a."""
        return self.heard_before[self.inning_of(a) - 1]

    @property
    def hearing_sets(self) -> tuple:
        """Finite games only: H(a) for every prisoner."""
        if self.size is None:
            raise TypeError("omega games have infinitely many hearing sets")
        return tuple(self.hearing(a) for a in range(self.size))


def derive_structure(game: Game) -> GameStructure:
    if game.is_omega:
        inn = game.innings
        sets = []
        for beta in range(1, game.IN + 1):
            if beta == inn.default:
                sets.append(Cofinite(frozenset(a for a, i in inn.exceptions.items() if i != beta)))
            else:
                sets.append(frozenset(a for a, i in inn.exceptions.items() if i == beta))
        lookup = inn
    else:
        sets = [frozenset(a for a in range(game.n) if game.innings[a] == b)
                for b in range(1, game.IN + 1)]
        lookup = game.innings.__getitem__
    prefix = [frozenset()]
    for s in sets[:-1]:
        prefix.append(prefix[-1] | s)
    size = None if game.is_omega else game.n
    return GameStructure(tuple(sets), game.IN, sets[0], tuple(prefix), lookup, size)


def _count(s) -> float:
    return float("inf") if isinstance(s, Cofinite) else len(s)


def condition_profile(game: Game) -> dict[str, bool]:
    """The conditions S1..S6 for a non-simultaneous game.

    Pairwise conditions are checked over ``game.representatives()``; for
    omega games all default prisoners behave identically, so two fresh
    ones cover every pair type.
    """
    if game.IN < 2:
        raise InapplicableConditions("conditions S1-S6 need at least two innings")
    reps = game.representatives()
    first = game.inning_set(1)
    pairs = [(a, b) for a in reps for b in reps if a != b]

    s2 = all(game.sees(a, b) or game.hears(a, b) for a, b in pairs)
    s3 = not any(game.sees(a, b) and game.hears(a, b) for a, b in pairs)
    s4 = all(game.sees(a, b) for a, b in pairs if game.inning(a) == 1)
    s6 = all(game.sees(a, b) for a, b in pairs
             if game.inning(a) >= 2 and (game.inning(b) == 1 or game.inning(b) >= game.inning(a)))
    return {"S1": _count(first) == 1, "S2": s2, "S3": s3, "S4": s4,
            "S5": _count(first) == 2, "S6": s6}


# ---------------------------------------------------------------------------
# colorings

def check_coloring(game: Game, f):
    if game.is_omega:
        if not isinstance(f, PartialColoring) or f.finite or f.domain != ALL:
            raise GameSpecError("omega colorings are PartialColoring over all of omega")
        if f.base != 0:
            raise NotFiniteSupport("omega colorings must have finite support over zero")
        vals = f.values.values()
    else:
        if len(f) != game.n:
            raise GameSpecError(f"coloring has {len(f)} values for {game.n} prisoners")
        vals = f
    for c in vals:
        if not game.colors.contains(c):
            raise GameSpecError(f"color {c!r} not in {game.colors}")
    return f


def value_at(f, a: int) -> int:
    return f[a]


def view_of(game: Game, a: int, f) -> PartialColoring:
    """v_a^f: the coloring restricted to V(a)."""
    seen = game.seen(a)
    if game.is_omega:
        return f.restrict(seen)
    return PartialColoring(seen, {b: f[b] for b in seen})


def mutate_coloring(f, changes, game: Game | None = None):
    """f[x|c] (or f[x,x'|c,c']); the input is left untouched."""
    changes = list(changes)
    if not 1 <= len(changes) <= 2:
        raise ValueError("mutate_coloring takes one or two changes")
    targets = [x for x, _ in changes]
    if len(set(targets)) != len(targets):
        raise DuplicateTarget(f"prisoner {targets[0]} changed twice")
    if isinstance(f, PartialColoring):
        out = f
        for x, c in changes:
            if game is not None:
                game.check(x)
            if x not in f.domain:
                raise UnknownPrisonerId(x)
            out = out.with_value(x, c)
        return out
    lst = list(f)
    for x, c in changes:
        if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < len(lst):
            raise UnknownPrisonerId(x)
        lst[x] = c
    return tuple(lst)


def all_colorings(game: Game) -> Iterator[tuple]:
    """Every coloring of a finite game with finite colors, lexicographically."""
    from itertools import product
    return product(game.colors.values(), repeat=game.n)


def coloring_from_index(i: int, n: int, k: int) -> tuple:
    out = [0] * n
    for pos in range(n - 1, -1, -1):
        i, out[pos] = divmod(i, k)
    return tuple(out)

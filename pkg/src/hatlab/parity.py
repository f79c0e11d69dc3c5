"""Parity functions and the natural-number tupler.

A parity function phi on colorings satisfies

    phi(f[x|g1]) - phi(f[x|g2]) == g2 - g1

for every coloring f, prisoner x and colors g1, g2.  Over a finite slot set
(or the finite-support colorings of omega) the negated sum is one.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import isqrt
from typing import Callable

from .errors import NotFiniteError, NotRobust, ParityDomainMismatch
from .game import ALL, OMEGA, ColorSpace, Game, PartialColoring


# ---------------------------------------------------------------------------
# Cantor tupling

def cantor_pair(x: int, y: int) -> int:
    return (x + y) * (x + y + 1) // 2 + y


def cantor_unpair(z: int) -> tuple[int, int]:
    w = (isqrt(8 * z + 1) - 1) // 2
    y = z - w * (w + 1) // 2
    return w - y, y


def zigzag(n: int) -> int:
    """Z -> N: 0, -1, 1, -2, 2, ... -> 0, 1, 2, 3, 4, ..."""
    return 2 * n if n >= 0 else -2 * n - 1


def unzigzag(m: int) -> int:
    return m // 2 if m % 2 == 0 else -(m + 1) // 2


@dataclass(frozen=True)
class Tupler:
    """Bijection N^width <-> N by left-associated Cantor pairing."""

    width: int

    def __post_init__(self):
        if self.width < 1:
            raise ValueError("tupler width must be >= 1")

    def encode(self, t) -> int:
        t = tuple(t)
        if len(t) != self.width:
            raise ValueError(f"expected {self.width} coordinates, got {len(t)}")
        if any(x < 0 for x in t):
            raise ValueError("tupler encodes naturals only")
        z = t[0]
        for x in t[1:]:
            z = cantor_pair(z, x)
        return z

    def decode(self, z: int) -> tuple:
        if z < 0:
            raise ValueError("tupler decodes naturals only")
        out = []
        for _ in range(self.width - 1):
            z, y = cantor_unpair(z)
            out.append(y)
        out.append(z)
        return tuple(reversed(out))


def nat_tupler(width: int) -> Tupler:
    return Tupler(width)


def encode_ints(values) -> int:
    """Z^k -> Z bijection: zigzag each coordinate, tuple, then unzigzag."""
    values = tuple(values)
    return unzigzag(Tupler(len(values)).encode(zigzag(v) for v in values))


def decode_ints(z: int, width: int) -> tuple:
    return tuple(unzigzag(m) for m in Tupler(width).decode(zigzag(z)))


# ---------------------------------------------------------------------------
# parity functions

@dataclass(frozen=True)
class ParityFunction:
    """phi: colorings of ``slots`` prisoners (an int or OMEGA) -> colors."""

    slots: int | str
    space: ColorSpace
    provenance: str
    evaluate: Callable = field(compare=False, repr=False)

    def __call__(self, f) -> int:
        if isinstance(f, PartialColoring):
            if self.slots == OMEGA:
                if f.domain != ALL:
                    raise ParityDomainMismatch("parity function needs a coloring of all of omega")
            elif f.domain != frozenset(range(self.slots)):
                raise ParityDomainMismatch(f"parity function needs a coloring of {self.slots} slots")
        elif self.slots == OMEGA or len(f) != self.slots:
            raise ParityDomainMismatch("coloring does not match the parity domain")
        return self.evaluate(f)

    def fits(self, game: Game) -> bool:
        return game.colors == self.space and game.prisoners == self.slots


def _values(f):
    return f.values.values() if isinstance(f, PartialColoring) else f


def finite_parity(space: ColorSpace, slots) -> ParityFunction:
    """phi(f) = -(sum of f) over a finite slot set or a finite support."""
    if slots == "omega finite-support":
        slots = OMEGA
    elif isinstance(slots, (set, frozenset, list, tuple)):
        slots = len(slots)

    def phi(f):
        if isinstance(f, PartialColoring) and not f.finite:
            return space.neg(f.total(space))
        return space.neg(space.sum(_values(f)))

    return ParityFunction(slots, space, "negative-sum", phi)


def parity_from_robust_fep(game: Game, p, trials: int = 200, seed: int = 0) -> ParityFunction:
    """phi(f) = sum over erring prisoners a of (P(f)(a) - f(a))."""
    from .evaluator import check_robust, sample_coloring
    from .strategies import run_predictor

    space = game.colors
    if not check_robust(game, p, trials=trials, seed=seed):
        raise NotRobust(f"predictor {p.name} changes its guesses under finite modifications")
    rng = random.Random(f"fep:{seed}")
    for _ in range(trials):
        rec = run_predictor(game, p, sample_coloring(game, rng))
        if game.is_omega and not rec.finite_errors:
            raise NotFiniteError(f"predictor {p.name} errs infinitely often")

    def phi(f):
        rec = run_predictor(game, p, f)
        if not rec.finite_errors:
            raise NotFiniteError(f"predictor {p.name} errs infinitely often")
        return space.sum(space.sub(rec.guess(a), f[a]) for a in rec.errors)

    return ParityFunction(game.prisoners, space, "from-robust-fep", phi)


# ---------------------------------------------------------------------------
# the defining equation

def parity_equation_holds(phi: ParityFunction, f, x: int, g1: int, g2: int) -> bool:
    space = phi.space
    if isinstance(f, PartialColoring):
        f1, f2 = f.with_value(x, g1), f.with_value(x, g2)
    else:
        f1 = f[:x] + (g1,) + f[x + 1:]
        f2 = f[:x] + (g2,) + f[x + 1:]
    return space.sub(phi(f1), phi(f2)) == space.sub(g2, g1)


@dataclass
class ParityCheck:
    passed: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"passed": self.passed, "failures": self.failures}


def _draw_color(space: ColorSpace, rng: random.Random, value_range: int) -> int:
    if space.finite:
        return rng.randrange(space.n)
    return rng.randrange(-value_range, value_range)


def check_parity_equation(phi: ParityFunction, trials: int, seed: int, *,
                          value_range: int = 1000, max_support: int = 6,
                          position_range: int = 64) -> ParityCheck:
    """Sample (f, x, g1, g2) from ``seed`` and test the defining equation."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(f"parity:{seed}")
    out = ParityCheck()
    space = phi.space
    for _ in range(trials):
        if phi.slots == OMEGA:
            pts = rng.sample(range(position_range), rng.randint(0, max_support))
            f = PartialColoring.omega({a: _draw_color(space, rng, value_range) for a in pts})
            x = rng.randrange(position_range)
        else:
            f = tuple(_draw_color(space, rng, value_range) for _ in range(phi.slots))
            x = rng.randrange(phi.slots)
        g1 = _draw_color(space, rng, value_range)
        g2 = _draw_color(space, rng, value_range)
        if parity_equation_holds(phi, f, x, g1, g2):
            out.passed += 1
        else:
            shown = f.to_json() if isinstance(f, PartialColoring) else list(f)
            out.failures.append({"coloring": shown, "x": x, "g1": g1, "g2": g2})
    return out

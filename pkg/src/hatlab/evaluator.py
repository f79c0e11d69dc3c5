"""Evaluation of predictors over all colorings or a seeded sample, with
adversary colorings for single-inning games."""
from __future__ import annotations

import random
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import islice, product

from .errors import (
    EdgePresent,
    GraphHasCycle,
    HatError,
    RequiresSimultaneous,
    RequiresTwoColors,
    SampledReportNotConclusive,
    SpaceTooLarge,
)
from .game import ColorSpace, Game, PartialColoring, coloring_from_index, mutate_coloring
from .strategies import Predictor, find_cycle, run_predictor

DEFAULT_CAP = 2 ** 24


# ---------------------------------------------------------------------------
# goals

@dataclass(frozen=True)
class Goal:
    kind: str  # "correct" (at least n) or "errors" (at most n)
    n: int

    def __post_init__(self):
        if self.kind not in ("correct", "errors") or self.n < 0:
            raise HatError(f"bad goal {self.kind} {self.n}")

    def required_correct(self, prisoners: int) -> int:
        return self.n if self.kind == "correct" else prisoners - self.n

    def met(self, correct: int, errors: int) -> bool:
        return correct >= self.n if self.kind == "correct" else errors <= self.n

    def __str__(self):
        return f"correct>={self.n}" if self.kind == "correct" else f"errors<={self.n}"


_GOAL = re.compile(r"^\s*(correct)\s*>=\s*(\d+)\s*$|^\s*(errors)\s*<=\s*(\d+)\s*$")


def parse_goal(text: str) -> Goal:
    m = _GOAL.match(text)
    if not m:
        raise HatError(f"goal must be 'correct>=N' or 'errors<=N', got {text!r}")
    if m.group(1):
        return Goal("correct", int(m.group(2)))
    return Goal("errors", int(m.group(4)))


# ---------------------------------------------------------------------------
# reports

def _shown(f):
    return f.to_json() if isinstance(f, PartialColoring) else list(f)


@dataclass
class EvaluationReport:
    """Aggregate statistics over a set of colorings.

    For finite games the histogram is keyed by the number of correct
    prisoners.  Omega games always have infinitely many correct prisoners,
    so there it is keyed by the number of errors and ``min_correct`` /
    ``total_correct`` are None.
    """

    prisoners: int | str
    mode: dict
    coloring_count: int = 0
    min_correct: int | None = None
    max_errors: int | float = 0
    total_correct: int | None = 0
    histogram: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    error_counts: dict = field(default_factory=dict)

    @property
    def keyed_by(self) -> str:
        return "errors" if self.prisoners == "omega" else "correct"

    @property
    def exhaustive(self) -> bool:
        return self.mode.get("kind") == "exhaustive"

    def add(self, order: int, f, rec) -> None:
        self.coloring_count += 1
        errs = len(rec.errors) if rec.finite_errors else float("inf")
        self.max_errors = max(self.max_errors, errs)
        if self.prisoners == "omega":
            self.total_correct = None
            bucket = errs
        else:
            c = len(rec.match)
            self.min_correct = c if self.min_correct is None else min(self.min_correct, c)
            self.total_correct += c
            bucket = c
        self.histogram[bucket] = self.histogram.get(bucket, 0) + 1
        if bucket not in self.witnesses or order < self.witnesses[bucket][0]:
            self.witnesses[bucket] = (order, f)
        if rec.finite_errors:
            for a in rec.errors:
                self.error_counts[a] = self.error_counts.get(a, 0) + 1

    def merge(self, other: EvaluationReport) -> EvaluationReport:
        out = EvaluationReport(self.prisoners, self.mode)
        out.coloring_count = self.coloring_count + other.coloring_count
        out.max_errors = max(self.max_errors, other.max_errors)
        if self.prisoners == "omega":
            out.total_correct = None
        else:
            mins = [m for m in (self.min_correct, other.min_correct) if m is not None]
            out.min_correct = min(mins) if mins else None
            out.total_correct = self.total_correct + other.total_correct
        for src in (self, other):
            for b, c in src.histogram.items():
                out.histogram[b] = out.histogram.get(b, 0) + c
            for b, w in src.witnesses.items():
                if b not in out.witnesses or w[0] < out.witnesses[b][0]:
                    out.witnesses[b] = w
            for a, c in src.error_counts.items():
                out.error_counts[a] = out.error_counts.get(a, 0) + c
        return out

    def error_positions(self) -> set:
        return set(self.error_counts)

    def to_json(self) -> dict:
        inf = lambda x: "inf" if x == float("inf") else x  # noqa: E731
        return {
            "colorings": self.coloring_count,
            "min_correct": self.min_correct,
            "max_errors": inf(self.max_errors),
            "total_correct": self.total_correct,
            "histogram": {str(inf(b)): self.histogram[b] for b in sorted(self.histogram)},
            "histogram_keyed_by": self.keyed_by,
            "witnesses": {str(inf(b)): _shown(self.witnesses[b][1]) for b in sorted(self.witnesses)},
            "error_counts": {str(a): self.error_counts[a] for a in sorted(self.error_counts)},
            "mode": self.mode,
        }


# ---------------------------------------------------------------------------
# exhaustive / sampled evaluation

def _require_enumerable(game: Game, cap: int) -> int:
    if game.is_omega or not game.colors.finite:
        raise SpaceTooLarge(float("inf"), cap)
    size = game.colors.n ** game.n
    if size > cap:
        raise SpaceTooLarge(size, cap)
    return size


def _block(game, p, start, stop, mode) -> EvaluationReport:
    rep = EvaluationReport(game.prisoners, mode)
    it = islice(product(game.colors.values(), repeat=game.n), start, stop)
    for i, f in enumerate(it, start):
        rep.add(i, f, run_predictor(game, p, f))
    return rep


def evaluate_exhaustive(game: Game, p: Predictor, cap: int = DEFAULT_CAP, workers: int = 1) -> EvaluationReport:
    """Every coloring, lexicographically; blocks may run on worker threads
    and are merged in order."""
    size = _require_enumerable(game, cap)
    mode = {"kind": "exhaustive"}
    workers = max(1, min(workers, size))
    bounds = [size * w // workers for w in range(workers + 1)]
    if workers == 1:
        return _block(game, p, 0, size, mode)
    with ThreadPoolExecutor(workers) as ex:
        parts = list(ex.map(lambda w: _block(game, p, bounds[w], bounds[w + 1], mode), range(workers)))
    out = parts[0]
    for part in parts[1:]:
        out = out.merge(part)
    return out


def sample_coloring(game: Game, rng: random.Random, value_range: int = 1000,
                    max_support: int = 3, exact_support: bool = False,
                    position_range: int | None = None):
    """One random coloring.  Finite games draw every hat; omega games draw a
    finite support of nonzero hats."""
    space = game.colors
    if not game.is_omega:
        if space.finite:
            return tuple(rng.randrange(space.n) for _ in range(game.n))
        return tuple(rng.randrange(value_range) for _ in range(game.n))
    size = max_support if exact_support else rng.randint(0, max_support)
    positions = rng.sample(range(position_range or 4 * max_support + 8), size)
    if space.finite:
        vals = {a: rng.randrange(1, space.n) for a in positions}
    elif value_range > 1:
        vals = {a: rng.randrange(1, value_range) for a in positions}
    else:
        vals = {}
    return PartialColoring.omega(vals)


SAMPLE_BLOCK = 256


def sampled_colorings(game: Game, n: int, seed: int, **kw):
    """The i-th sample comes from the stream of block i // SAMPLE_BLOCK, so
    any partition of the index range reproduces the same colorings."""
    rng = None
    for i in range(n):
        if i % SAMPLE_BLOCK == 0:
            rng = random.Random(f"{seed}:{i // SAMPLE_BLOCK}")
        yield sample_coloring(game, rng, **kw)


def evaluate_sampled(game: Game, p: Predictor, n: int, seed: int, value_range: int = 1000,
                     max_support: int = 3, exact_support: bool = False) -> EvaluationReport:
    if n < 1:
        raise HatError("need at least one sample")
    mode = {"kind": "sampled", "seed": seed, "n": n, "range": value_range}
    if game.is_omega:
        mode.update(max_support=max_support, exact_support=exact_support)
    rep = EvaluationReport(game.prisoners, mode)
    kw = dict(value_range=value_range, max_support=max_support, exact_support=exact_support)
    for i, f in enumerate(sampled_colorings(game, n, seed, **kw)):
        rep.add(i, f, run_predictor(game, p, f))
    return rep


def ps_membership(report: EvaluationReport, goal: Goal) -> bool:
    """Is the predictor in PS(goal)?  Sampled reports can only refute."""
    if goal.kind == "correct":
        holds = report.min_correct is not None and report.min_correct >= goal.n
        if report.prisoners == "omega":
            holds = True  # infinitely many prisoners are always correct
    else:
        holds = report.max_errors <= goal.n
    if not report.exhaustive and holds:
        raise SampledReportNotConclusive(f"{report.coloring_count} samples do not refute {goal}")
    return holds


# ---------------------------------------------------------------------------
# counting identity

def average_correct_check(game: Game, p: Predictor) -> bool:
    """Total correct guesses over all colorings equals |A| * |K|^(|A|-1)."""
    if game.IN != 1:
        raise RequiresSimultaneous("the counting identity holds for single-inning games")
    rep = evaluate_exhaustive(game, p)
    return rep.total_correct == game.n * game.colors.n ** (game.n - 1)


# ---------------------------------------------------------------------------
# adversaries

def acyclic_adversary(game: Game, p: Predictor) -> tuple:
    """A coloring on which every prisoner guesses wrong, built layer by layer
    along the acyclic visibility graph."""
    if game.IN != 1:
        raise RequiresSimultaneous("adversary needs a single inning")
    if game.colors != ColorSpace.mod(2):
        raise RequiresTwoColors("adversary needs mod(2) colors")
    if find_cycle(game) is not None:
        raise GraphHasCycle(f"visibility contains the cycle {find_cycle(game)}")
    placed: set = set()
    layers = []
    while len(placed) < game.n:
        # prisoners seeing only already-placed hats; nonempty since V is acyclic
        layer = [a for a in range(game.n) if a not in placed and game.seen(a) <= placed]
        layers.append(layer)
        placed.update(layer)
    f = [0] * game.n
    for layer in layers:
        guesses = run_predictor(game, p, tuple(f)).guesses
        for a in layer:
            f[a] = 1 - guesses[a]
    f = tuple(f)
    if run_predictor(game, p, f).match:
        raise AssertionError("adversary coloring left a correct prisoner")
    return f


def double_correct_coloring(game: Game, p: Predictor, a: int, b: int) -> tuple:
    """When a cannot see b: a coloring on which both a and b are correct."""
    if game.IN != 1:
        raise RequiresSimultaneous("construction needs a single inning")
    game.check(a)
    game.check(b)
    if a == b:
        raise HatError("need two distinct prisoners")
    if game.sees(a, b):
        raise EdgePresent(f"prisoner {a} sees {b}")
    f = (game.colors.zero,) * game.n
    fa = mutate_coloring(f, [(a, run_predictor(game, p, f).guess(a))])
    out = mutate_coloring(fa, [(b, run_predictor(game, p, fa).guess(b))])
    match = run_predictor(game, p, out).match
    if not {a, b} <= match:
        raise AssertionError("construction failed to make both prisoners correct")
    return out


def zero_correct_coloring(game: Game, p: Predictor, cap: int = DEFAULT_CAP):
    """First coloring (lexicographically) with nobody correct, or None."""
    _require_enumerable(game, cap)
    for f in product(game.colors.values(), repeat=game.n):
        if not run_predictor(game, p, f).match:
            return f
    return None


# ---------------------------------------------------------------------------
# robustness

def check_robust(game: Game, p: Predictor, trials: int = 200, seed: int = 0, cap: int = DEFAULT_CAP) -> bool:
    """Robust: =*-equivalent colorings get identical guesses.  In a finite
    game every two colorings are =*-equivalent."""
    if not game.is_omega and game.colors.finite and game.colors.n ** game.n <= cap:
        it = product(game.colors.values(), repeat=game.n)
        first = run_predictor(game, p, next(it)).guesses
        return all(run_predictor(game, p, f).guesses == first for f in it)
    rng = random.Random(f"robust:{seed}")
    for _ in range(trials):
        f = sample_coloring(game, rng)
        g = sample_coloring(game, rng)
        if run_predictor(game, p, f).guesses != run_predictor(game, p, g).guesses:
            return False
    return True


def coloring_at(game: Game, i: int) -> tuple:
    return coloring_from_index(i, game.n, game.colors.n)

"""Acceptance criteria 1-12, each under its time limit.

Run with ``pytest tests/test_acceptance.py -v`` (a PASS/FAIL line per
criterion is printed in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""
import random
import sys
import time
from itertools import product

import networkx as nx

from hatlab import (
    ColorSpace,
    Goal,
    average_correct_check,
    bijection_hint_predictor,
    check_parity_equation,
    check_robust,
    check_theorem,
    decide_ps,
    decode_ints,
    dual_hint_predictor,
    encode_ints,
    enumerate_digraphs,
    evaluate_exhaustive,
    evaluate_sampled,
    finite_parity,
    finite_support_fep,
    hint_sum_predictor,
    make_game,
    mod_sum_predictor,
    nat_tupler,
    omega_game,
    parity_from_robust_fep,
    parity_hint_predictor,
    ps_membership,
    restrict_to_first_inning,
    run_predictor,
    verify_certificate,
)
from hatlab.evaluator import sampled_colorings
from hatlab.strategies import random_table_predictor

RESULTS: dict = {}
INT = ColorSpace.integers()


def _timed(number, limit, check):
    t = time.perf_counter()
    ok = False
    try:
        check()
        ok = True
    finally:
        elapsed = time.perf_counter() - t
        passed = ok and elapsed < limit
        RESULTS[number] = (passed, elapsed, limit)
    assert elapsed < limit, f"criterion {number} took {elapsed:.2f}s (limit {limit}s)"


def _chain(n):
    return [list(range(a + 1, n)) for a in range(n)]


# 1 ---------------------------------------------------------------------------
def test_criterion_01_exactly_one_correct():
    def check():
        for n, total in [(2, 4), (3, 27), (4, 256)]:
            g = make_game(n, n)
            rep = evaluate_exhaustive(g, mod_sum_predictor(g))
            assert rep.histogram == {1: n ** n}
            assert rep.total_correct == total == n * n ** (n - 1)
    _timed(1, 1.0, check)


# 2 ---------------------------------------------------------------------------
def test_criterion_02_counting_lemma():
    def check():
        for n, k in [(2, 2), (3, 2), (2, 3), (3, 3)]:
            g = make_game(n, k)
            rng = random.Random(f"acceptance-2:{n}:{k}")
            for _ in range(100):
                p = random_table_predictor(g, rng)
                assert average_correct_check(g, p)
                assert evaluate_exhaustive(g, p).total_correct == n * k ** (n - 1)
    _timed(2, 10.0, check)


# 3 ---------------------------------------------------------------------------
def test_criterion_03_cyclic_equivalence():
    def check():
        agree = 0
        for edges in enumerate_digraphs(3):
            g = make_game(3, 2, [sorted(b for (x, b) in edges if x == a) for a in range(3)])
            c = decide_ps(g, Goal("correct", 1), budget=10 ** 7)
            dg = nx.DiGraph(list(edges))
            dg.add_nodes_from(range(3))
            cyclic = not nx.is_directed_acyclic_graph(dg)
            assert c.verdict in ("SAT", "UNSAT")
            if c.sat:
                assert verify_certificate(c)
            agree += (c.verdict == "SAT") == cyclic
        assert agree == 64
    _timed(3, 120.0, check)


# 4 ---------------------------------------------------------------------------
def test_criterion_04_impossibility():
    def check():
        for n, k in [(2, 3), (3, 4)]:
            assert decide_ps(make_game(n, k), Goal("correct", 1)).verdict == "UNSAT"
    _timed(4, 300.0, check)


# 5 ---------------------------------------------------------------------------
def test_criterion_05_hint_sum():
    def check():
        games = [make_game(5, 2, "complete", [1, 2, 2, 2, 2]),
                 make_game(5, 2, _chain(5), [1, 2, 3, 4, 5]),
                 make_game(4, 3, "complete", [1, 2, 2, 2]),
                 make_game(4, 3, _chain(4), [1, 2, 3, 4])]
        for g in games:
            rep = evaluate_exhaustive(g, hint_sum_predictor(g))
            assert rep.coloring_count == g.colors.n ** g.n
            assert set(rep.error_counts) <= {0}
            assert rep.max_errors == 1
    _timed(5, 1.0, check)


# 6 ---------------------------------------------------------------------------
def test_criterion_06_dual_hint():
    def check():
        for n, inn in [(3, [1, 1, 2]), (5, [1, 1, 2, 2, 2])]:
            g = make_game(n, 2, "complete", inn)
            p = dual_hint_predictor(g)
            count = 0
            for f in product(range(2), repeat=n):
                rec = run_predictor(g, p, f)
                assert len(rec.errors) == 1 and rec.errors <= {0, 1}
                assert (0 in rec.match) == (sum(f) % 2 == 0)
                count += 1
            assert count == 2 ** n
    _timed(6, 1.0, check)


# 7 ---------------------------------------------------------------------------
def test_criterion_07_bijection_hint():
    def check():
        g = make_game(4, INT, "complete", [1, 2, 2, 2])
        p = bijection_hint_predictor(g)
        rep = evaluate_sampled(g, p, 1000, seed=2024, value_range=10 ** 6)
        assert rep.coloring_count == 1000 and rep.max_errors <= 1
        assert set(rep.error_counts) <= {0}
        tp = nat_tupler(3)
        for f in sampled_colorings(g, 1000, 2024, value_range=10 ** 6):
            assert max(f) < 10 ** 6
            assert tp.decode(tp.encode(f[1:])) == f[1:]
            assert decode_ints(encode_ints(f[1:]), 3) == f[1:]
            assert decode_ints(run_predictor(g, p, f).guess(0), 3) == f[1:]
    _timed(7, 5.0, check)


# 8 ---------------------------------------------------------------------------
def test_criterion_08_parity_machinery():
    def check():
        for space, slots in [(ColorSpace.mod(2), 5), (ColorSpace.mod(5), 4), (INT, 3)]:
            chk = check_parity_equation(finite_parity(space, slots), 1000, seed=8)
            assert chk.passed == 1000 and not chk.failures
        g52 = make_game(5, 2, "complete", [1, 2, 2, 2, 2])
        rep = evaluate_exhaustive(g52, parity_hint_predictor(g52, finite_parity(ColorSpace.mod(2), 5)))
        assert ps_membership(rep, Goal("errors", 1))
        og = omega_game(INT, innings={0: 1}, default=2)
        p = parity_hint_predictor(og, finite_parity(INT, "omega finite-support"))
        rep = evaluate_sampled(og, p, 100, seed=8)
        assert rep.coloring_count == 100 and rep.max_errors <= 1
    _timed(8, 5.0, check)


# 9 ---------------------------------------------------------------------------
def test_criterion_09_fep_finite_support():
    def check():
        g = omega_game(INT)
        p = finite_support_fep(g)
        for f in sampled_colorings(g, 100, 9):
            assert run_predictor(g, p, f).errors == set(f.support())
        assert check_robust(g, p, seed=9)
    _timed(9, 1.0, check)


# 10 --------------------------------------------------------------------------
def test_criterion_10_robust_to_parity():
    def check():
        g = omega_game(INT)
        phi = parity_from_robust_fep(g, finite_support_fep(g), seed=10)
        chk = check_parity_equation(phi, 1000, seed=10)
        assert chk.passed == 1000
        ref = finite_parity(INT, "omega finite-support")
        for f in sampled_colorings(g, 1000, 10):
            assert phi(f) == ref(f)
        og = omega_game(INT, innings={0: 1}, default=2)
        rep = evaluate_sampled(og, parity_hint_predictor(og, phi), 100, seed=10)
        assert rep.max_errors <= 1
    _timed(10, 5.0, check)


# 11 --------------------------------------------------------------------------
def test_criterion_11_first_inning():
    def check():
        g = make_game(3, 2, "complete", [1, 1, 2])
        for fill in (0, 1):
            sub, q = restrict_to_first_inning(g, dual_hint_predictor(g), fill)
            rep = evaluate_exhaustive(sub, q)
            assert rep.coloring_count == 4
            assert ps_membership(rep, Goal("errors", 1))
    _timed(11, 1.0, check)


# 12 --------------------------------------------------------------------------
def test_criterion_12_useful_properties():
    def check():
        r = check_theorem("useful-props", {"n": 3, "ks": (2, 3)})
        assert r.instances > 0
        assert r.violations == [] and r.consistent == r.instances
    _timed(12, 300.0, check)


def summary_lines() -> list[str]:
    out = []
    for number in range(1, 13):
        if number not in RESULTS:
            out.append(f"criterion {number:2d}: NOT RUN")
            continue
        passed, elapsed, limit = RESULTS[number]
        out.append(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'} ({elapsed:.2f}s, limit {limit:g}s)")
    return out


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    print("\n".join(summary_lines()))
    sys.exit(1 if failed else 0)

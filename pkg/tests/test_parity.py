import pytest
from hypothesis import given, strategies as st

from hatlab import (
    ColorSpace,
    PartialColoring,
    check_parity_equation,
    decode_ints,
    encode_ints,
    finite_parity,
    finite_support_fep,
    mod_sum_predictor,
    nat_tupler,
    parity_from_robust_fep,
)
from hatlab.errors import NotRobust, ParityDomainMismatch
from hatlab.parity import cantor_pair, cantor_unpair, parity_equation_holds, unzigzag, zigzag

INT = ColorSpace.integers()


def _diagonal_order(limit):
    """Independent oracle: walk the diagonals of N x N and number the points."""
    out, z, s = {}, 0, 0
    while z < limit:
        for y in range(s + 1):
            out[(s - y, y)] = z
            z += 1
        s += 1
    return out


def test_cantor_matches_diagonal_walk():
    for (x, y), z in _diagonal_order(500).items():
        assert cantor_pair(x, y) == z
        assert cantor_unpair(z) == (x, y)


def test_cantor_known_value():
    assert cantor_pair(2, 1) == 7
    assert nat_tupler(2).decode(7) == (2, 1)


@given(st.lists(st.integers(0, 10**6), min_size=1, max_size=6))
def test_nat_tupler_roundtrip(t):
    tp = nat_tupler(len(t))
    assert tp.decode(tp.encode(t)) == tuple(t)


@given(st.integers(0, 10**9), st.integers(1, 5))
def test_nat_tupler_surjective(z, w):
    tp = nat_tupler(w)
    assert tp.encode(tp.decode(z)) == z


@given(st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=5))
def test_int_encoding_roundtrip(t):
    assert decode_ints(encode_ints(t), len(t)) == tuple(t)


@given(st.integers(-10**9, 10**9))
def test_zigzag(n):
    assert zigzag(n) >= 0 and unzigzag(zigzag(n)) == n


def test_zigzag_prefix():
    assert [unzigzag(m) for m in range(5)] == [0, -1, 1, -2, 2]


def test_tupler_rejects_negatives():
    with pytest.raises(ValueError):
        nat_tupler(2).encode((-1, 0))


@pytest.mark.parametrize("space, slots", [(ColorSpace.mod(2), 5), (ColorSpace.mod(5), 4), (INT, 3)])
def test_finite_parity_equation(space, slots):
    chk = check_parity_equation(finite_parity(space, slots), 1000, seed=11)
    assert chk.passed == 1000 and chk.ok


def test_omega_parity_examples():
    phi = finite_parity(INT, "omega finite-support")
    assert phi(PartialColoring.omega({2: 5})) == -5
    assert check_parity_equation(phi, 500, seed=3).ok


def test_parity_domain():
    phi = finite_parity(ColorSpace.mod(2), 3)
    with pytest.raises(ParityDomainMismatch):
        phi((0, 1))
    assert finite_parity(ColorSpace.mod(2), {4, 7, 9}).slots == 3


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=6), st.data())
def test_parity_equation_property(f, data):
    phi = finite_parity(INT, len(f))
    x = data.draw(st.integers(0, len(f) - 1))
    g1, g2 = data.draw(st.integers(-50, 50)), data.draw(st.integers(-50, 50))
    assert parity_equation_holds(phi, tuple(f), x, g1, g2)


def test_sign_convention_matters():
    # the plain sum violates the defining equation, so the sign is essential
    from hatlab.parity import ParityFunction
    plain = ParityFunction(3, INT, "plain-sum", lambda f: sum(f))
    assert not check_parity_equation(plain, 50, seed=0).ok


def test_parity_from_fep(omega_fep):
    phi = parity_from_robust_fep(omega_fep, finite_support_fep(omega_fep))
    assert phi(PartialColoring.omega({2: 5})) == -5
    assert phi(PartialColoring.omega({})) == 0
    assert phi(PartialColoring.omega({1: 3, 2: 7})) == -10


def test_parity_from_non_robust(g22):
    with pytest.raises(NotRobust):
        parity_from_robust_fep(g22, mod_sum_predictor(g22))

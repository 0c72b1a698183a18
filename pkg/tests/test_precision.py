import random

import pytest

from minusone.precision import (
    GammaPoleError,
    PrecisionContext,
    ZeroDenominatorError,
    gamma,
    hyp_terminating,
    pochhammer,
)

CTX = PrecisionContext(50)


def test_digits_floor():
    with pytest.raises(ValueError):
        PrecisionContext(10)
    assert PrecisionContext(15).digits == 15


def test_gamma_factorial():
    assert abs(gamma(5, CTX) - 24) < CTX.tol(2)


def test_gamma_half():
    assert abs(gamma(CTX.real("0.5"), CTX) - CTX.mp.sqrt(CTX.mp.pi)) < CTX.tol(2)


def test_gamma_modulus_one_plus_i():
    # independent oracle: reflection formula gives |Gamma(1+i)|^2 = pi/sinh(pi)
    mp = CTX.mp
    value = abs(gamma(CTX.complex(1, 1), CTX)) ** 2
    assert abs(value - mp.pi / mp.sinh(mp.pi)) < CTX.tol(4)


def test_gamma_poles():
    for z in (0, -1, -2, -7):
        with pytest.raises(GammaPoleError):
            gamma(z, CTX)


def test_gamma_recurrence_random_strip():
    mp = CTX.mp
    rng = random.Random(7)
    for _ in range(100):
        re = 0.1 + 4.9 * rng.random()
        im = (2 * rng.random() - 1) * min(10, (100 - re * re) ** 0.5)
        z = CTX.complex(repr(re), repr(im))
        lhs = gamma(z + 1, CTX)
        rhs = z * gamma(z, CTX)
        assert abs(lhs - rhs) <= CTX.tol(4) * abs(lhs)


def test_gamma_reflection_random():
    mp = CTX.mp
    rng = random.Random(11)
    for _ in range(50):
        z = CTX.complex(repr(0.05 + 0.9 * rng.random()), repr(2 * rng.random() - 1))
        value = gamma(z, CTX) * gamma(1 - z, CTX) * mp.sin(mp.pi * z) / mp.pi
        assert abs(value - 1) <= CTX.tol(4)


def test_gamma_conjugation_symmetry():
    mp = CTX.mp
    z = CTX.complex("1.25", "0.75")
    assert abs(gamma(mp.conj(z), CTX) - mp.conj(gamma(z, CTX))) < CTX.tol(4)


def test_pochhammer_values():
    assert pochhammer(CTX.real(3), 0, CTX) == 1
    assert abs(pochhammer(CTX.real(3), 2, CTX) - 12) == 0
    assert abs(pochhammer(CTX.real("0.5"), 3, CTX) - CTX.real("1.875")) == 0


def test_pochhammer_splitting_identity():
    rng = random.Random(3)
    for _ in range(20):
        a = CTX.complex(repr(rng.uniform(-3, 3)), repr(rng.uniform(-2, 2)))
        m, n = rng.randint(0, 6), rng.randint(0, 6)
        lhs = pochhammer(a, m + n, CTX)
        rhs = pochhammer(a, m, CTX) * pochhammer(a + m, n, CTX)
        assert abs(lhs - rhs) <= CTX.tol(4) * max(1, abs(lhs))


def test_hyp_single_term():
    # n = 0 terminates immediately regardless of the other parameters
    v = hyp_terminating([0, CTX.real("2.3"), 1, 1], [CTX.real("0.7"), 2, 3], 1, CTX)
    assert abs(v - 1) == 0


def test_hyp_2f1_degree_one():
    b, c, z = CTX.real("1.7"), CTX.real("0.6"), CTX.real("0.35")
    v = hyp_terminating([-1, b], [c], z, CTX)
    assert abs(v - (1 - b * z / c)) < CTX.tol(4)


def test_hyp_1f1_two_term():
    # 1F1(-1; 1/2; x^2) = 1 - 2 x^2 -> -1 at x = 1
    v = hyp_terminating([-1], [CTX.real("0.5")], 1, CTX)
    assert abs(v + 1) < CTX.tol(4)


def test_hyp_denominator_pole():
    with pytest.raises(ZeroDenominatorError):
        hyp_terminating([-3, 1], [-1], 1, CTX)


def test_hyp_against_brute_force_double():
    # independent double-precision oracle for n <= 10
    rng = random.Random(19)
    for _ in range(25):
        n = rng.randint(0, 10)
        extra = [rng.uniform(0.2, 3.0) for _ in range(2)]
        dens = [rng.uniform(0.5, 4.0) for _ in range(2)]
        z = rng.uniform(-1.5, 1.5)

        expected = 0.0
        term = 1.0
        for k in range(n + 1):
            expected += term
            if k == n:
                break
            factor = (-n + k)
            for a in extra:
                factor *= a + k
            for b in dens:
                factor /= b + k
            term *= factor * z / (k + 1)

        got = hyp_terminating(
            [-n] + [CTX.real(repr(a)) for a in extra],
            [CTX.real(repr(b)) for b in dens],
            CTX.real(repr(z)),
            CTX,
        )
        assert abs(got - expected) <= 1e-12 * max(1.0, abs(expected))

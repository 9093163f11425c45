import itertools
import math

import pytest

from majshuffle.qpoly import (
    ONE,
    ZERO,
    QPolynomial,
    divide_exact,
    inv_generating_function,
    maj_generating_function,
    partition_gf,
    q_binomial,
    q_binomial_by_division,
    q_factorial,
    q_integer,
    q_multinomial,
)


def test_construction_normalizes_trailing_zeros():
    assert QPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert QPolynomial((0, 0, 0)).coeffs == ()
    assert QPolynomial().coeffs == ()
    assert QPolynomial((0, 0, 3)).coeffs == (0, 0, 3)
    assert QPolynomial().degree == -1
    assert QPolynomial((5,)).degree == 0
    assert QPolynomial((0, 1)).degree == 1


def test_immutability():
    p = QPolynomial((1, 2))
    with pytest.raises(AttributeError):
        p.coeffs = (3,)


def test_coefficient_lookup_is_total():
    p = QPolynomial((1, 0, 3))
    assert p.coefficient(0) == 1
    assert p.coefficient(1) == 0
    assert p.coefficient(2) == 3
    assert p.coefficient(7) == 0
    assert p.coefficient(-1) == 0


def test_arithmetic():
    p = QPolynomial((1, 2, 1))
    r = QPolynomial((0, 1))
    assert p + ZERO == p
    assert p - p == ZERO
    assert p * ONE == p
    assert p * ZERO == ZERO
    assert (p + r).coeffs == (1, 3, 1)
    assert (p - r).coeffs == (1, 1, 1)
    assert (r * r).coeffs == (0, 0, 1)
    assert q_integer(2) * q_integer(2) == QPolynomial((1, 2, 1))
    # subtraction may shrink the degree
    assert (QPolynomial((1, 1)) - QPolynomial((0, 1))) == ONE


def test_shift():
    p = QPolynomial((1, 2))
    assert p.shift(0) == p
    assert p.shift(2).coeffs == (0, 0, 1, 2)
    assert ZERO.shift(5) == ZERO
    with pytest.raises(ValueError):
        p.shift(-1)


def test_evaluation():
    p = QPolynomial((1, 2, 3))
    assert p(0) == 1
    assert p(1) == 6
    assert p(2) == 17
    assert ZERO(10) == 0
    assert q_integer(5)(1) == 5


def test_equality_and_hash():
    assert QPolynomial((1, 2)) == QPolynomial((1, 2, 0))
    assert QPolynomial((1, 2)) != QPolynomial((2, 1))
    assert QPolynomial((1, 2)) != (1, 2)
    assert hash(QPolynomial((1, 2))) == hash(QPolynomial((1, 2, 0)))
    assert len({ONE, QPolynomial((1,)), ZERO}) == 2


def test_truthiness():
    assert not ZERO
    assert ONE
    assert QPolynomial((0, 1))


def test_str_formatting():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(QPolynomial((0, 1))) == "q"
    assert str(QPolynomial((0, 0, 1))) == "q^2"
    assert str(q_factorial(3)) == "1 + 2q + 2q^2 + q^3"
    assert str(QPolynomial((1, -1))) == "1 - q"
    assert str(QPolynomial((-1, -2))) == "-1 - 2q"
    assert str(QPolynomial((0, 3, 0, -1))) == "3q - q^3"
    assert repr(QPolynomial((1, 2))) == "QPolynomial((1, 2))"


def test_json_round_trip():
    for p in (ZERO, ONE, q_factorial(4), QPolynomial((0, -2, 5))):
        assert QPolynomial.from_json(p.to_json()) == p
    assert QPolynomial((1, 2)).to_json() == '{"coeffs": [1, 2]}'


def test_q_integer_and_factorial():
    assert q_integer(0) == ZERO
    assert q_integer(1) == ONE
    assert q_integer(4).coeffs == (1, 1, 1, 1)
    assert q_factorial(0) == ONE
    assert q_factorial(2).coeffs == (1, 1)
    for n in range(8):
        assert q_factorial(n)(1) == math.factorial(n)
        assert q_factorial(n).degree == n * (n - 1) // 2
    with pytest.raises(ValueError):
        q_integer(-1)
    with pytest.raises(ValueError):
        q_factorial(-2)


def test_q_binomial_basics():
    assert q_binomial(5, 0) == ONE
    assert q_binomial(5, 5) == ONE
    assert q_binomial(4, 2).coeffs == (1, 1, 2, 1, 1)
    for n in range(11):
        for k in range(n + 1):
            g = q_binomial(n, k)
            assert g == q_binomial(n, n - k)
            assert g(1) == math.comb(n, k)
            # coefficient list is a palindrome
            assert g.coeffs == g.coeffs[::-1]
    with pytest.raises(ValueError):
        q_binomial(3, 4)
    with pytest.raises(ValueError):
        q_binomial(3, -1)
    with pytest.raises(ValueError):
        q_binomial(-1, 0)


def test_q_binomial_recurrence_matches_division():
    for n in range(21):
        for k in range(n + 1):
            assert q_binomial(n, k) == q_binomial_by_division(n, k)


def test_divide_exact():
    assert divide_exact(q_integer(6), q_integer(3)) == QPolynomial((1, 0, 0, 1))
    assert divide_exact(ZERO, ONE) == ZERO
    p = QPolynomial((2, 7, 11, 3))
    d = QPolynomial((1, 3))
    assert divide_exact(p * d, d) == p
    with pytest.raises(ZeroDivisionError):
        divide_exact(ONE, ZERO)
    with pytest.raises(ArithmeticError, match="inexact"):
        divide_exact(q_integer(5), q_integer(3))
    with pytest.raises(ArithmeticError, match="inexact"):
        divide_exact(ONE, QPolynomial((0, 1)))
    with pytest.raises(ArithmeticError, match="inexact"):
        divide_exact(QPolynomial((1, 1)), QPolynomial((0, 2)))


def test_q_multinomial():
    assert q_multinomial(0, ()) == ONE
    assert q_multinomial(5, (5,)) == ONE
    assert q_multinomial(7, (3, 4)) == q_binomial(7, 3)
    for parts in ((1, 2, 3), (2, 2, 2), (4, 1, 1), (1, 1, 1, 1)):
        n = sum(parts)
        g = q_multinomial(n, parts)
        assert g(1) == math.factorial(n) // math.prod(math.factorial(p) for p in parts)
        num = q_factorial(n)
        den = ONE
        for p in parts:
            den = den * q_factorial(p)
        assert g == divide_exact(num, den)
        # order of the parts is immaterial
        assert g == q_multinomial(n, tuple(reversed(parts)))
    with pytest.raises(ValueError):
        q_multinomial(5, (2, 2))
    with pytest.raises(ValueError):
        q_multinomial(3, (4, -1))


def _multiset_permutations(letters):
    return sorted(set(itertools.permutations(letters)))


def test_q_multinomial_counts_maj_over_a_multiset():
    letters = (1, 1, 2, 2, 3)
    gf = maj_generating_function(_multiset_permutations(letters))
    assert gf == q_multinomial(5, (2, 2, 1))


def test_partition_gf_matches_gaussian_binomial():
    for bound in range(7):
        for count in range(7):
            assert partition_gf(bound, count) == q_binomial(bound + count, count)
    assert partition_gf(0, 0) == ONE
    assert partition_gf(3, 0) == ONE
    assert partition_gf(0, 4) == ONE
    with pytest.raises(ValueError):
        partition_gf(-1, 2)
    with pytest.raises(ValueError):
        partition_gf(2, -1)


def test_statistic_generating_functions_over_permutations():
    for n in range(6):
        perms = list(itertools.permutations(range(1, n + 1)))
        assert maj_generating_function(perms) == q_factorial(n)
        assert inv_generating_function(perms) == q_factorial(n)
    assert maj_generating_function([]) == ZERO
    assert inv_generating_function([]) == ZERO

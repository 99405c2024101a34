import pytest

from wptcodes.errors import NotPrime, ZeroElement, ZeroInverse
from wptcodes.gf import divisors, is_prime, make_field, prime_factors

PRIMES_TO_100 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                 59, 61, 67, 71, 73, 79, 83, 89, 97]


def brute_multiplicative_order(x, q):
    """Oracle: repeated multiplication until hitting 1."""
    acc = x % q
    t = 1
    while acc != 1:
        acc = acc * x % q
        t += 1
    return t


def test_is_prime_small():
    assert [n for n in range(2, 100) if is_prime(n)] == [p for p in PRIMES_TO_100 if p < 100]
    assert not is_prime(0) and not is_prime(1) and not is_prime(-7)


def test_prime_factors_and_divisors():
    assert prime_factors(30) == [2, 3, 5]
    assert prime_factors(16) == [2]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]


def test_make_field_q2():
    f = make_field(2)
    assert f.q == 2 and f.eta == 1


def test_make_field_q5_smallest_primitive_root():
    # oracle: powers of 2 mod 5 sweep the whole group {2, 4, 3, 1}
    seen = []
    acc = 1
    for _ in range(4):
        acc = acc * 2 % 5
        seen.append(acc)
    assert sorted(seen) == [1, 2, 3, 4]
    assert make_field(5).eta == 2


def test_make_field_rejects_composite():
    with pytest.raises(NotPrime):
        make_field(4)
    with pytest.raises(NotPrime):
        make_field(1)


def test_eta_is_always_smallest_generator():
    for q in PRIMES_TO_100:
        f = make_field(q)
        for g in range(1, f.eta):
            assert brute_multiplicative_order(g, q) < q - 1
        assert brute_multiplicative_order(f.eta, q) == q - 1


def test_pow_basics():
    f = make_field(5)
    assert f.pow(3, 0) == 1
    # Fermat: 2*2*2*2 = 16 = 1 mod 5
    assert 2 * 2 * 2 * 2 % 5 == 1
    assert f.pow(2, 4) == 1
    with pytest.raises(ZeroInverse):
        f.pow(0, -1)


def test_pow_negative_exponents():
    f = make_field(7)
    for x in range(1, 7):
        assert f.mul(f.pow(x, -1), x) == 1
        assert f.pow(x, -3) == f.pow(f.inv(x), 3)
    assert make_field(2).pow(1, -5) == 1


def test_pow_zero_base():
    f = make_field(5)
    assert f.pow(0, 0) == 1
    assert f.pow(0, 7) == 0


def test_pow_matches_repeated_multiplication():
    for q in [2, 3, 5, 7, 11, 13, 31]:
        f = make_field(q)
        for x in range(q):
            acc = 1
            for e in range(51):
                assert f.pow(x, e) == acc
                acc = acc * x % q


def test_element_order_examples():
    f = make_field(5)
    assert f.element_order(1) == 1
    assert f.element_order(4) == brute_multiplicative_order(4, 5) == 2
    assert f.element_order(3) == brute_multiplicative_order(3, 5) == 4
    with pytest.raises(ZeroElement):
        f.element_order(0)


def test_fermat_exhaustive_to_100():
    for q in PRIMES_TO_100:
        f = make_field(q)
        for x in f.nonzero_elements():
            assert f.pow(x, q - 1) == 1


def test_order_of_eta_powers():
    from math import gcd

    for q in [3, 5, 7, 11, 13, 17, 31]:
        f = make_field(q)
        for w in range(1, 2 * q):
            assert f.element_order(f.pow(f.eta, w)) == (q - 1) // gcd(q - 1, w)


def test_inv_of_zero():
    with pytest.raises(ZeroInverse):
        make_field(7).inv(0)

"""Arithmetic in the prime field GF(q) and its multiplicative group.

Field elements are plain integers in [0, q-1].  A ``PrimeField`` carries the
modulus q together with a fixed generator ``eta`` of the multiplicative
group.  The smallest primitive root is always chosen, so every ordering
derived from powers of ``eta`` (point enumerations, generator matrices) is
reproducible byte for byte across runs.
"""

from __future__ import annotations

from .errors import NotPrime, ZeroElement, ZeroInverse


def is_prime(n: int) -> bool:
    """Trial-division primality test (exact, intended for desk-scale q)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


class PrimeField:
    """The field GF(q) for prime q, with a fixed primitive root ``eta``.

    Immutable after construction; all methods are pure functions, so one
    instance can be shared freely across threads.
    """

    __slots__ = ("q", "eta")

    def __init__(self, q: int, eta: int):
        self.q = q
        self.eta = eta

    def __repr__(self) -> str:
        return f"PrimeField(q={self.q}, eta={self.eta})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and self.q == other.q

    def __hash__(self) -> int:
        return hash(("PrimeField", self.q))

    def normalize(self, x: int) -> int:
        return x % self.q

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.q

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.q

    def mul(self, x: int, y: int) -> int:
        return (x * y) % self.q

    def inv(self, x: int) -> int:
        x %= self.q
        if x == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return pow(x, self.q - 2, self.q)

    def pow(self, x: int, e: int) -> int:
        """x**e by square and multiply; x**0 == 1, negative e inverts first."""
        x %= self.q
        if e < 0:
            if x == 0:
                raise ZeroInverse("0 cannot be raised to a negative power")
            e %= self.q - 1 if self.q > 2 else 1
        return pow(x, e, self.q)

    def element_order(self, x: int) -> int:
        """Smallest t >= 1 with x**t == 1; always divides q - 1."""
        x %= self.q
        if x == 0:
            raise ZeroElement("order of 0 is undefined")
        for d in divisors(self.q - 1):
            if pow(x, d, self.q) == 1:
                return d
        raise AssertionError("unreachable: order divides q - 1")

    def nonzero_elements(self) -> range:
        return range(1, self.q)


def smallest_primitive_root(q: int) -> int:
    """Smallest generator of GF(q)^*, found by trial over 1, 2, 3, ..."""
    if q == 2:
        return 1
    factors = prime_factors(q - 1)
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in factors):
            return g
    raise AssertionError("unreachable: every prime field has a primitive root")


def make_field(q: int) -> PrimeField:
    """Construct GF(q), rejecting composite q.

    The returned field always carries the smallest primitive root, making
    downstream enumerations deterministic across runs.
    """
    if not is_prime(q):
        raise NotPrime(f"q must be prime, got {q}")
    return PrimeField(q, smallest_primitive_root(q))

"""Small deterministic number-theory helpers (desk-scale integers only)."""

import math


def is_prime(n):
    """Deterministic primality by trial division (fine under the size cap)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n):
    """Sorted list of distinct prime factors of n >= 1."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def euler_phi(n):
    phi = n
    for p in prime_factors(n):
        phi -= phi // p
    return phi


def divisors(n):
    """Sorted list of positive divisors of n."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def multiplicative_order(a, n):
    """Order of a in (Z/nZ)*; requires gcd(a, n) = 1."""
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    t, x = 1, a % n
    while x != 1:
        x = x * a % n
        t += 1
    return t


def units(n):
    """Residues in [1, n) coprime to n; [0] for n = 1."""
    if n == 1:
        return [0]
    return [e for e in range(1, n) if math.gcd(e, n) == 1]


def two_adic_split(n):
    """Write n = 2^u * n' with n' odd; returns (u, n')."""
    u = 0
    while n % 2 == 0:
        n //= 2
        u += 1
    return u, n

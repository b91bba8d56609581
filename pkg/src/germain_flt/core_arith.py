"""Exact modular arithmetic, primality, sieving and small factorization."""
from __future__ import annotations

import math
from typing import NamedTuple

from .errors import InvalidArgument, OutOfRange

# Width of the "machine word" range the toolkit promises to handle.
WORD_LIMIT = 2**63
# The first twelve primes as Miller-Rabin bases give a correct answer
# for every n below this bound.
MR_DETERMINISTIC_LIMIT = 318665857834031151167461
MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

TRIAL_DIVISION_LIMIT = 10**6
WILSON_LIMIT = 10**6
FERMAT_INDEX_LIMIT = 7

_SMALL_PRIMES = MR_BASES


class Factor(NamedTuple):
    prime: int
    exponent: int


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """Return ``base**exponent % modulus`` computed exactly."""
    if modulus < 2:
        raise InvalidArgument(f"modulus must be >= 2, got {modulus}")
    if exponent < 0:
        raise InvalidArgument(f"exponent must be >= 0, got {exponent}")
    return pow(base, exponent, modulus)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test.

    Exact for every n below ``MR_DETERMINISTIC_LIMIT`` (which covers all
    64-bit integers); larger inputs raise :class:`OutOfRange` rather than
    returning a probabilistic answer.
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    if n >= MR_DETERMINISTIC_LIMIT:
        raise OutOfRange(f"{n} exceeds the deterministic primality range")
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit in ascending order (sieve of Eratosthenes)."""
    if limit < 2:
        return []
    flags = prime_flags(limit)
    return [i for i in range(limit + 1) if flags[i]]


def prime_flags(limit: int) -> bytearray:
    """Byte flags where ``flags[i] == 1`` iff i is prime, for 0 <= i <= limit."""
    if limit < 0:
        raise InvalidArgument("limit must be >= 0")
    flags = bytearray([1]) * (limit + 1)
    flags[0] = 0
    if limit >= 1:
        flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return flags


_trial_primes: list[int] | None = None


def _trial_divisors() -> list[int]:
    global _trial_primes
    if _trial_primes is None:
        _trial_primes = sieve_primes(TRIAL_DIVISION_LIMIT)
    return _trial_primes


def _brent_rho(n: int) -> int:
    """Return a nontrivial factor of the odd composite n (Brent's variant)."""
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # batched gcd overshot; step one at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed on {n}")  # pragma: no cover


def _split(n: int, out: dict[int, int]) -> None:
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_rho(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> list[Factor]:
    """Prime factorization of 2 <= n < 2**63, ascending by prime.

    Trial division by primes below 10**6, then Brent's rho on whatever
    cofactor is left.
    """
    if n < 2:
        raise InvalidArgument(f"factorize needs n >= 2, got {n}")
    if n >= WORD_LIMIT:
        raise OutOfRange(f"{n} is outside the factorization range (< 2**63)")
    found: dict[int, int] = {}
    for q in _trial_divisors():
        if q * q > n:
            break
        if n % q == 0:
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            found[q] = e
    if n > 1:
        _split(n, found)
    return [Factor(q, e) for q, e in sorted(found.items())]


def wilson_check(n: int) -> bool:
    """True iff (n-1)! == -1 (mod n), accumulated modulo n."""
    if n < 2:
        raise InvalidArgument(f"wilson_check needs n >= 2, got {n}")
    if n > WILSON_LIMIT:
        raise OutOfRange(f"wilson_check is capped at n <= {WILSON_LIMIT}")
    acc = 1
    # chunks keep the inner product in C; once acc hits 0 it stays 0
    for start in range(2, n, 64):
        acc = acc * math.prod(range(start, min(start + 64, n))) % n
        if acc == 0:
            return False
    return acc == n - 1


def fermat_number(k: int) -> int:
    if k < 0:
        raise InvalidArgument("k must be >= 0")
    if k > FERMAT_INDEX_LIMIT:
        raise OutOfRange(f"fermat_number is limited to k <= {FERMAT_INDEX_LIMIT}")
    return 2 ** (2**k) + 1


def iroot(x: int, n: int) -> int:
    """Floor of the real n-th root of x >= 0, by integer Newton iteration."""
    if x < 0 or n < 1:
        raise InvalidArgument("iroot needs x >= 0 and n >= 1")
    if x < 2 or n == 1:
        return x
    if n == 2:
        return math.isqrt(x)
    r = 1 << -(-x.bit_length() // n)  # overestimate
    while True:
        s = ((n - 1) * r + x // r ** (n - 1)) // n
        if s >= r:
            return r
        r = s


def iroot_ceil(x: int, n: int) -> int:
    """Smallest integer b >= 0 with b**n >= x."""
    r = iroot(x, n)
    return r if r**n == x else r + 1


def is_square(x: int) -> bool:
    return x >= 0 and math.isqrt(x) ** 2 == x

"""Desk-scale checks of the classical claims: bounded Fermat-equation
search, exponent reduction, Case 1/2 split, and h^2 + n f^2 forms."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

import numpy as np

from .core_arith import iroot, is_prime, is_square
from .errors import InvalidArgument, NotFound, OutOfRange

FLT_BOUND_LIMIT = 10**3
CLAIM1807_BOUND_LIMIT = 100
CYCLOTOMIC_DEGREE_LIMIT = 30
CYCLOTOMIC_Z_LIMIT = 10**6
# the f-scan in represent() runs vectorized for m in [_VECTOR_MIN, _VECTOR_MAX)
_VECTOR_MIN = 10**8
_VECTOR_MAX = 2**62
_CHUNK = 1 << 18


@dataclass(frozen=True)
class FermatTriple:
    x: int
    y: int
    z: int
    n: int


@dataclass(frozen=True)
class FormWitness:
    m: int
    n: int
    h: int
    f: int


class Case(enum.Enum):
    CASE1 = "case1"
    CASE2 = "case2"


@dataclass(frozen=True)
class CyclotomicWitness:
    n: int
    x: int
    s: int
    value: int
    Y: int
    Z: int
    sign: str  # "plus" or "minus"

    def check(self) -> bool:
        nz2 = self.n * self.Z * self.Z
        rhs = self.Y**2 + nz2 if self.sign == "plus" else self.Y**2 - nz2
        return rhs == self.value


def reduce_exponent(n: int) -> int:
    """Smallest odd prime dividing n, or 4 when n is a power of two."""
    if n <= 2:
        raise InvalidArgument(f"reduce_exponent needs n > 2, got {n}")
    odd = n
    while odd % 2 == 0:
        odd //= 2
    if odd == 1:
        return 4
    q = 3
    while q * q <= odd:
        if odd % q == 0:
            return q
        q += 2
    return odd


def flt_search(n: int, bound: int) -> FermatTriple | None:
    """First (x, y, z) with x <= y <= bound and x**n + y**n == z**n."""
    if n < 2:
        raise InvalidArgument("n must be >= 2")
    if bound > FLT_BOUND_LIMIT:
        raise OutOfRange(f"flt_search bound is capped at {FLT_BOUND_LIMIT}")
    powers = [k**n for k in range(bound + 1)]
    for x in range(1, bound + 1):
        xn = powers[x]
        for y in range(x, bound + 1):
            s = xn + powers[y]
            z = iroot(s, n)
            if z**n == s:
                return FermatTriple(x, y, z, n)
    return None


def classify_case(x: int, y: int, z: int, p: int) -> Case:
    if 0 in (x, y, z):
        raise InvalidArgument("x, y, z must be nonzero")
    if p < 3 or not is_prime(p):
        raise InvalidArgument(f"p must be an odd prime, got {p}")
    return Case.CASE2 if (x * y * z) % p == 0 else Case.CASE1


def represent(m: int, n: int, *, positive: bool = False) -> FormWitness | None:
    """Witness m = h**2 + n*f**2 with the smallest f, or None.

    By default h and f may be zero; ``positive=True`` requires h, f >= 1.
    """
    if m < 1:
        raise InvalidArgument("m must be >= 1")
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    f = 1 if positive else 0
    if _VECTOR_MIN <= m < _VECTOR_MAX:
        hf = _scan_numpy(m, n, f, positive)
        return None if hf is None else FormWitness(m, n, *hf)
    while n * f * f <= m:
        rest = m - n * f * f
        h = isqrt(rest)
        if h * h == rest and (h > 0 or not positive):
            return FormWitness(m, n, h, f)
        f += 1
    return None


def _scan_numpy(m: int, n: int, f_start: int, positive: bool) -> tuple[int, int] | None:
    # every intermediate stays below m < 2**62, so int64 is exact
    f_stop = isqrt(m // n) + 1
    for lo in range(f_start, f_stop, _CHUNK):
        f = np.arange(lo, min(lo + _CHUNK, f_stop), dtype=np.int64)
        rest = np.int64(m) - np.int64(n) * f * f
        h = np.sqrt(rest.astype(np.float64)).astype(np.int64)
        for _ in range(2):
            h -= h * h > rest
            h += (h + 1) * (h + 1) <= rest
        hit = h * h == rest
        if positive:
            hit &= h > 0
        idx = np.flatnonzero(hit)
        if idx.size:
            i = int(idx[0])
            return int(h[i]), int(f[i])
    return None


def cyclotomic_value(n: int, x: int, s: int) -> int:
    """4 * (1 + x + ... + x**(n**s - 1)); equals 4(x**(n**s)-1)/(x-1) for x >= 2."""
    k = n**s
    if x == 1:
        return 4 * k
    return 4 * sum(x**i for i in range(k))


def cyclotomic_form_witness(n: int, x: int, s: int = 1, z_limit: int = CYCLOTOMIC_Z_LIMIT) -> CyclotomicWitness:
    """Find Y, Z with value = Y**2 +/- n*Z**2, smallest Z first.

    At each Z the plus sign is tried before the minus sign.
    Raises :class:`NotFound` when no Z <= z_limit works.
    """
    if n < 3 or not is_prime(n):
        raise InvalidArgument(f"n must be an odd prime, got {n}")
    if x < 1 or s < 1:
        raise InvalidArgument("x and s must be >= 1")
    if x >= 2 and n**s > CYCLOTOMIC_DEGREE_LIMIT:
        raise OutOfRange(f"n**s must be <= {CYCLOTOMIC_DEGREE_LIMIT} when x >= 2")
    value = cyclotomic_value(n, x, s)
    for Z in range(z_limit + 1):
        nz2 = n * Z * Z
        if is_square(value - nz2):
            return CyclotomicWitness(n, x, s, value, isqrt(value - nz2), Z, "plus")
        if is_square(value + nz2):
            return CyclotomicWitness(n, x, s, value, isqrt(value + nz2), Z, "minus")
    raise NotFound(f"no witness for n={n}, x={x}, s={s} with Z <= {z_limit}")


def claim1807_counterexample(n: int, bound: int, *, positive: bool = False) -> tuple[int, int] | None:
    """First pair a <= b <= bound where a**n + b**n has the form
    h**2 + n*f**2 but a + b does not."""
    if n < 3 or not is_prime(n):
        raise InvalidArgument(f"n must be an odd prime, got {n}")
    if bound > CLAIM1807_BOUND_LIMIT:
        raise OutOfRange(f"claim1807 bound is capped at {CLAIM1807_BOUND_LIMIT}")
    for a in range(1, bound + 1):
        for b in range(a, bound + 1):
            # the sum test is cheap, so it filters first
            if represent(a + b, n, positive=positive) is not None:
                continue
            if represent(a**n + b**n, n, positive=positive) is not None:
                return a, b
    return None

"""p-th power residues modulo a prime and the two hypotheses of
Sophie Germain's theorem (non-consecutivity, and p not a p-th power)."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .core_arith import is_prime
from .errors import InvalidArgument


@dataclass(frozen=True)
class ResidueSet:
    p: int
    theta: int
    residues: tuple[int, ...]
    _members: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.residues))

    def __contains__(self, r: int) -> bool:
        return r in self._members

    def __len__(self) -> int:
        return len(self.residues)

    def __iter__(self):
        return iter(self.residues)


@dataclass(frozen=True)
class ConsecutiveWitness:
    """r such that r and r + 1 are both nonzero p-th power residues."""

    lower: int

    @property
    def upper(self) -> int:
        return self.lower + 1


def _check_prime(name: str, value: int) -> None:
    if not is_prime(value):
        raise InvalidArgument(f"{name} must be prime, got {value}")


def pth_residues(p: int, theta: int) -> ResidueSet:
    """Enumerate {x**p mod theta : 1 <= x < theta}."""
    _check_prime("p", p)
    _check_prime("theta", theta)
    if theta < 3:
        raise InvalidArgument("theta must be >= 3")
    found = {pow(x, p, theta) for x in range(1, theta)}
    return ResidueSet(p, theta, tuple(sorted(found)))


def is_pth_power(a: int, p: int, theta: int) -> bool:
    """Exponent criterion: a is a p-th power mod theta iff
    a**((theta-1)/g) == 1 with g = gcd(theta-1, p)."""
    _check_prime("p", p)
    _check_prime("theta", theta)
    a %= theta
    if a == 0:
        raise InvalidArgument("zero is not a nonzero residue")
    g = gcd(theta - 1, p)
    return pow(a, (theta - 1) // g, theta) == 1


def nc_condition(rs: ResidueSet) -> tuple[bool, ConsecutiveWitness | None]:
    """Check non-consecutivity on 1..theta-1 without wraparound.

    Returns ``(True, None)`` when no two consecutive residues exist,
    otherwise ``(False, witness)`` for the smallest consecutive pair.
    """
    prev = None
    for r in rs.residues:
        if prev is not None and r == prev + 1:
            return False, ConsecutiveWitness(prev)
        prev = r
    return True, None


def first_consecutive(p: int, theta: int) -> ConsecutiveWitness | None:
    """Smallest r with r, r+1 both p-th powers mod theta, or None.

    Scans integers with the exponent criterion and stops at the first hit,
    so it never builds the residue set. Used by the survey code where
    theta can be large; it must agree with :func:`nc_condition`.
    """
    _check_prime("p", p)
    _check_prime("theta", theta)
    e = (theta - 1) // gcd(theta - 1, p)
    prev = True  # 1 is always a residue
    for r in range(2, theta):
        cur = pow(r, e, theta) == 1
        if cur and prev:
            return ConsecutiveWitness(r - 1)
        prev = cur
    return None


def qualifies(p: int, theta: int) -> bool:
    """Both hypotheses of Germain's theorem hold for the pair (p, theta)."""
    if p < 3:
        raise InvalidArgument("qualifies is defined only for odd primes p")
    return cond2_holds(p, theta) and first_consecutive(p, theta) is None


def cond2_holds(p: int, theta: int) -> bool:
    """p itself is not a p-th power residue mod theta."""
    return not is_pth_power(p, p, theta)

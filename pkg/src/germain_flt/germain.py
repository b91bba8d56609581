"""Auxiliary-prime certificates, Legendre's table and Germain primes."""
from __future__ import annotations

from dataclasses import dataclass

from .core_arith import is_prime, prime_flags
from .errors import InvalidArgument
from .residues import (
    ResidueSet,
    cond2_holds,
    first_consecutive,
    is_pth_power,
    nc_condition,
    pth_residues,
)

CASE1_CONCLUSION = "case1-divisible-by-p-squared"


@dataclass(frozen=True)
class AuxiliaryCertificate:
    """Evidence that theta = 2Np+1 satisfies both hypotheses for exponent p.

    Construction re-checks everything, so an instance that exists is a
    valid certificate.
    """

    p: int
    N: int
    theta: int
    residues: ResidueSet
    nc_holds: bool
    p_is_pth_power: bool
    conclusion: str = CASE1_CONCLUSION

    def __post_init__(self):
        if self.theta != 2 * self.N * self.p + 1:
            raise InvalidArgument("theta must equal 2*N*p + 1")
        if not self.nc_holds or self.p_is_pth_power:
            raise InvalidArgument(f"theta={self.theta} does not qualify for p={self.p}")
        if (self.residues.p, self.residues.theta) != (self.p, self.theta):
            raise InvalidArgument("residue set belongs to a different (p, theta)")
        if nc_condition(self.residues) != (True, None):
            raise InvalidArgument("residue set has a consecutive pair")
        if is_pth_power(self.p, self.p, self.theta):
            raise InvalidArgument("p is a p-th power modulo theta")
        if self.conclusion != CASE1_CONCLUSION:
            raise InvalidArgument(f"unknown conclusion tag {self.conclusion!r}")

    @classmethod
    def build(cls, p: int, N: int) -> "AuxiliaryCertificate":
        theta = 2 * N * p + 1
        rs = pth_residues(p, theta)
        holds, _ = nc_condition(rs)
        return cls(p, N, theta, rs, holds, is_pth_power(p, p, theta))


@dataclass(frozen=True)
class GermainPair:
    p: int
    safe: int


@dataclass(frozen=True)
class LegendreRow:
    p: int
    N_min: int
    theta: int
    residues: ResidueSet


def _check_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise InvalidArgument(f"p must be an odd prime, got {p}")


def _qualifying_ns(p: int, n_max: int):
    for N in range(1, n_max + 1):
        theta = 2 * N * p + 1
        if is_prime(theta) and cond2_holds(p, theta) and first_consecutive(p, theta) is None:
            yield N


def find_auxiliaries(p: int, n_max: int) -> list[AuxiliaryCertificate]:
    """Certificates for every qualifying theta = 2Np+1 with N <= n_max."""
    _check_odd_prime(p)
    if n_max < 1:
        raise InvalidArgument("n_max must be >= 1")
    return [AuxiliaryCertificate.build(p, N) for N in _qualifying_ns(p, n_max)]


def case1_certificate(p: int, n_max: int) -> AuxiliaryCertificate | None:
    """The smallest-N certificate, or None if nothing qualifies up to n_max."""
    _check_odd_prime(p)
    if n_max < 1:
        raise InvalidArgument("n_max must be >= 1")
    for N in _qualifying_ns(p, n_max):
        return AuxiliaryCertificate.build(p, N)
    return None


def legendre_table(p_max: int, n_max: int = 50) -> tuple[list[LegendreRow], list[int]]:
    """One row per odd prime 3 <= p < p_max, using the smallest qualifying N.

    Returns ``(rows, unresolved)`` where ``unresolved`` lists the primes
    with no qualifying N <= n_max.
    """
    if p_max < 3:
        raise InvalidArgument("p_max must be >= 3")
    rows, unresolved = [], []
    for p in range(3, p_max):
        if not is_prime(p):
            continue
        cert = case1_certificate(p, n_max)
        if cert is None:
            unresolved.append(p)
        else:
            rows.append(LegendreRow(p, cert.N, cert.theta, cert.residues))
    return rows, unresolved


def is_germain_prime(p: int) -> bool:
    return is_prime(p) and is_prime(2 * p + 1)


def germain_primes(limit: int) -> list[GermainPair]:
    """All Germain primes p <= limit, from a single sieve up to 2*limit+1."""
    if limit < 2:
        return []
    flags = prime_flags(2 * limit + 1)
    return [GermainPair(p, 2 * p + 1) for p in range(2, limit + 1) if flags[p] and flags[2 * p + 1]]

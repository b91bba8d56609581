"""Grand-plan surveys over theta = 2Np+1, the p = 3 obstruction, and the
product-of-auxiliaries size bound."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import prod

from .core_arith import iroot_ceil, is_prime, prime_flags
from .errors import InvalidArgument
from .residues import ConsecutiveWitness, cond2_holds, first_consecutive, qualifies


@dataclass(frozen=True)
class SurveyRow:
    p: int
    N: int
    theta: int
    theta_prime: bool
    nc_holds: bool | None = None
    cond2_holds: bool | None = None
    qualifies: bool = False
    witness: ConsecutiveWitness | None = None


@dataclass(frozen=True)
class SizeBound:
    p: int
    auxiliaries: tuple[int, ...]
    product: int
    bound: int


def _check_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise InvalidArgument(f"p must be an odd prime, got {p}")


def survey_cell(p: int, N: int) -> SurveyRow:
    theta = 2 * N * p + 1
    if not is_prime(theta):
        return SurveyRow(p, N, theta, False)
    witness = first_consecutive(p, theta)
    nc = witness is None
    c2 = cond2_holds(p, theta)
    return SurveyRow(p, N, theta, True, nc, c2, nc and c2, witness)


def nc_survey(p: int, n_max: int) -> list[SurveyRow]:
    """One row per N in 1..n_max; composite theta rows are kept."""
    _check_odd_prime(p)
    if n_max < 1:
        raise InvalidArgument("n_max must be >= 1")
    return [survey_cell(p, N) for N in range(1, n_max + 1)]


def _survey_job(args: tuple[int, int]) -> tuple[int, list[SurveyRow]]:
    p, n_max = args
    return p, nc_survey(p, n_max)


def full_survey(p_max: int, n_max: int, workers: int = 1) -> dict[int, list[SurveyRow]]:
    """nc_survey for each odd prime 3 <= p < p_max, keyed and ordered by p.

    With ``workers > 1`` the rows are computed in a process pool; the
    result is identical for any worker count.
    """
    if p_max < 3:
        raise InvalidArgument("p_max must be >= 3")
    if n_max < 1:
        raise InvalidArgument("n_max must be >= 1")
    if workers < 1:
        raise InvalidArgument("workers must be >= 1")
    primes = [p for p in range(3, p_max) if is_prime(p)]
    jobs = [(p, n_max) for p in primes]
    if workers == 1 or len(jobs) < 2:
        results = dict(map(_survey_job, jobs))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = dict(pool.map(_survey_job, jobs))
    return {p: results[p] for p in sorted(results)}


def libri_scan(theta_max: int) -> list[int]:
    """Primes theta = 1 (mod 6), theta <= theta_max, that qualify for p = 3."""
    if theta_max < 13:
        raise InvalidArgument("theta_max must be >= 13")
    flags = prime_flags(theta_max)
    return [t for t in range(7, theta_max + 1, 6) if flags[t] and qualifies(3, t)]


def size_lower_bound(p: int, n_max: int) -> SizeBound:
    """Bound on max(x, y, z) for a hypothetical solution with exponent p.

    Each qualifying auxiliary divides one of x, y, z, so their product
    divides xyz and max(x, y, z)**3 >= product.
    """
    _check_odd_prime(p)
    auxes = tuple(2 * N * p + 1 for N in range(1, n_max + 1)
                  if is_prime(2 * N * p + 1) and qualifies(p, 2 * N * p + 1))
    product = prod(auxes)
    return SizeBound(p, auxes, product, iroot_ceil(product, 3))

from itertools import permutations
from math import isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from germain_flt.core_arith import is_prime
from germain_flt.errors import InvalidArgument, NotFound, OutOfRange
from germain_flt.historical import (
    Case,
    CyclotomicWitness,
    FermatTriple,
    FormWitness,
    claim1807_counterexample,
    classify_case,
    cyclotomic_form_witness,
    cyclotomic_value,
    flt_search,
    reduce_exponent,
    represent,
)


def brute_represent(m, n, positive=False):
    lo = 1 if positive else 0
    hits = [(h, f) for f in range(lo, isqrt(m) + 1) for h in range(lo, isqrt(m) + 1) if h * h + n * f * f == m]
    return min(hits, key=lambda hf: hf[1]) if hits else None


def all_cyclotomic_reps(n, x, s, z_max):
    value = cyclotomic_value(n, x, s)
    out = []
    for Z in range(z_max):
        for sign, y2 in (("plus", value - n * Z * Z), ("minus", value + n * Z * Z)):
            if y2 >= 0 and isqrt(y2) ** 2 == y2:
                out.append((isqrt(y2), Z, sign))
    return out


@pytest.mark.parametrize("n,expected", [(12, 3), (8, 4), (100, 5), (3, 3), (4, 4), (49, 7), (2 * 97, 97), (1024, 4)])
def test_reduce_exponent_examples(n, expected):
    assert reduce_exponent(n) == expected


def test_reduce_exponent_properties():
    for n in range(3, 3000):
        r = reduce_exponent(n)
        assert n % r == 0
        assert r == 4 or (r % 2 == 1 and is_prime(r))
        if r != 4:
            assert all(n % q for q in range(3, r, 2))


def test_reduce_exponent_rejects_small():
    with pytest.raises(InvalidArgument):
        reduce_exponent(2)


def test_flt_search_pythagorean():
    assert flt_search(2, 5) == FermatTriple(3, 4, 5, 2)


@pytest.mark.parametrize("n", [3, 4])
def test_flt_search_none_to_100(n):
    assert flt_search(n, 100) is None


def test_flt_search_matches_power_table():
    for n, bound in ((2, 60), (3, 60)):
        table = {z**n: z for z in range(1, 2 * bound)}
        expected = next(((x, y, table[x**n + y**n]) for x in range(1, bound + 1)
                         for y in range(x, bound + 1) if x**n + y**n in table), None)
        got = flt_search(n, bound)
        assert (None if got is None else (got.x, got.y, got.z)) == expected


def test_flt_search_guards():
    with pytest.raises(OutOfRange):
        flt_search(3, 1001)
    with pytest.raises(InvalidArgument):
        flt_search(1, 10)


@pytest.mark.parametrize("t,case", [((1, 2, 3, 5), Case.CASE1), ((5, 2, 3, 5), Case.CASE2), ((7, 1, 1, 7), Case.CASE2)])
def test_classify_case_examples(t, case):
    assert classify_case(*t) is case


@given(st.lists(st.integers(min_value=1, max_value=10**6), min_size=3, max_size=3),
       st.sampled_from([3, 5, 7, 11, 13]))
def test_classify_case_is_symmetric(xyz, p):
    cases = {classify_case(*perm, p) for perm in permutations(xyz)}
    assert len(cases) == 1


def test_classify_case_rejects_zero():
    with pytest.raises(InvalidArgument):
        classify_case(0, 1, 1, 3)
    with pytest.raises(InvalidArgument):
        classify_case(1, 1, 1, 4)


@pytest.mark.parametrize("m,n,hf", [(28, 3, (5, 1)), (5, 3, None), (4, 3, (2, 0)), (3, 3, (0, 1))])
def test_represent_examples(m, n, hf):
    w = represent(m, n)
    assert (None if w is None else (w.h, w.f)) == hf


def test_represent_positive_flag():
    assert represent(4, 3, positive=True) == FormWitness(4, 3, 1, 1)
    assert represent(3, 3, positive=True) is None
    assert represent(9, 3, positive=True) is None


@pytest.mark.parametrize("n", range(1, 12))
def test_represent_matches_double_loop(n):
    for m in range(1, 501):
        for positive in (False, True):
            w = represent(m, n, positive=positive)
            assert (None if w is None else (w.h, w.f)) == brute_represent(m, n, positive)
            if w is not None:
                assert w.h**2 + n * w.f**2 == m


def test_represent_vectorized_range_matches_loop():
    # values above 10**8 take the numpy path
    def loop(m, n):
        f = 0
        while n * f * f <= m:
            r = m - n * f * f
            if isqrt(r) ** 2 == r:
                return isqrt(r), f
            f += 1
        return None

    cases = [(10**8 + 7, 3), (1234567891, 5), ((2**30 + 5) ** 2 + 3 * 12345**2, 3), (987654321012, 7), (3 * 10**9 + 1, 11)]
    for m, n in cases:
        w = represent(m, n)
        assert (None if w is None else (w.h, w.f)) == loop(m, n)


def test_represent_beyond_vector_range_uses_exact_loop():
    m = (2**40 + 1) ** 2 + 2 * 5**2
    w = represent(m, 2)
    assert w is not None and w.h**2 + 2 * w.f**2 == m and w.f <= 5


def test_represent_validation():
    with pytest.raises(InvalidArgument):
        represent(0, 3)


def test_cyclotomic_value_matches_division():
    for n, x, s in [(3, 2, 1), (5, 2, 1), (3, 2, 2), (3, 2, 3), (7, 5, 1), (5, 10, 2), (3, 7, 2)]:
        k = n**s
        assert cyclotomic_value(n, x, s) == 4 * (x**k - 1) // (x - 1)
    assert cyclotomic_value(5, 1, 2) == 100


@pytest.mark.parametrize("args,expected", [
    ((5, 2, 1), (12, 2, "minus")),
    ((3, 2, 1), (5, 1, "plus")),
    ((3, 2, 2), (44, 6, "plus")),
])
def test_cyclotomic_witness_smallest_z(args, expected):
    reps = all_cyclotomic_reps(*args, z_max=400)
    assert min(reps, key=lambda r: (r[1], r[2] != "plus")) == expected
    w = cyclotomic_form_witness(*args)
    assert (w.Y, w.Z, w.sign) == expected
    assert w.value == cyclotomic_value(*args) and w.check()


def test_other_known_representations_are_valid():
    for n, x, s, Y, Z, sign in [(5, 2, 1, 13, 3, "minus"), (3, 2, 2, 4, 26, "plus")]:
        assert CyclotomicWitness(n, x, s, cyclotomic_value(n, x, s), Y, Z, sign).check()


# smallest-Z witnesses (Z, sign) for s = 1, found by the enumeration oracle
SMALLEST_Z_TABLE = {
    (3, 2): (1, "plus"), (3, 3): (1, "plus"), (3, 4): (1, "plus"),
    (5, 2): (2, "minus"), (5, 3): (0, "plus"), (5, 4): (1, "minus"),
    (7, 2): (6, "plus"), (7, 3): (6, "minus"), (7, 4): (20, "plus"),
    (11, 2): (18, "plus"), (11, 3): (39, "plus"), (11, 4): (233, "plus"),
    (13, 2): (42, "minus"), (13, 3): (240, "plus"), (13, 4): (1092, "minus"),
}


@pytest.mark.parametrize("nx,expected", SMALLEST_Z_TABLE.items())
def test_cyclotomic_smallest_z_table(nx, expected):
    n, x = nx
    w = cyclotomic_form_witness(n, x, 1)
    assert (w.Z, w.sign) == expected and w.check()
    reps = all_cyclotomic_reps(n, x, 1, z_max=expected[0] + 1)
    assert min(r[1] for r in reps) == expected[0]


def test_sign_follows_n_mod_4_at_x_2():
    # the mod-4 sign rule holds at x = 2 but not for every x (see (7, 3), (13, 3))
    for n in (3, 5, 7, 11, 13):
        w = cyclotomic_form_witness(n, 2, 1)
        assert w.sign == ("minus" if n % 4 == 1 else "plus")


def test_cyclotomic_x_one():
    w = cyclotomic_form_witness(3, 1, 2)
    assert w.value == 36 and w.check()


def test_cyclotomic_errors():
    with pytest.raises(InvalidArgument):
        cyclotomic_form_witness(9, 2)
    with pytest.raises(OutOfRange):
        cyclotomic_form_witness(3, 2, 4)
    with pytest.raises(NotFound):
        # smallest Z for (7, 2) is 6
        cyclotomic_form_witness(7, 2, 1, z_limit=5)


@pytest.mark.parametrize("n,bound", [(3, 1), (5, 1)])
def test_claim1807_none(n, bound):
    assert claim1807_counterexample(n, bound) is None


@pytest.mark.parametrize("n,bound", [(5, 40), (7, 20), (11, 25), (3, 40)])
def test_claim1807_witness_is_self_certifying(n, bound):
    pair = claim1807_counterexample(n, bound)
    if pair is not None:
        a, b = pair
        assert represent(a**n + b**n, n) is not None
        assert represent(a + b, n) is None


def test_claim1807_first_witnesses():
    assert claim1807_counterexample(7, 20) == (2, 12)
    assert claim1807_counterexample(5, 40) == (22, 33)


def test_claim1807_is_lexicographically_first():
    n, bound = 7, 12
    expected = next(((a, b) for a in range(1, bound + 1) for b in range(a, bound + 1)
                     if brute_represent(a + b, n) is None and represent(a**n + b**n, n) is not None), None)
    assert claim1807_counterexample(n, bound) == expected == (2, 12)


def test_claim1807_guards():
    with pytest.raises(OutOfRange):
        claim1807_counterexample(3, 101)
    with pytest.raises(InvalidArgument):
        claim1807_counterexample(4, 10)

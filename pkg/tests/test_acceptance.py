"""Exit criteria. Every tolerance here is exact unless stated otherwise."""

import itertools
import random
import time
from fractions import Fraction

import pytest

from multishare import (
    Polynomial,
    PrimeModulus,
    RandomSource,
    Scheme,
    Share,
    blowup_factor,
    coeff_reconstruct,
    coeff_split,
    degeneracy_census,
    eq1_check,
    interpolate,
    points_reconstruct,
    points_split,
    poly_eval,
    shamir_reconstruct,
    shamir_split,
    true_degree,
)
from multishare.analysis import Method, degenerate_tuples, shamir_consistency_counts
from multishare.attacks import divisibility_attack, divisibility_control, max_unreduced_value, related_share_forgery
from multishare.cli import main
from multishare.errors import DegenerateSecretSet
from multishare.schemes import points_polynomial

GRID = [(p, k) for p in (3, 5, 7, 11) for k in (2, 3, 4) if k <= p]
ROUND_TRIP_PRIMES = [7, 31, 101, 999961]
CASES_PER_SCHEME = 1000


def criterion(n, title):
    return pytest.mark.criterion(n, title)


# 1 ------------------------------------------------------------------------------

@criterion(1, "census count p^(k-1) and failure rate 100/p on {3,5,7,11}x{2,3,4}")
def test_census_closed_form():
    start = time.perf_counter()
    for p, k in GRID:
        report = degeneracy_census(p, k, Method.INTERPOLATE)
        assert report.total_tuples == p**k
        assert report.degenerate_count == p ** (k - 1)
        assert report.failure_percent == Fraction(100, p)
        assert isinstance(report.failure_percent, Fraction)
        assert eq1_check(report)
    assert time.perf_counter() - start < 10.0


# 2 ------------------------------------------------------------------------------

@criterion(2, "interpolation and Vandermonde tests classify every tuple identically")
@pytest.mark.parametrize("p,k", GRID)
def test_methods_agree(p, k):
    by_interp = set(degenerate_tuples(p, k, Method.INTERPOLATE))
    by_row = set(degenerate_tuples(p, k, Method.VANDERMONDE))
    assert by_interp == by_row
    assert len(by_row) == p ** (k - 1)


# 3 ------------------------------------------------------------------------------

@criterion(3, "worked examples reproduce exactly")
def test_worked_examples():
    F31 = PrimeModulus(31)
    q = interpolate([(F31(i), F31(s)) for i, s in enumerate([2, 6, 12, 20])])
    assert q.values == [2, 3, 1, 0] and true_degree(q) == 2

    F3 = PrimeModulus(3)
    q = interpolate([(F3(i), F3(2)) for i in range(3)])
    assert q.values == [2, 0, 0] and true_degree(q) == 0

    F = PrimeModulus(999961)
    assert poly_eval(Polynomial.from_ints([15, 2, 3, 4], F), F(3)).value == 156
    assert poly_eval(Polynomial.from_ints([14, 2, 3, 4], F), F(3)).value == 155


# 4 ------------------------------------------------------------------------------

def _all_subsets_agree(shares, threshold, reconstruct, expected):
    for subset in itertools.combinations(shares, threshold):
        assert reconstruct(list(subset)) == expected


@criterion(4, f">= {CASES_PER_SCHEME} randomized round trips per scheme, all threshold subsets")
def test_round_trip_shamir():
    gen = random.Random(4001)
    for case in range(CASES_PER_SCHEME):
        F = PrimeModulus(ROUND_TRIP_PRIMES[case % 4])
        n = gen.randint(2, min(F.p - 1, 6))
        k = gen.randint(2, n)
        secret = F(gen.randrange(F.p))
        shares = shamir_split(secret, k, n, RandomSource(gen.getrandbits(32)))
        _all_subsets_agree(shares, k, shamir_reconstruct, secret)


@criterion(4, f">= {CASES_PER_SCHEME} randomized round trips per scheme, all threshold subsets")
def test_round_trip_points():
    gen = random.Random(4002)
    done = 0
    while done < CASES_PER_SCHEME:
        F = PrimeModulus(ROUND_TRIP_PRIMES[done % 4])
        k = gen.randint(2, 3 if F.p == 7 else 5)
        n = gen.randint(k, min(F.p - k, 7))
        secrets = [F(gen.randrange(F.p)) for _ in range(k)]
        try:
            shares = points_split(secrets, n)
        except DegenerateSecretSet:
            continue
        _all_subsets_agree(shares, k, points_reconstruct, secrets)
        done += 1


@criterion(4, f">= {CASES_PER_SCHEME} randomized round trips per scheme, all threshold subsets")
def test_round_trip_coeff():
    gen = random.Random(4003)
    for case in range(CASES_PER_SCHEME):
        F = PrimeModulus(ROUND_TRIP_PRIMES[case % 4])
        n = gen.randint(2, min(F.p - 1, 6))
        m = gen.randint(2, n)
        k = gen.randint(1, m)
        secrets = [gen.randrange(F.p) for _ in range(k)]
        if m == k and secrets[-1] == 0:
            secrets[-1] = 1
        if not any(secrets):
            secrets[0] = 1
        shares = coeff_split(secrets, m, n, RandomSource(gen.getrandbits(32)), p=F)
        _all_subsets_agree(shares, m, lambda s: [v.value for v in coeff_reconstruct(s, k)], secrets)


# 5 ------------------------------------------------------------------------------

@criterion(5, "one Shamir share is consistent with every candidate secret equally often")
@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_shamir_secrecy(p):
    for x in range(1, p):
        for y in range(p):
            counts = shamir_consistency_counts(p, 2, x, y)
            assert sorted(counts) == list(range(p))
            assert set(counts.values()) == {1}


# 6 ------------------------------------------------------------------------------

R_MAX = 20
U_VALUES = (2, 3, 5, 7)
P6 = PrimeModulus(999961)


@criterion(6, "divisibility attack: biconditional, search-space sizes, Shamir control")
@pytest.mark.parametrize("threshold", [2, 3, 4])
@pytest.mark.parametrize("u", U_VALUES)
def test_divisibility_biconditional(u, threshold):
    assert max_unreduced_value(R_MAX, u, threshold) < P6.p
    x = P6(u)
    for coeffs in itertools.product(range(R_MAX + 1), repeat=threshold):
        y = poly_eval(Polynomial.from_ints(coeffs, P6), x)
        inf = divisibility_attack(Share(Scheme.COEFF, P6, threshold, x, y), R_MAX)
        assert inf.divisible == (coeffs[0] % u == 0)


def _candidate_counts(r, u):
    """Count a_0 in 0..r split by divisibility, plus what the attack reports for each side."""
    cands = range(r + 1)
    divisible = sum(1 for a in cands if a % u == 0)
    # any coefficient vector realising each side, so the attack can be run on a real share
    reported = {}
    for a0 in (0, 1):
        y = poly_eval(Polynomial.from_ints([a0, 1], P6), P6(u))
        reported[a0 == 0] = divisibility_attack(Share(Scheme.COEFF, P6, 2, P6(u), y), r).search_space_size
    return divisible, len(cands) - divisible, reported


@criterion(6, "divisibility attack: biconditional, search-space sizes, Shamir control")
@pytest.mark.parametrize("u", U_VALUES)
def test_search_space_when_divisible(u):
    for r in range(1, R_MAX + 1):
        divisible, _, reported = _candidate_counts(r, u)
        assert reported[True] == divisible == r // u + 1


@criterion(6, "divisibility attack: biconditional, search-space sizes, Shamir control")
@pytest.mark.parametrize("u", U_VALUES)
def test_search_space_when_not_divisible(u):
    mismatches = []
    for r in range(1, R_MAX + 1):
        _, not_divisible, reported = _candidate_counts(r, u)
        assert reported[False] == r - r // u - 1
        if not_divisible != reported[False]:
            mismatches.append((r, not_divisible, reported[False]))
    assert not mismatches, (
        f"u={u}: (r, non-multiples of u in 0..r, reported r - r//u - 1) disagree for {mismatches}"
    )


@criterion(6, "divisibility attack: biconditional, search-space sizes, Shamir control")
@pytest.mark.parametrize("u", U_VALUES)
def test_shamir_control_is_chance(u):
    res = divisibility_control(Scheme.SHAMIR, P6, 3, u, R_MAX, 1000, seed=600 + u)
    assert res.trials >= 1000
    assert abs(res.share_divisible_rate - 1 / u) <= 0.05


# 7 ------------------------------------------------------------------------------

@criterion(7, "related-secrets forgery: end to end at p=7, linearity exhaustive to p=31")
def test_related_end_to_end():
    F = PrimeModulus(7)
    d = F(2)
    secrets = [F(1), F(2), F(3)]
    scaled = [d * s for s in secrets]
    # (1, 2, 3) lies on a line; the strict split would refuse it
    group_r = points_split(secrets, 3, strict=False)
    group_s = points_split(scaled, 3, strict=False)
    q, r = points_polynomial(secrets), points_polynomial(scaled)
    for u in F.elements():
        assert poly_eval(r, u) == d * poly_eval(q, u)
    for i, source in enumerate(group_r):
        forged = related_share_forgery(source, d, k=3).forged_share
        honest = [s for j, s in enumerate(group_s) if j != i][:2]
        assert points_reconstruct([forged] + honest) == scaled


PRIMES_TO_31 = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


@criterion(7, "related-secrets forgery: end to end at p=7, linearity exhaustive to p=31")
@pytest.mark.parametrize("p", PRIMES_TO_31)
def test_related_linearity_exhaustive(p):
    F = PrimeModulus(p)
    poly_of = {
        secrets: tuple(points_polynomial([F(s) for s in secrets]).values)
        for secrets in itertools.product(range(p), repeat=3)
    }
    for secrets, q in poly_of.items():
        for d in range(p):
            r = poly_of[tuple(d * s % p for s in secrets)]
            assert r == tuple(d * c % p for c in q)


# 8 ------------------------------------------------------------------------------

@criterion(8, "blow-up factors")
def test_blowup():
    assert blowup_factor(Scheme.COEFF, 6, 3, 3).blowup == 2
    for n in range(2, 12):
        assert blowup_factor(Scheme.SHAMIR, n, 2, 1).blowup == n
        assert blowup_factor(Scheme.COEFF, n, n, n).blowup == 1


# 9 ------------------------------------------------------------------------------

SPLITS = {
    "shamir": ["--scheme", "shamir", "--p", "101", "--secrets", "42", "--threshold", "3", "--n", "5", "--seed", "9"],
    "points": ["--scheme", "points", "--p", "101", "--secrets", "1,2,4", "--threshold", "3", "--n", "5"],
    "coeff": ["--scheme", "coeff", "--p", "999961", "--secrets", "5,6", "--threshold", "4", "--n", "6", "--seed", "9"],
}


@criterion(9, "identical seeds give byte-identical share files")
@pytest.mark.parametrize("scheme", sorted(SPLITS))
def test_determinism(scheme, tmp_path, capsys):
    for run in ("a", "b"):
        assert main(["split", *SPLITS[scheme], "--out-dir", str(tmp_path / run)]) == 0
    capsys.readouterr()
    a = sorted(p.name for p in (tmp_path / "a").iterdir())
    assert a == sorted(p.name for p in (tmp_path / "b").iterdir())
    for name in a:
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
